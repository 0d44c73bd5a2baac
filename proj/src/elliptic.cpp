#include "fgc/elliptic.hpp"

#include <algorithm>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"

namespace fgc::ec {

namespace {

Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("modular inverse of a residue that is not a unit");
    return r;
}

long val_p(const Int& a, const Int& p) {
    if (a == 0) throw Error("valuation of zero");
    Int rest;
    return static_cast<long>(remove_factor(a, p, rest));
}

} // namespace

EllipticCurve::EllipticCurve(const std::vector<Int>& a) {
    if (a.size() != 5) throw ConfigError("curve wants five coefficients a1,a2,a3,a4,a6");
    a1 = a[0]; a2 = a[1]; a3 = a[2]; a4 = a[3]; a6 = a[4];
    b2 = Int(a1 * a1 + 4 * a2);
    b4 = Int(2 * a4 + a1 * a3);
    b6 = Int(a3 * a3 + 4 * a6);
    b8 = Int(a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4);
    disc = Int(-b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6);
    if (disc == 0) throw ConfigError("singular curve: discriminant vanishes");
}

bool on_curve(const EllipticCurve& e, const ECPoint& p) {
    if (p.infinity) return true;
    Rat lhs = p.y * p.y + Rat(e.a1) * p.x * p.y + Rat(e.a3) * p.y;
    Rat rhs = p.x * p.x * p.x + Rat(e.a2) * p.x * p.x + Rat(e.a4) * p.x + Rat(e.a6);
    return lhs == rhs;
}

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p) {
    if (p.infinity) return p;
    ECPoint r;
    r.infinity = false;
    r.x = p.x;
    r.y = Rat(-p.y - Rat(e.a1) * p.x - Rat(e.a3));
    return r;
}

bool ec_equal(const ECPoint& p, const ECPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rat lambda;
    if (p.x == q.x) {
        if (ec_equal(q, ec_neg(e, p))) return ECPoint{};
        Rat den = Rat(2) * p.y + Rat(e.a1) * p.x + Rat(e.a3);
        lambda = Rat((Rat(3) * p.x * p.x + Rat(2 * e.a2) * p.x + Rat(e.a4) - Rat(e.a1) * p.y) / den);
    } else {
        lambda = Rat((q.y - p.y) / (q.x - p.x));
    }
    ECPoint r;
    r.infinity = false;
    r.x = Rat(lambda * lambda + Rat(e.a1) * lambda - Rat(e.a2) - p.x - q.x);
    r.y = Rat(lambda * (p.x - r.x) - p.y - Rat(e.a1) * r.x - Rat(e.a3));
    return r;
}

ECPoint ec_mul(const EllipticCurve& e, const Int& n, const ECPoint& p) {
    if (n < 0) return ec_mul(e, Int(-n), ec_neg(e, p));
    ECPoint acc; // identity
    ECPoint base = p;
    Int k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = ec_add(e, acc, base);
        base = ec_add(e, base, base);
        k >>= 1;
    }
    return acc;
}

FpCurve reduce_curve(const EllipticCurve& e, const Int& p) {
    if (p < 2 || !exact::is_prime(p)) throw ConfigError("reduction modulus must be prime");
    if (mod_reduce(e.disc, p) == 0) throw UnsupportedInput("bad reduction: prime divides the discriminant");
    return FpCurve{p, mod_reduce(e.a1, p), mod_reduce(e.a2, p), mod_reduce(e.a3, p),
                   mod_reduce(e.a4, p), mod_reduce(e.a6, p)};
}

FpPoint fp_neg(const FpCurve& c, const FpPoint& p) {
    if (p.infinity) return p;
    return FpPoint{false, p.x, mod_reduce(Int(-p.y - c.a1 * p.x - c.a3), c.p)};
}

FpPoint fp_add(const FpCurve& c, const FpPoint& p, const FpPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Int lambda;
    if (p.x == q.x) {
        FpPoint np = fp_neg(c, p);
        if (q.y == np.y) return FpPoint{};
        Int den = mod_reduce(Int(2 * p.y + c.a1 * p.x + c.a3), c.p);
        Int num = mod_reduce(Int(3 * p.x * p.x + 2 * c.a2 * p.x + c.a4 - c.a1 * p.y), c.p);
        lambda = mod_reduce(Int(num * mod_inverse(den, c.p)), c.p);
    } else {
        Int den = mod_reduce(Int(q.x - p.x), c.p);
        lambda = mod_reduce(Int(Int(q.y - p.y) * mod_inverse(den, c.p)), c.p);
    }
    FpPoint r;
    r.infinity = false;
    r.x = mod_reduce(Int(lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x), c.p);
    r.y = mod_reduce(Int(lambda * Int(p.x - r.x) - p.y - c.a1 * r.x - c.a3), c.p);
    return r;
}

FpPoint fp_mul(const FpCurve& c, const Int& n, const FpPoint& p) {
    if (n < 0) return fp_mul(c, Int(-n), fp_neg(c, p));
    FpPoint acc;
    FpPoint base = p;
    Int k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = fp_add(c, acc, base);
        base = fp_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

ReduceOutcome ec_reduce_mod_p(const EllipticCurve& e, const ECPoint& pt, const Int& p) {
    if (mod_reduce(e.disc, p) == 0) return {std::nullopt, "bad reduction: prime divides the discriminant"};
    FpCurve c = reduce_curve(e, p);
    if (pt.infinity) return {FpPoint{}, ""};
    Int xd = pt.x.get_den(), yd = pt.y.get_den();
    bool xbad = mod_reduce(xd, p) == 0, ybad = mod_reduce(yd, p) == 0;
    if (xbad || ybad) {
        // on-curve points have x, y valuations -2m, -3m at once
        if (!(xbad && ybad && 3 * val_p(xd, p) == 2 * val_p(yd, p)))
            throw Error("point denominators inconsistent with good reduction");
        return {FpPoint{}, ""};
    }
    FpPoint r;
    r.infinity = false;
    r.x = mod_reduce(Int(pt.x.get_num() * mod_inverse(xd, p)), p);
    r.y = mod_reduce(Int(pt.y.get_num() * mod_inverse(yd, p)), p);
    (void)c;
    return {r, ""};
}

Int ec_count_points(const EllipticCurve& e, const Int& p, const Int& naive_bound) {
    FpCurve c = reduce_curve(e, p); // also rejects bad primes
    if (p > naive_bound) throw UnsupportedInput("prime too large for direct point counting");
    Int count = 1; // infinity
    if (p == 2) {
        for (Int x = 0; x < 2; x = Int(x + 1))
            for (Int y = 0; y < 2; y = Int(y + 1)) {
                Int lhs = mod_reduce(Int(y * y + c.a1 * x * y + c.a3 * y), c.p);
                Int rhs = mod_reduce(Int(x * x * x + c.a2 * x * x + c.a4 * x + c.a6), c.p);
                if (lhs == rhs) count = Int(count + 1);
            }
    } else {
        // complete the square: (2y + a1 x + a3)^2 = 4 rhs(x) + (a1 x + a3)^2
        for (Int x = 0; x < p; x = Int(x + 1)) {
            Int rhs = Int(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            Int lin = Int(c.a1 * x + c.a3);
            Int d = mod_reduce(Int(4 * rhs + lin * lin), p);
            int chi = mpz_legendre(d.get_mpz_t(), p.get_mpz_t());
            count = Int(count + 1 + chi);
        }
    }
    Int trace = Int(count - p - 1);
    if (trace * trace > 4 * p) throw Error("point count violates the Hasse bound");
    return count;
}

Int fp_point_order(const FpCurve& c, const FpPoint& pt, const Int& group_size) {
    if (!fp_mul(c, group_size, pt).infinity) throw Error("group size does not annihilate the point");
    Int ord = group_size;
    auto fac = exact::factor_rat(Rat(group_size));
    for (const auto& [q, e] : fac.factors) {
        for (long i = 0; i < e; ++i) {
            Int cand = Int(ord / q);
            if (fp_mul(c, cand, pt).infinity) ord = cand; else break;
        }
    }
    return ord;
}

EllipticGroup validate_elliptic(const EllipticSpec& spec) {
    validate_shape(spec);
    EllipticCurve curve(spec.a);
    for (const auto& tuple : spec.gens)
        for (const auto& pt : tuple)
            if (!on_curve(curve, pt)) throw ConfigError("generator coordinate is not on the curve");
    return EllipticGroup{curve, spec.copies, spec.gens};
}

std::optional<std::vector<Int>> dependence_search(const EllipticGroup& g, long bound) {
    if (bound < 1) throw ConfigError("dependence search wants a positive bound");
    const long m = static_cast<long>(g.gens.size());
    if (m == 0) return std::nullopt;
    const long k = g.copies;
    const long width = 2 * bound + 1;

    // a few good primes for cheap modular filtering
    std::vector<Int> primes;
    for (Int q = 2; static_cast<long>(primes.size()) < 3 && q < 10000; q = Int(q + 1)) {
        if (!exact::is_prime(q) || mod_reduce(g.curve.disc, q) == 0) continue;
        primes.push_back(q);
    }

    struct Filter {
        FpCurve c;
        // mult[i][j][s] = (s - bound) * gens[i][j] reduced
        std::vector<std::vector<std::vector<FpPoint>>> mult;
    };
    std::vector<Filter> filters;
    for (const Int& q : primes) {
        Filter f{reduce_curve(g.curve, q), {}};
        f.mult.resize(m);
        bool usable = true;
        for (long i = 0; i < m && usable; ++i) {
            f.mult[i].resize(k);
            for (long j = 0; j < k && usable; ++j) {
                auto red = ec_reduce_mod_p(g.curve, g.gens[i][j], q);
                if (!red.point) { usable = false; break; }
                std::vector<FpPoint> row(width);
                row[bound] = FpPoint{}; // zero multiple
                for (long s = 1; s <= bound; ++s) {
                    row[bound + s] = fp_add(f.c, row[bound + s - 1], *red.point);
                    row[bound - s] = fp_neg(f.c, row[bound + s]);
                }
                f.mult[i][j] = std::move(row);
            }
        }
        if (usable) filters.push_back(std::move(f));
    }

    // grow the sup-norm shell by shell so the first hit is a shortest relation
    for (long shell = 1; shell <= bound; ++shell) {
        std::vector<long> c(m, -shell);
        auto advance = [&]() -> bool {
            for (long i = m - 1; i >= 0; --i) {
                if (c[i] < shell) { ++c[i]; return true; }
                c[i] = -shell;
            }
            return false;
        };
        do {
            bool on_shell = false;
            for (long v : c) on_shell = on_shell || v == shell || v == -shell;
            if (!on_shell) continue; // covered by a smaller shell
            bool pass = true;
            for (const auto& f : filters) {
                for (long j = 0; j < k && pass; ++j) {
                    FpPoint acc;
                    for (long i = 0; i < m; ++i) acc = fp_add(f.c, acc, f.mult[i][j][bound + c[i]]);
                    if (!acc.infinity) pass = false;
                }
                if (!pass) break;
            }
            if (!pass) continue;
            // exact check over Q
            bool exact_zero = true;
            for (long j = 0; j < k && exact_zero; ++j) {
                ECPoint acc;
                for (long i = 0; i < m; ++i)
                    acc = ec_add(g.curve, acc, ec_mul(g.curve, Int(c[i]), g.gens[i][j]));
                if (!acc.infinity) exact_zero = false;
            }
            if (!exact_zero) continue;
            // torsion forbids dividing out the content; only the sign is normalized
            std::vector<Int> rel;
            rel.reserve(m);
            for (long v : c) rel.emplace_back(v);
            for (const Int& v : rel) {
                if (v == 0) continue;
                if (v < 0) for (Int& w : rel) w = Int(-w);
                break;
            }
            return rel;
        } while (advance());
    }
    return std::nullopt;
}

} // namespace fgc::ec
