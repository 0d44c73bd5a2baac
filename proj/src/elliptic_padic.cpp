#include "fgc/elliptic_padic.hpp"

#include <algorithm>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/par.hpp"

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

long digits_base_p(long x, const Int& p) {
    long d = 0;
    Int v(x);
    while (v > 0) {
        ++d;
        v = Int(v / p);
    }
    return d;
}

using Series = std::vector<Rat>; // coefficient of t^i at index i, fixed truncation

Series series_mul(const Series& a, const Series& b) {
    const long len = static_cast<long>(a.size());
    Series r(len, Rat(0));
    for (long i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j < len; ++j) {
            if (b[j] == 0) continue;
            r[i + j] = Rat(r[i + j] + Rat(a[i] * b[j]));
        }
    }
    return r;
}

Series series_inv(const Series& a) {
    const long len = static_cast<long>(a.size());
    if (a[0] == 0) throw Error("power series inverse wants a unit constant term");
    Series r(len, Rat(0));
    r[0] = Rat(1 / a[0]);
    for (long n = 1; n < len; ++n) {
        Rat acc(0);
        for (long i = 1; i <= n; ++i) acc = Rat(acc + Rat(a[i] * r[n - i]));
        r[n] = Rat(Rat(-acc) / a[0]);
    }
    return r;
}

// smallest K with k*v - v_p(k) >= N for every k > K, so the dropped tail of
// sum c_k t^k is below p^-N when v(t) = v
long truncation_order(long v, long N, const Int& p) {
    long K = 1;
    while ((K + 1) * v - digits_base_p(K + 1, p) < N) ++K;
    return K;
}

// evaluates L(t(n P)) mod p^N for rational points, with n = |E(F_p)|;
// the result is n times the elliptic logarithm
struct LogEngine {
    const EllipticCurve& e;
    Int p;
    long N;
    Int n_count;
    long kmax;
    Series F;

    LogEngine(const EllipticCurve& curve, const Int& prime, long prec)
        : e(curve), p(prime), N(prec) {
        if (N < 1) throw ConfigError("positive p-adic precision required");
        n_count = ec_count_points(e, p); // validates the prime and good reduction
        kmax = truncation_order(1, N, p);
        F = formal_differential(e, std::max<long>(kmax - 1, 1));
    }

    Int raw_log(const ECPoint& pt) const {
        ECPoint q = ec_mul(e, n_count, pt);
        if (q.infinity) return Int(0); // torsion point, exact zero
        Rat t0 = Rat(Rat(-q.x) / q.y);
        Int rest;
        long v = static_cast<long>(remove_factor(t0.get_num(), p, rest)) -
                 static_cast<long>(remove_factor(t0.get_den(), p, rest));
        if (v < 1) throw Error("kernel point with nonpositive parameter valuation");
        long K = std::min(truncation_order(v, N, p), kmax);
        long M = N + digits_base_p(K, p);
        Int pm = pow_int(p, static_cast<unsigned long>(M));
        Int pn = pow_int(p, static_cast<unsigned long>(N));
        Int r0 = mod_reduce(Int(mod_reduce(t0.get_num(), pm) * mod_inverse(mod_reduce(t0.get_den(), pm), pm)), pm);
        Int tpow = r0, sum = 0;
        for (long k = 1; k <= K; ++k) {
            const Rat& fk = F[k - 1];
            if (fk != 0) {
                if (mod_reduce(fk.get_den(), p) == 0)
                    throw Error("differential coefficient is not p-integral");
                Int kpart;
                long ek = static_cast<long>(remove_factor(Int(k), p, kpart));
                Int tshift = Int(tpow / pow_int(p, static_cast<unsigned long>(ek)));
                Int coef = mod_reduce(Int(mod_reduce(fk.get_num(), pn) *
                                          mod_inverse(mod_reduce(fk.get_den(), pn), pn)),
                                      pn);
                coef = mod_reduce(Int(coef * mod_inverse(mod_reduce(kpart, pn), pn)), pn);
                sum = mod_reduce(Int(sum + tshift * coef), pn);
            }
            tpow = mod_reduce(Int(tpow * r0), pm);
        }
        return sum;
    }
};

padic::NoriScanReport aggregate_scan(const std::vector<Int>& primes,
                                     const std::vector<padic::DpOutcome>& outcomes) {
    padic::NoriScanReport rep;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (outcomes[i].report) {
            rep.rows.push_back(*outcomes[i].report);
            rep.all_certified = rep.all_certified && outcomes[i].report->certified;
        } else {
            rep.skipped.emplace_back(primes[i], outcomes[i].skip_reason);
        }
    }
    if (rep.rows.empty()) {
        rep.verdict = "no data";
        return rep;
    }
    bool constant = true;
    for (const auto& row : rep.rows) constant = constant && row.d_p == rep.rows[0].d_p;
    rep.verdict = constant ? "constant" : "varies";
    if (constant) rep.d_value = rep.rows[0].d_p;
    return rep;
}

} // namespace

std::vector<Rat> formal_differential(const EllipticCurve& e, long order) {
    if (order < 1) throw ConfigError("differential expansion wants order at least 1");
    const long len = order + 1;
    Rat a1(e.a1), a2(e.a2), a3(e.a3), a4(e.a4), a6(e.a6);

    // w = t^3 sigma(t) on the curve w = t^3 + a1 t w + a2 t^2 w + a3 w^2 + a4 t w^2 + a6 w^3;
    // each pass fixes one more coefficient of sigma
    Series sigma(len, Rat(0));
    sigma[0] = Rat(1);
    for (long pass = 0; pass < len; ++pass) {
        Series s2 = series_mul(sigma, sigma);
        Series s3 = series_mul(s2, sigma);
        Series next(len, Rat(0));
        next[0] = Rat(1);
        for (long j = 1; j < len; ++j) {
            Rat acc(0);
            acc = Rat(acc + Rat(a1 * sigma[j - 1]));
            if (j >= 2) acc = Rat(acc + Rat(a2 * sigma[j - 2]));
            if (j >= 3) acc = Rat(acc + Rat(a3 * s2[j - 3]));
            if (j >= 4) acc = Rat(acc + Rat(a4 * s2[j - 4]));
            if (j >= 6) acc = Rat(acc + Rat(a6 * s3[j - 6]));
            next[j] = acc;
        }
        sigma = std::move(next);
    }

    // x = t^-2 / sigma, y = -t^-3 / sigma; with u = 1/sigma the differential
    // dx / (2y + a1 x + a3) becomes (t u' - 2u) / (-2u + a1 t u + a3 t^3) dt
    Series u = series_inv(sigma);
    Series num(len, Rat(0)), den(len, Rat(0));
    for (long j = 0; j < len; ++j) {
        num[j] = Rat(Rat(j - 2) * u[j]);
        Rat d = Rat(Rat(-2) * u[j]);
        if (j >= 1) d = Rat(d + Rat(a1 * u[j - 1]));
        if (j == 3) d = Rat(d + a3);
        den[j] = d;
    }
    Series f = series_mul(num, series_inv(den));
    if (f[0] != 1) throw Error("differential expansion lost its normalization");
    return f;
}

FormalLogSeries formal_log(const EllipticCurve& e, long order) {
    if (order < 2) throw ConfigError("log expansion wants order at least 2");
    Series f = formal_differential(e, order - 1);
    FormalLogSeries out;
    out.order = order;
    out.c.assign(order + 1, Rat(0));
    for (long k = 1; k <= order; ++k) out.c[k] = Rat(f[k - 1] / Rat(k));
    return out;
}

padic::PadicInt elliptic_padic_log(const EllipticCurve& e, const ECPoint& pt, const Int& p, long n) {
    if (!on_curve(e, pt)) throw ConfigError("point is not on the curve");
    if (n < 1) throw ConfigError("positive p-adic precision required");
    Int unit_count;
    long e_n = static_cast<long>(remove_factor(ec_count_points(e, p), p, unit_count));
    LogEngine eng(e, p, n + e_n);
    Int raw = eng.raw_log(pt); // n_count times the logarithm, mod p^(n+e_n)
    Int pe = pow_int(p, static_cast<unsigned long>(e_n));
    if (mod_reduce(raw, pe) != 0)
        throw UnsupportedInput("elliptic logarithm of this point is not p-integral");
    Int pn = pow_int(p, static_cast<unsigned long>(n));
    Int res = mod_reduce(Int(Int(raw / pe) * mod_inverse(mod_reduce(unit_count, pn), pn)), pn);
    return padic::PadicInt(p, n, res);
}

padic::DpOutcome ec_dp_rank(const EllipticSpec& spec, const Int& p, long n, long n_cap) {
    EllipticGroup g = validate_elliptic(spec);
    if (p < 2 || !exact::is_prime(p)) throw ConfigError("d(p) wants a prime p");
    if (mod_reduce(g.curve.disc, p) == 0)
        return {std::nullopt, "bad reduction: prime divides the discriminant"};

    const int m = static_cast<int>(g.gens.size());
    const int k = g.copies;
    FpCurve fc = reduce_curve(g.curve, p);
    Int count = ec_count_points(g.curve, p);

    // torsion of the closure comes from the images in E(F_p)^k
    Int torsion(1);
    for (const auto& tuple : g.gens)
        for (const auto& pt : tuple) {
            auto red = ec_reduce_mod_p(g.curve, pt, p);
            torsion = lcm(torsion, fp_point_order(fc, *red.point, count));
        }

    // generators annihilated by |E(F_p)| have exactly zero logs
    bool all_torsion = true;
    for (const auto& tuple : g.gens)
        for (const auto& pt : tuple)
            all_torsion = all_torsion && ec_mul(g.curve, count, pt).infinity;
    if (all_torsion) {
        padic::PadicClosureReport rep;
        rep.p = p;
        rep.d_p = 0;
        rep.r_v = 0;
        rep.ell_p = 0;
        rep.torsion_exponent = torsion;
        rep.precision_used = n;
        rep.certified = true;
        rep.status = "certified";
        return {rep, ""};
    }

    const int cap = std::min(m, k);
    for (long big = n;; big *= 2) {
        LogEngine eng(g.curve, p, big);
        std::vector<std::vector<Int>> logs(m, std::vector<Int>(k));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) logs[i][j] = eng.raw_log(g.gens[i][j]);
        // entries are |E(F_p)| times the logs; the uniform factor keeps the rank
        auto pr = padic::padic_rank(logs, p, big);
        bool certified = pr.complete || pr.rank == cap;
        if (certified || 2 * big > n_cap) {
            padic::PadicClosureReport rep;
            rep.p = p;
            rep.d_p = pr.rank;
            rep.r_v = 0;
            rep.ell_p = pr.rank;
            rep.torsion_exponent = torsion;
            rep.precision_used = big;
            rep.certified = certified;
            rep.status = certified ? "certified" : "needs_more_precision";
            return {rep, ""};
        }
    }
}

padic::NoriScanReport ec_nori_scan(const EllipticSpec& spec, const Int& lo, const Int& hi, long n,
                                   int workers) {
    validate_elliptic(spec);
    std::vector<Int> primes;
    for (Int q = std::max(lo, Int(2)); q <= hi; ++q)
        if (exact::is_prime(q)) primes.push_back(q);

    auto outcomes = par::map_omp(
        primes,
        [&spec, n](const Int& p) -> padic::DpOutcome {
            try {
                return ec_dp_rank(spec, p, n);
            } catch (const Error& e) {
                return {std::nullopt, e.what()};
            }
        },
        workers);
    return aggregate_scan(primes, outcomes);
}

SkewTripleReport mazur_counterexample_check(const EllipticCurve& e, const ECPoint& P,
                                            const ECPoint& Q, const ECPoint& R, const Int& p,
                                            long n, long search_bound) {
    for (const ECPoint* pt : {&P, &Q, &R})
        if (!on_curve(e, *pt)) throw ConfigError("point is not on the curve");

    std::vector<std::vector<ECPoint>> triples = {
        {ECPoint{}, P, Q},
        {ec_neg(e, P), ECPoint{}, R},
        {ec_neg(e, Q), ec_neg(e, R), ECPoint{}},
    };

    SkewTripleReport rep;
    rep.p = p;
    rep.precision = n;
    rep.search_bound = search_bound;

    // every entry is computed independently, so the skew check exercises the
    // homomorphism log(-P) = -log(P) rather than assuming it
    LogEngine eng(e, p, n);
    std::vector<std::vector<Int>> logs(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) logs[i][j] = eng.raw_log(triples[i][j]);

    Int pn = pow_int(p, static_cast<unsigned long>(n));
    rep.skew_verified = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (mod_reduce(Int(logs[i][j] + logs[j][i]), pn) != 0) rep.skew_verified = false;
    // a 3x3 skew matrix has zero determinant identically, so once the matrix
    // is skew the closure dimension is at most 2
    rep.det_exactly_zero = rep.skew_verified;

    auto pr = padic::padic_rank(logs, p, n);
    rep.d_p = pr.rank;
    rep.d_p_certified = rep.skew_verified && pr.rank == 2;

    EllipticGroup g{e, 3, triples};
    rep.relation = dependence_search(g, search_bound);
    return rep;
}

} // namespace fgc::ec
