#include "fgc/padic.hpp"

#include <algorithm>

#include "fgc/errors.hpp"

namespace fgc::padic {

namespace {

Int mod_reduce(const Int& v, const Int& modulus) {
    Int out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Int mod_inverse(const Int& v, const Int& modulus) {
    Int out;
    if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw Error("p-adic inverse of a non-unit");
    return out;
}

Int pow_mod(const Int& base, const Int& e, const Int& modulus) {
    Int out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

void require_same(const PadicInt& a, const PadicInt& b) {
    if (a.p != b.p) throw Error("mixed primes in p-adic arithmetic");
}

// floor(log_p(k)) + 1, a cheap bound on the valuation of integers up to k
long digits_base_p(long k, const Int& p) {
    long d = 0;
    Int v(k);
    while (v > 0) {
        v /= p;
        ++d;
    }
    return d;
}

} // namespace

PadicInt::PadicInt(Int prime, long prec, Int value) : p(std::move(prime)), n(prec) {
    if (n < 1) throw Error("p-adic precision must be positive");
    if (p < 2) throw Error("p-adic prime must be at least 2");
    r = mod_reduce(value, modulus());
}

long PadicInt::valuation() const {
    if (r == 0) return n;
    Int rest;
    return static_cast<long>(remove_factor(r, p, rest));
}

PadicInt PadicInt::with_precision(long m) const {
    if (m > n) throw Error("cannot raise p-adic precision");
    return PadicInt(p, m, r);
}

PadicInt PadicInt::shift_down(long k) const {
    if (k == 0) return *this;
    if (k < 0 || k >= n) throw Error("p-adic shift exceeds precision");
    Int pk = pow_int(p, static_cast<unsigned long>(k));
    if (r % pk != 0) throw Error("p-adic shift below the valuation");
    return PadicInt(p, n - k, r / pk);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    require_same(*this, o);
    long m = std::min(n, o.n);
    return PadicInt(p, m, r + o.r);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    require_same(*this, o);
    long m = std::min(n, o.n);
    return PadicInt(p, m, r - o.r);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    require_same(*this, o);
    long m = std::min(n, o.n);
    return PadicInt(p, m, r * o.r);
}

PadicInt PadicInt::operator-() const { return PadicInt(p, n, -r); }

PadicInt PadicInt::inverse() const { return PadicInt(p, n, mod_inverse(r, modulus())); }

std::string PadicInt::to_string() const {
    return to_str(r) + " + O(" + to_str(p) + "^" + std::to_string(n) + ")";
}

bool agrees(const PadicInt& a, const PadicInt& b) {
    if (a.p != b.p) return false;
    long m = std::min(a.n, b.n);
    Int pm = pow_int(a.p, static_cast<unsigned long>(m));
    return mod_reduce(a.r - b.r, pm) == 0;
}

PadicInt padic_from_rat(const Rat& x, const Int& p, long n) {
    if (x.get_den() % p == 0) throw Error("rational is not p-integral");
    Int pn = pow_int(p, static_cast<unsigned long>(n));
    Int v = mod_reduce(x.get_num(), pn) * mod_inverse(x.get_den(), pn);
    return PadicInt(p, n, v);
}

PadicInt teichmuller(const PadicInt& a) {
    if (!a.is_unit()) throw Error("teichmuller lift of a non-unit");
    if (a.p == 2) {
        // the torsion of Z_2^x is just the sign
        return PadicInt(a.p, a.n, a.r % 4 == 1 ? Int(1) : a.modulus() - 1);
    }
    Int m = a.modulus();
    Int x = a.r;
    for (long i = 0; i <= a.n + 1; ++i) {
        Int next = pow_mod(x, a.p, m);
        if (next == x) break;
        x = next;
    }
    return PadicInt(a.p, a.n, x);
}

namespace {

// log(1 + u) for v(u) >= 1 (v(u) >= 3 when p = 2), correct mod p^n
Int log_one_plus(const Int& u_in, const Int& p, long n) {
    // working precision covers every denominator valuation in the series
    long extra = digits_base_p(n + 64, p) + 1;
    long m = n + extra;
    Int pm = pow_int(p, static_cast<unsigned long>(m));
    Int pn = pow_int(p, static_cast<unsigned long>(n));
    Int u = mod_reduce(u_in, pm);
    if (u == 0) return 0;
    Int rest;
    long vu = static_cast<long>(remove_factor(u, p, rest));
    Int sum = 0;
    Int upow(1);
    for (long k = 1;; ++k) {
        upow = mod_reduce(upow * u, pm);
        Int kk(k), unit_part;
        long ek = static_cast<long>(remove_factor(kk, p, unit_part));
        Int term = (upow / pow_int(p, static_cast<unsigned long>(ek))) % pn;
        term = mod_reduce(term * mod_inverse(unit_part, pn), pn);
        sum = mod_reduce(k % 2 == 1 ? Int(sum + term) : Int(sum - term), pn);
        // all later terms have valuation at least (k+1)v(u) - log_p(k+1) >= n
        long next_floor = (k + 1) * vu - digits_base_p(k + 1, p);
        if (next_floor >= n) break;
        if (k > 4 * n + 256) throw PrecisionExhausted("p-adic log series stalled", n);
    }
    return sum;
}

} // namespace

PadicInt padic_log_unit(const PadicInt& a) {
    if (!a.is_unit()) throw Error("p-adic log of a non-unit");
    if (a.p == 2) {
        if (a.n <= 2) throw PrecisionExhausted("2-adic log needs precision above 2", a.n);
        long n_out = a.n - 2; // documented penalty for the squaring normalization
        long work = a.n;
        Int pm = pow_int(Int(2), static_cast<unsigned long>(work + 1));
        Int sq = mod_reduce(a.r * a.r, pm);
        Int lg = log_one_plus(sq - 1, a.p, n_out + 1);
        // halve: log(a) = log(a^2)/2, valuation of log(a^2) is at least 3
        if (lg % 2 != 0) throw Error("2-adic log parity failure");
        return PadicInt(a.p, n_out, lg / 2);
    }
    Int pm = pow_int(a.p, static_cast<unsigned long>(a.n));
    Int b = pow_mod(a.r, a.p - 1, pm);
    Int lg = log_one_plus(b - 1, a.p, a.n);
    Int inv = mod_inverse(a.p - 1, pm);
    return PadicInt(a.p, a.n, lg * inv);
}

PadicInt padic_exp(const PadicInt& x) {
    long vmin = x.p == 2 ? 2 : 1;
    if (!x.is_zero() && x.valuation() < vmin)
        throw Error("p-adic exp outside its convergence domain");
    long n = x.n;
    // bound on v_p(k!) over the terms actually summed
    long kmax = 2 * n + 64;
    long extra = x.p == 2 ? kmax : kmax / (mpz_get_si(Int(x.p - 1).get_mpz_t())) + 2;
    long m = n + extra;
    Int pm = pow_int(x.p, static_cast<unsigned long>(m));
    Int pn = pow_int(x.p, static_cast<unsigned long>(n));
    Int sum = 1;
    Int xpow(1);
    Int kfact_unit(1);
    long kfact_val = 0;
    for (long k = 1;; ++k) {
        xpow = mod_reduce(xpow * x.r, pm);
        Int kk(k), unit_part;
        kfact_val += static_cast<long>(remove_factor(kk, x.p, unit_part));
        kfact_unit = mod_reduce(kfact_unit * unit_part, pm);
        Int term = (xpow / pow_int(x.p, static_cast<unsigned long>(kfact_val))) % pn;
        term = mod_reduce(term * mod_inverse(kfact_unit, pn), pn);
        sum = mod_reduce(sum + term, pn);
        // later terms have valuation at least k(v(x) - 1/(p-1)) which must pass n
        Int pm1 = x.p - 1;
        if (Int((k + 1) * (vmin * pm1 - 1)) >= Int(n * pm1)) break;
        if (k > kmax) throw PrecisionExhausted("p-adic exp series stalled", n);
    }
    return PadicInt(x.p, n, sum);
}

Int unit_order_mod_p(const Int& u, const Int& p) {
    Int um = mod_reduce(u, p);
    if (um == 0) throw Error("order of a non-unit residue");
    if (p == 2) return 1;
    Int group = p - 1;
    Int order = group;
    Int rest = group;
    std::vector<Int> qs;
    for (Int q(2); q * q <= rest;) {
        if (rest % q == 0) {
            qs.push_back(q);
            while (rest % q == 0) rest /= q;
        }
        q += q == 2 ? 1 : 2;
    }
    if (rest > 1) qs.push_back(rest);
    for (const Int& q : qs)
        while (order % q == 0 && pow_mod(um, order / q, p) == 1) order /= q;
    return order;
}

HenselOutcome hensel_lift_roots(const std::vector<Int>& poly, const Int& p, long n) {
    if (poly.size() < 2 || poly.back() != 1)
        throw UnsupportedInput("hensel lifting expects a monic polynomial of positive degree");
    const long deg = static_cast<long>(poly.size()) - 1;
    auto eval_mod = [&poly](const Int& x, const Int& modulus) {
        Int acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = mod_reduce(acc * x + *it, modulus);
        return acc;
    };
    std::vector<Int> dpoly;
    for (size_t i = 1; i < poly.size(); ++i) dpoly.push_back(poly[i] * Int(i));
    auto deval_mod = [&dpoly](const Int& x, const Int& modulus) {
        Int acc = 0;
        for (auto it = dpoly.rbegin(); it != dpoly.rend(); ++it)
            acc = mod_reduce(acc * x + *it, modulus);
        return acc;
    };

    std::vector<Int> roots;
    for (Int x(0); x < p; ++x)
        if (eval_mod(x, p) == 0) roots.push_back(x);
    if (static_cast<long>(roots.size()) < deg) {
        HenselOutcome out;
        out.refusal = "prime not totally split";
        return out;
    }
    for (const Int& x : roots)
        if (deval_mod(x, p) == 0) {
            HenselOutcome out;
            out.refusal = "prime divides the discriminant";
            return out;
        }

    SplitEmbeddingSet set;
    set.poly = poly;
    set.p = p;
    set.n = n;
    for (const Int& r0 : roots) {
        long k = 1;
        Int x = r0;
        while (k < n) {
            k = std::min(2 * k, n);
            Int pk = pow_int(p, static_cast<unsigned long>(k));
            Int fx = eval_mod(x, pk);
            Int dfx = deval_mod(x, pk);
            x = mod_reduce(x - fx * mod_inverse(dfx, pk), pk);
        }
        set.roots.emplace_back(p, n, x);
    }
    HenselOutcome out;
    out.set = std::move(set);
    return out;
}

std::optional<PadicInt> embed_at_root(const SplitEmbeddingSet& s, int root_index,
                                      const std::vector<Rat>& coords) {
    const PadicInt& root = s.roots.at(root_index);
    Int pn = root.modulus();
    Int acc = 0;
    Int xpow(1);
    for (const Rat& c : coords) {
        if (c.get_den() % s.p == 0) return std::nullopt;
        Int cv = mod_reduce(c.get_num(), pn) * mod_inverse(c.get_den(), pn);
        acc = mod_reduce(acc + cv * xpow, pn);
        xpow = mod_reduce(xpow * root.r, pn);
    }
    return PadicInt(s.p, s.n, acc);
}

} // namespace fgc::padic
