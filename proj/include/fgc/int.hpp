#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace fgc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = a*s + b*t
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// nearest integer, ties toward +infinity
inline Int round_div(const Int& a, const Int& b) {
    Int n2 = 2 * a + b;
    Int d2 = 2 * b;
    return fdiv_q(n2, d2);
}

inline Int round_rat(const Rat& x) {
    return round_div(x.get_num(), x.get_den());
}

inline Int floor_rat(const Rat& x) {
    return fdiv_q(x.get_num(), x.get_den());
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return pow_int(2, e); }

inline size_t bit_length(const Int& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

// largest e with p^e | a (a != 0); quotient returned through rest
inline unsigned long remove_factor(const Int& a, const Int& p, Int& rest) {
    return mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline std::string to_str(const Int& a) { return a.get_str(); }
inline std::string to_str(const Rat& a) { return a.get_str(); }

} // namespace fgc
