#pragma once

#include <string>

#include "fgc/int.hpp"

namespace fgc::real {

// exact dyadic rational m * 2^e; normalized so m is odd or zero (e = 0 for zero)
struct Dyadic {
    Int m;
    long e = 0;

    Dyadic() : m(0) {}
    explicit Dyadic(const Int& mantissa, long exp = 0) : m(mantissa), e(exp) { normalize(); }

    bool is_zero() const { return m == 0; }
    int sign() const { return m == 0 ? 0 : (m < 0 ? -1 : 1); }

    Dyadic operator-() const { return make(-m, e); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return make(m * o.m, e + o.e); }
    Dyadic mul_pow2(long k) const { return make(m, e + k); }

    bool operator==(const Dyadic& o) const { return m == o.m && e == o.e; }
    bool operator<(const Dyadic& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Dyadic& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Dyadic& o) const { return cmp(*this, o) >= 0; }

    static int cmp(const Dyadic& a, const Dyadic& b);

    Dyadic abs() const { return make(::abs(m), e); }

    // value < 2^mag2() for nonzero values; lower bound 2^(mag2()-1) <= |value|
    long mag2() const { return long(bit_length(m)) + e; }

    Rat to_rat() const;

    // nearest dyadic with denominator 2^frac_bits; |x - result| <= 2^-(frac_bits+1)
    static Dyadic round_rat(const Rat& x, long frac_bits);
    // result >= x, error < 2^-frac_bits
    static Dyadic ceil_rat(const Rat& x, long frac_bits);

    std::string to_string() const;

private:
    static Dyadic make(Int mm, long ee) {
        Dyadic d;
        d.m = std::move(mm);
        d.e = ee;
        d.normalize();
        return d;
    }
    void normalize();
};

} // namespace fgc::real
