#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/dyadic.hpp"
#include "fgc/errors.hpp"

namespace fgc::real {

// closed interval [c - r, c + r] with exact dyadic endpoints
struct Ball {
    Dyadic c, r; // r >= 0

    Ball() = default;
    explicit Ball(Dyadic center, Dyadic radius = Dyadic()) : c(std::move(center)), r(std::move(radius)) {}
    static Ball exact_int(const Int& n) { return Ball(Dyadic(n)); }
    // encloses x with radius <= 2^-(prec)
    static Ball from_rat(const Rat& x, long prec);

    bool is_exact() const { return r.is_zero(); }
    Dyadic lower() const { return c - r; }
    Dyadic upper() const { return c + r; }
    Dyadic width() const { return r.mul_pow2(1); }

    Ball operator+(const Ball& o) const { return Ball(c + o.c, r + o.r); }
    Ball operator-(const Ball& o) const { return Ball(c - o.c, r + o.r); }
    Ball operator*(const Ball& o) const;
    Ball operator-() const { return Ball(-c, r); }
    Ball mul_int(const Int& k) const { return Ball(c * Dyadic(k), r * Dyadic(::abs(k))); }
    Ball mul_pow2(long k) const { return Ball(c.mul_pow2(k), r.mul_pow2(k)); }

    bool contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }
    bool contains(const Ball& o) const { return lower() <= o.lower() && o.upper() <= upper(); }
    // -1 / 0(=contains zero but not only zero) / +1; zero width at zero gives 0 too
    std::optional<int> certain_sign() const;

    // shrink the representation; center rounded at 2^-prec granularity, the
    // rounding slack is absorbed into the radius (rounded up, short mantissa)
    Ball compress(long prec) const;

    // decimal rendering of the center with the given fractional digits
    std::string decimal(int digits) const;
    // ceil(log2 r), INT_MIN-ish sentinel for exact balls
    long radius_log2() const;

    std::string to_string() const;
};

// natural log of a positive rational, radius <= 2^-prec; exact zero for x = 1
Ball ln_rat(const Rat& x, long prec);

// natural log of a positive enclosure (lower bound must clear zero)
Ball ln_ball(const Ball& x, long prec);

// cached enclosure of ln 2 at radius <= 2^-prec
Ball ln2_ball(long prec);

// determinant by cofactor expansion (small n only)
Ball det_ball(const std::vector<std::vector<Ball>>& m);

} // namespace fgc::real
