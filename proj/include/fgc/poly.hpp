#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/int.hpp"

namespace fgc::exact {

// dense univariate polynomial over Q; c[i] multiplies x^i; no trailing zeros
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RatPoly from_int(const std::vector<Int>& coeffs);
    static RatPoly constant(const Rat& v) { return RatPoly({v}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    int deg() const { return int(c_.size()) - 1; } // deg(0) == -1
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly scaled(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;

    // quotient and remainder, deg(rem) < deg(div)
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& div) const;

    // monic scalar multiple
    RatPoly monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b); // monic gcd over Q

// resultant of integer polynomials via the Sylvester determinant
Int resultant(const std::vector<Int>& f, const std::vector<Int>& g);

// disc(f) for integer f: (-1)^(n(n-1)/2) res(f, f') / lc(f)
Rat discriminant(const std::vector<Int>& f);

// irreducibility over Q of a monic integer polynomial: complete for deg <= 6,
// finite-field certificate path for higher degrees (throws UnsupportedInput
// when no certificate is reached)
bool irreducible_monic(const std::vector<Int>& f);

// strict polynomial parser: integer/rational coefficients, terms in `var`,
// e.g. "x^2 - 2", "3/2*x + 1"; throws ConfigError
RatPoly parse_poly(const std::string& text, const std::string& var = "x");

// monic integer coefficient vector from a RatPoly, if it is one
std::optional<std::vector<Int>> as_monic_int(const RatPoly& p);

// multiset of irreducible factor degrees of a monic f over F_p (requires f
// squarefree mod p); empty optional if f mod p is not squarefree
std::optional<std::vector<int>> factor_degrees_mod_p(const std::vector<Int>& f, unsigned long p);

// roots of f in F_p by direct scan (intended for desk-scale p)
std::vector<Int> roots_mod_p(const std::vector<Int>& f, const Int& p);

} // namespace fgc::exact
