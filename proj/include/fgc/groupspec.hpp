#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fgc/int.hpp"
#include "fgc/numberfield.hpp"

namespace fgc {

// finitely generated subgroup of a split torus G_m^d over Q
struct TorusSpec {
    int dim = 1;
    std::vector<std::vector<Rat>> gens; // one tuple of nonzero rationals per generator
    std::string label;
};

// finitely generated subgroup of R_{K/Q}(G_m): generators are nonzero field elements
struct WeilSpec {
    exact::FieldPtr field;
    std::vector<exact::NfElement> gens;
    std::string label;
};

// affine point on a long Weierstrass curve, or the identity
struct ECPoint {
    bool infinity = true;
    Rat x, y;
};

// finitely generated subgroup of E^k for E/Q:
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct EllipticSpec {
    std::vector<Int> a; // a1, a2, a3, a4, a6
    int copies = 1;
    std::vector<std::vector<ECPoint>> gens; // one k-tuple of points per generator
    std::string label;
};

using GroupSpec = std::variant<TorusSpec, WeilSpec, EllipticSpec>;

// shape and coordinate checks; throws ConfigError on violation
// (on-curve verification for EllipticSpec lives with the curve arithmetic)
void validate(const TorusSpec& spec);
void validate(const WeilSpec& spec);
void validate_shape(const EllipticSpec& spec);

} // namespace fgc
