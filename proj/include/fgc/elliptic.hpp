#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/groupspec.hpp"
#include "fgc/int.hpp"

namespace fgc::ec {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular
struct EllipticCurve {
    Int a1, a2, a3, a4, a6;
    Int b2, b4, b6, b8, disc;
    explicit EllipticCurve(const std::vector<Int>& a); // {a1, a2, a3, a4, a6}
};

bool on_curve(const EllipticCurve& e, const ECPoint& p);
ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p);
ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const EllipticCurve& e, const Int& n, const ECPoint& p);
bool ec_equal(const ECPoint& p, const ECPoint& q);

// point over F_p in affine coordinates, or the identity
struct FpPoint {
    bool infinity = true;
    Int x, y;
};

// the curve with coefficients reduced mod a good prime
struct FpCurve {
    Int p;
    Int a1, a2, a3, a4, a6;
};

FpCurve reduce_curve(const EllipticCurve& e, const Int& p); // refuses bad primes
FpPoint fp_neg(const FpCurve& c, const FpPoint& p);
FpPoint fp_add(const FpCurve& c, const FpPoint& p, const FpPoint& q);
FpPoint fp_mul(const FpCurve& c, const Int& n, const FpPoint& p);

// reduction of a rational point; denominators divisible by p land at infinity
struct ReduceOutcome {
    std::optional<FpPoint> point;
    std::string refusal; // set for bad reduction
};
ReduceOutcome ec_reduce_mod_p(const EllipticCurve& e, const ECPoint& pt, const Int& p);

// |E(F_p)| by direct character sums; asserts the Hasse bound afterwards
Int ec_count_points(const EllipticCurve& e, const Int& p, const Int& naive_bound = Int(100000));

// order of a point in E(F_p) given the group size
Int fp_point_order(const FpCurve& c, const FpPoint& pt, const Int& group_size);

// curve and generators of a subgroup of E(Q)^k, checked on-curve exactly
struct EllipticGroup {
    EllipticCurve curve;
    int copies;
    std::vector<std::vector<ECPoint>> gens;
};
EllipticGroup validate_elliptic(const EllipticSpec& spec);

// exhaustive small-coefficient relation search, pruned by reductions at a few
// good primes before any exact arithmetic; finds sum c_i G_i = O or nothing
std::optional<std::vector<Int>> dependence_search(const EllipticGroup& g, long bound);

} // namespace fgc::ec
