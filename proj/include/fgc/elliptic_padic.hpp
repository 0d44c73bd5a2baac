#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/elliptic.hpp"
#include "fgc/padic.hpp"
#include "fgc/padic_closure.hpp"

namespace fgc::ec {

// truncation of the formal group logarithm L(t) = t + c2 t^2 + ... in the
// parameter t = -x/y; c[k] is the coefficient of t^k, c[1] = 1 and the
// denominator of c[k] divides k
struct FormalLogSeries {
    long order = 0; // coefficients are exact through degree `order`
    std::vector<Rat> c;
};
FormalLogSeries formal_log(const EllipticCurve& e, long order);

// expansion of the invariant differential dx/(2y + a1 x + a3) as a power
// series in t; integer coefficients, constant term 1, and L'(t) equals it
std::vector<Rat> formal_differential(const EllipticCurve& e, long order);

// p-adic elliptic logarithm of a rational point at a good prime, via the
// kernel of reduction: log(P) = L(t(nP)) / n with n = |E(F_p)|. Dividing by
// the p-part of n costs that many digits of precision.
padic::PadicInt elliptic_padic_log(const EllipticCurve& e, const ECPoint& pt, const Int& p, long n);

// certified Z_p-rank of the elliptic log matrix of the spec's generators
padic::DpOutcome ec_dp_rank(const EllipticSpec& spec, const Int& p, long n = 24, long n_cap = 256);

// d(p) across good primes in [lo, hi]
padic::NoriScanReport ec_nori_scan(const EllipticSpec& spec, const Int& lo, const Int& hi,
                                   long n = 24, int workers = 0);

// the rank-3 subgroup of E^3 generated by (O,P,Q), (-P,O,R), (-Q,-R,O): its
// log matrix is skew, so the determinant vanishes identically and the closure
// has dimension at most 2 no matter the prime
struct SkewTripleReport {
    Int p;
    long precision = 0;
    bool skew_verified = false;    // M[i][j] + M[j][i] = 0 at working precision
    bool det_exactly_zero = false; // odd-order skew matrices are singular
    int d_p = 0;                   // certified lower bound, at most 2 once skew holds
    bool d_p_certified = false;
    std::optional<std::vector<Int>> relation; // bounded search over the triples
    long search_bound = 0;
};
SkewTripleReport mazur_counterexample_check(const EllipticCurve& e, const ECPoint& P,
                                            const ECPoint& Q, const ECPoint& R, const Int& p,
                                            long n, long search_bound = 20);

} // namespace fgc::ec
