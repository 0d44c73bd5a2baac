#pragma once

#include <vector>

#include "fgc/ball.hpp"
#include "fgc/numberfield.hpp"
#include "fgc/sturm.hpp"

namespace fgc::real {

struct KroneckerReport {
    bool dense = false;    // orbit of multiples fills R/Z
    bool rational = false; // verdicts are exact in both directions
};

// density of {n*theta mod 1}: dense exactly when theta is irrational
KroneckerReport kronecker_verdict(const Rat& theta);
KroneckerReport kronecker_verdict(const exact::NfElement& theta);

// fractional parts {i*theta} for i = 0..count-1 as certified enclosures
std::vector<Ball> orbit_sample(const Rat& theta, int count, long prec = 96);
std::vector<Ball> orbit_sample(const RealEmbedding& emb, const exact::NfElement& theta, int count,
                               long prec = 96);

struct Convergent {
    Int p;
    Int q;    // lowest terms, q >= 1
    Ball err; // enclosure of |theta - p/q|
};

struct DirichletResult {
    std::vector<Convergent> convergents;
    bool terminated = false; // expansion is finite, last entry is theta itself
    bool certified = false;  // every emitted convergent satisfies |theta - p/q| < 1/q^2
};

// best rational approximations from the continued fraction expansion
DirichletResult dirichlet_convergents(const Rat& theta, int count);
DirichletResult dirichlet_convergents(const RealEmbedding& emb, const exact::NfElement& theta,
                                      int count);

} // namespace fgc::real
