#pragma once

#include <string>

#include "fgc/groupspec.hpp"
#include "fgc/relation_detect.hpp"

namespace fgc::real {

enum class ClosureVerdict { discrete, dense_in_subtorus, dense, undecided };

std::string to_string(ClosureVerdict v);

// description of the closure of the generated subgroup inside the identity
// component of the real points (signs are finite-index bookkeeping and do not
// affect any of the dimensions below)
struct RealClosureReport {
    int ambient_dim = 0;            // archimedean coordinates of the ambient torus
    int generator_rank = 0;         // free rank of the subgroup modulo torsion
    int subtorus_dim = 0;           // dimension of the smallest algebraic subgroup B
    int identity_component_dim = 0; // dimension of the closure's identity component
    int discrete_rank = 0;          // free rank of the discrete complement
    ClosureVerdict verdict = ClosureVerdict::undecided;
    bool exact = false;             // false: conjectural at precision_bits
    long precision_bits = 0;
    RankReport log_rank;            // rank analysis of the full log matrix
};

// closure verdict for rational generators in a split torus; the relation side
// is exact (factorization), the dense side conjectural unless one-dimensional
RealClosureReport real_closure_verdict(const TorusSpec& spec, long prec = 256);

// closure verdict inside R_{K/Q}(G_m)(R) for totally real K; multiplicative
// relations among field elements are detected numerically and confirmed by
// exact field arithmetic, so discreteness can still be certified
RealClosureReport real_closure_verdict(const WeilSpec& spec, long prec = 256);

} // namespace fgc::real
