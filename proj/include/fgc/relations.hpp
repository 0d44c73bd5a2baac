#pragma once

#include <vector>

#include "fgc/intmat.hpp"

namespace fgc::exact {

// exponent data for m generators in (Q^x)^d over the union of primes involved
struct ExponentData {
    int m = 0, d = 0;
    std::vector<Int> primes; // ascending
    // exps[i][j][k] = exponent of primes[k] in coordinate j of generator i
    std::vector<std::vector<std::vector<long>>> exps;
    std::vector<std::vector<int>> signs; // 1 when the coordinate is negative

    // m x (d*P) matrix, row i lists all coordinates' exponent vectors
    IntMat generator_matrix() const;
    // d x (m*P) matrix, row j collects exponents of coordinate j across generators
    IntMat coordinate_matrix() const;
};

ExponentData exponent_data(const std::vector<std::vector<Rat>>& gens);

// saturated lattice of c in Z^m with prod_i x_i^{c_i} in {+-1}^d
IntMat mult_relation_lattice(const std::vector<std::vector<Rat>>& gens);

// sublattice of the above with the product exactly 1 in every coordinate
IntMat strict_relation_lattice(const std::vector<std::vector<Rat>>& gens);

// saturated lattice of characters u in Z^d with chi_u(x_i) in {+-1} for all i;
// the smallest algebraic subgroup containing the generators has dimension
// d - rank(result) and saturation makes it connected
IntMat smallest_subtorus(const std::vector<std::vector<Rat>>& gens);

// free rank of the generated subgroup modulo torsion
int mult_rank(const std::vector<std::vector<Rat>>& gens);

// characters u (|u|_inf <= box) whose value group chi_u(L) has free rank <= 1,
// returned as a saturated lattice; always contains the torsion characters
IntMat rank_le1_characters(const std::vector<std::vector<Rat>>& gens, int box);

struct RationalClosure {
    IntMat basis; // integer rows; actual basis vectors are rows divided by den
    Int den = 1;
    bool discrete = true;
};

// closure of the group generated by rational vectors in R^n (always discrete)
RationalClosure closure_rational_generators(const std::vector<std::vector<Rat>>& vs);

} // namespace fgc::exact
