#pragma once

#include <string>
#include <vector>

#include "fgc/ball.hpp"
#include "fgc/intmat.hpp"
#include "fgc/relation_detect.hpp"

namespace fgc::real {

// matrix entries written as sum_l lambda_l * B_l with rational B_l and a
// value basis lambda that carries no detected rational relation
struct PencilDecomposition {
    std::vector<Ball> lambda_basis;
    std::vector<exact::RatMat> b_matrices; // one per basis value, input shape
    std::string confidence;                // "exact" or "conjectural_at_precision"
    long prec = 0;
};

// relations among the entries are detected numerically and filtered through
// `check` when given; the basis is minimal relative to the detected lattice,
// so independence of lambda stays conjectural at this precision
PencilDecomposition decompose(const std::vector<std::vector<Ball>>& m,
                              const DetectOptions& opt = {}, const ExactCheck& check = nullptr);

// entries ln|x_ij| for nonzero rational x_ij; the relation lattice is the
// kernel of the prime exponent matrix, so the decomposition is exact
PencilDecomposition decompose_log_rat(const std::vector<std::vector<Rat>>& x, long prec = 256);

struct GenericRankWitness {
    std::vector<Int> point;      // integer evaluation of the pencil
    std::vector<int> rows, cols; // submatrix attaining the rank there
    Rat minor_value;             // its exact determinant, nonzero when s > 0
};

struct GenericRankResult {
    int s = 0;         // generic rank of sum t_l B_l
    int s_sampled = 0; // largest rank seen at the random points
    GenericRankWitness witness;
    long evaluations = 0;
    Rat failure_bound; // chance the sampling understated the rank
    bool exact = false; // the minor polynomials were expanded symbolically
    unsigned long long seed = 0;
};

// random integer evaluations in nested boxes, plus a symbolic minor check
// when the pencil is small enough to expand outright
GenericRankResult generic_rank(const std::vector<exact::RatMat>& pencil,
                               unsigned long long seed = 0x5eedULL, int workers = 0);

struct StructuralRankResult {
    PencilDecomposition pencil;
    GenericRankResult generic;
    RankReport numeric; // enclosure rank of the input matrix itself
    int s = 0;          // structural rank, from the pencil
    int r = 0;          // numeric rank, conjectural side of the report
    bool equality = false; // r == s
};

// decompose, take the generic rank of the pencil, and cross-check against
// the numeric rank; r <= s <= 2r is enforced and a violation throws
StructuralRankResult structural_rank(const std::vector<std::vector<Ball>>& m,
                                     const DetectOptions& opt = {},
                                     const ExactCheck& entry_check = nullptr,
                                     const ExactCheck& row_check = nullptr,
                                     const ExactCheck& col_check = nullptr,
                                     unsigned long long seed = 0x5eedULL, int workers = 0);

// rational input: exact decomposition plus multiplicative row/column checks
StructuralRankResult structural_rank_log_rat(const std::vector<std::vector<Rat>>& x,
                                             long prec = 256,
                                             unsigned long long seed = 0x5eedULL,
                                             int workers = 0);

// side channels for the matrix (ln|x_ij|): a candidate row relation holds iff
// the row power product of |x| is 1 in every column, and dually for columns
ExactCheck log_row_check(const std::vector<std::vector<Rat>>& x);
ExactCheck log_col_check(const std::vector<std::vector<Rat>>& x);

} // namespace fgc::real
