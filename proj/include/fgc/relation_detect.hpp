#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fgc/ball.hpp"
#include "fgc/intmat.hpp"

namespace fgc::real {

struct DetectOptions {
    long prec = 256;        // enclosure precision of the inputs
    long accept_bits = 0;   // lattice scaling; 0 means 3/5 of prec
    Int coeff_bound = Int("10000000000"); // reject candidates with larger entries

    long scaling() const { return accept_bits > 0 ? accept_bits : (prec * 3) / 5; }
};

// exact verdict for a candidate relation; nullopt when no exact route exists
using ExactCheck = std::function<std::optional<bool>(const std::vector<Int>&)>;

struct RelationResult {
    bool found = false;
    std::vector<Int> coeffs; // primitive, first nonzero entry positive
    bool exact = false;      // verified through the exact side channel
    // no relation with |c|_inf below this bound exists (when exact checks
    // refute candidates) or passed the residual test (numeric-only)
    Int excluded_bound = 0;
};

// single linear relation sum_i c_i x_i = 0 among real enclosures
RelationResult find_integer_relation(const std::vector<Ball>& xs, const DetectOptions& opt = {},
                                     const ExactCheck& check = nullptr);

// full relation lattice: all rows c with sum_i c_i v_i = 0 (componentwise);
// every returned basis row passed the residual test, and the exact check when
// available (candidates failing it are dropped)
struct LatticeResult {
    exact::IntMat basis{0, 0};
    bool all_exact = false;
};

LatticeResult relation_lattice_detect(const std::vector<std::vector<Ball>>& vectors,
                                      const DetectOptions& opt = {},
                                      const ExactCheck& check = nullptr);

struct RankReport {
    int certified_lower = 0; // a minor of this size certifiably excludes zero
    int conjectural = 0;     // heuristic upper estimate, never below the lower
    long prec = 0;
    int row_relations = 0, col_relations = 0; // independent heuristic relations
};

// rank of a matrix of enclosures: certified lower bound from minors, plus a
// conjectural value combining heuristic row/column relations and vanishing
// minor patterns
RankReport certified_numeric_rank(const std::vector<std::vector<Ball>>& a,
                                  const DetectOptions& opt = {},
                                  const ExactCheck& row_check = nullptr,
                                  const ExactCheck& col_check = nullptr);

} // namespace fgc::real
