#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgc/groupspec.hpp"
#include "fgc/padic.hpp"

namespace fgc::padic {

// invariants of the closure of a finitely generated subgroup in the p-adic
// points: Z^{r_v} x Z_p^{d_p} x torsion, with ell_p = r_v + d_p
struct PadicClosureReport {
    Int p;
    int d_p = 0; // Z_p-rank of the unit-part log image
    int r_v = 0; // rank of the valuation part
    int ell_p = 0;
    Int torsion_exponent = 1;
    long precision_used = 0;
    bool certified = false;
    std::string status; // "certified" or "needs_more_precision"
};

// per-prime result; the report is absent when the prime is skipped
struct DpOutcome {
    std::optional<PadicClosureReport> report;
    std::string skip_reason;
};

struct PadicRankResult {
    int rank = 0;          // pivots with valuation strictly below the residual precision
    bool complete = false; // elimination ran out of rows or columns, not precision
};

// Gaussian elimination with minimal-valuation pivoting on residues mod p^n;
// every pivot is provably nonzero in Z_p, so rank is a certified lower bound
PadicRankResult padic_rank(std::vector<std::vector<Int>> a, const Int& p, long n);

// d(p) with automatic precision retry (doubling up to the cap). The rank is
// always a certified lower bound; "certified" means it provably equals d(p).
DpOutcome dp_rank(const TorusSpec& spec, const Int& p, long n = 64, long n_cap = 512);
DpOutcome dp_rank(const WeilSpec& spec, const Int& p, long n = 64, long n_cap = 512);

struct NoriScanReport {
    std::vector<PadicClosureReport> rows; // sorted by p
    std::vector<std::pair<Int, std::string>> skipped;
    std::string verdict; // "constant", "varies", "no data"
    std::optional<int> d_value;
    bool all_certified = true;
};

// d(p) across every admissible prime in [lo, hi]
NoriScanReport nori_scan(const GroupSpec& spec, const Int& lo, const Int& hi, long n = 64,
                         int workers = 0);

// closed-form topological ranks for the shapes arising as closures
struct GroupShape {
    int real_dim = 0;   // R^k factors
    int circle_dim = 0; // (S^1)^d
    int z_rank = 0;     // Z^a
    int zp_rank = 0;    // Z_p^d
    bool finite_part = false;
};

// minimal rank of a free abelian subgroup whose closure is open of finite index
int topological_rank(const GroupShape& shape);

} // namespace fgc::padic
