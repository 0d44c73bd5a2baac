#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/groupspec.hpp"
#include "fgc/int.hpp"

namespace fgc::cli {

enum class ScenarioKind {
    kronecker,
    dirichlet,
    six_exp,
    four_exp_matrix,
    torus_closure,
    nori_scan,
    elliptic_scan,
    structural_rank,
    mazur_check,
};

std::string to_string(ScenarioKind k);

// a real algebraic target: either a plain rational or an element of
// Q[x]/(poly) viewed through one of the real embeddings
struct ThetaSpec {
    std::optional<Rat> rational;
    std::vector<Int> poly;    // ascending coefficients, monic
    std::vector<Rat> element; // power-basis coordinates
    int embedding = 0;        // index into the ascending real roots
};

struct PrimeSelection {
    Int lo = 0, hi = 0;     // inclusive range, used when list is empty
    std::vector<Int> list;  // explicit primes, ascending
    bool is_range() const { return list.empty(); }
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::kronecker;
    std::string label;
    long precision = 256;               // real bits
    long padic_n = 24;                  // p-adic digits
    unsigned long long seed = 0x5eedULL;

    ThetaSpec theta;                    // kronecker, dirichlet
    int count = 10;                     // dirichlet convergents

    std::vector<std::vector<Rat>> matrix; // six_exp, four_exp_matrix, structural_rank

    std::optional<TorusSpec> torus;     // torus_closure, nori_scan
    std::vector<Int> field_poly;        // nori_scan over a number field
    std::vector<std::vector<Rat>> field_gens;

    std::optional<EllipticSpec> elliptic; // elliptic_scan, mazur_check

    PrimeSelection primes;              // scans
    Int prime = 0;                      // mazur_check
    long search_bound = 20;             // mazur_check relation search
};

struct ParseIssue {
    int line = 0, col = 0; // 0 when the issue has no source location
    std::string field;     // config field path when known
    std::string message;
};

std::string to_string(const ParseIssue& issue);

// config is set exactly when issues is empty
struct ParseOutcome {
    std::optional<ScenarioConfig> config;
    std::vector<ParseIssue> issues;
};

// strict line-oriented format: `key: value` lines, '#' comments, repeated
// keys only where the field is a list; every error is collected, not just
// the first
ParseOutcome parse_config(const std::string& text);

// the same fields as a JSON object; arrays stand in for repeated keys
ParseOutcome parse_config_json(const std::string& text);

// `a..b` range or comma-separated prime list, as in config files; on failure
// returns nullopt and fills `error`
std::optional<PrimeSelection> parse_primes(const std::string& text, std::string& error);

} // namespace fgc::cli
