#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/int.hpp"

namespace fgc::exact {

struct Factorization {
    int sign = 1;                 // -1, 0, or 1
    std::map<Int, unsigned> factors; // prime -> exponent, primes ascending
};

struct FactorBudget {
    uint64_t trial_bound = 1000000;  // trial division up to this bound
    uint64_t rho_iterations = 20000000; // total rho steps across all cofactors
};

// n = sign * prod p^e; throws FactorBudgetExceeded when the budget runs out
// before the cofactor is fully split, and UnsupportedInput when a purported
// prime is too large for the deterministic primality test.
Factorization factor_int(const Int& n, const FactorBudget& budget = {});

// rational x = sign * prod p^e with e in Z
struct RatFactorization {
    int sign = 1;
    std::map<Int, long> factors;
};

RatFactorization factor_rat(const Rat& x, const FactorBudget& budget = {});

// deterministic for |n| < 3.3e24 (fixed Miller-Rabin base set)
bool is_prime(const Int& n);

// primes in [2, bound]
std::vector<uint64_t> primes_below(uint64_t bound);

} // namespace fgc::exact
