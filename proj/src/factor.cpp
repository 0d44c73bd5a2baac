#include "fgc/factor.hpp"

#include <algorithm>
#include <mutex>

namespace fgc::exact {

namespace {

// deterministic Miller-Rabin witness set, valid below 3.317e24
const unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// 3.317e24 rounds down; anything at or above this is out of certified range
const char* kMrLimit = "3317044064679887385961980";

bool miller_rabin(const Int& n, unsigned long base) {
    if (n % base == 0) return n == base;
    Int d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++r; }
    Int a(base), x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

Int f_rho(const Int& x, const Int& c, const Int& n) { return (x * x + c) % n; }

// primality usable inside factoring: numbers past the certificate range are
// treated as composite and left to rho (whose budget bounds the attempt)
bool certified_prime(const Int& n) {
    try {
        return is_prime(n);
    } catch (const UnsupportedInput&) {
        return false;
    }
}

// Brent's cycle variant; returns a nontrivial factor or 0 when the step
// budget is exhausted
Int pollard_rho(const Int& n, uint64_t& steps_left) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_y = y;
        uint64_t power = 1, lam = 0;
        Int q = 1;
        const uint64_t batch = 128;
        while (d == 1) {
            if (steps_left == 0) return 0;
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            saved_y = y;
            uint64_t take = std::min<uint64_t>(batch, power - lam);
            take = std::min<uint64_t>(take, steps_left);
            for (uint64_t i = 0; i < take; ++i) {
                y = f_rho(y, c, n);
                q = (q * abs(x - y)) % n;
            }
            lam += take;
            steps_left -= take;
            d = gcd(q, n);
        }
        if (d != n) return d;
        // backtrack one by one from the last saved point
        y = saved_y;
        d = 1;
        while (d == 1) {
            if (steps_left == 0) return 0;
            y = f_rho(y, c, n);
            --steps_left;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
        // cycle collapsed; retry with the next polynomial shift
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out, const FactorBudget& budget,
                 uint64_t& rho_left) {
    static std::vector<uint64_t> small_primes;
    static std::once_flag once;
    std::call_once(once, [] { small_primes = primes_below(1000000); });

    Int rest = n;
    for (uint64_t p : small_primes) {
        if (p > budget.trial_bound) break;
        if (Int(p) * Int(p) > rest) break;
        if (rest % p == 0) {
            Int q, pp(p);
            unsigned long e = remove_factor(rest, pp, q);
            out[pp] += unsigned(e);
            rest = q;
        }
    }
    if (rest == 1) return;

    std::vector<Int> stack{rest};
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (certified_prime(m)) {
            out[m] += 1;
            continue;
        }
        Int d = pollard_rho(m, rho_left);
        if (d == 0) throw FactorBudgetExceeded("factorization budget exhausted", m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long b : kMrBases)
        if (n == b) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    static const Int limit(kMrLimit);
    if (n >= limit)
        throw UnsupportedInput("primality certificate out of range: " + n.get_str());
    for (unsigned long b : kMrBases)
        if (!miller_rabin(n, b)) return false;
    return true;
}

std::vector<uint64_t> primes_below(uint64_t bound) {
    std::vector<uint64_t> res;
    if (bound < 2) return res;
    std::vector<bool> sieve(bound + 1, true);
    for (uint64_t i = 2; i * i <= bound; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    for (uint64_t i = 2; i <= bound; ++i)
        if (sieve[i]) res.push_back(i);
    return res;
}

Factorization factor_int(const Int& n, const FactorBudget& budget) {
    Factorization f;
    if (n == 0) {
        f.sign = 0;
        return f;
    }
    f.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    if (m == 1) return f;
    uint64_t rho_left = budget.rho_iterations;
    factor_into(m, f.factors, budget, rho_left);
    return f;
}

RatFactorization factor_rat(const Rat& x, const FactorBudget& budget) {
    RatFactorization f;
    if (x == 0) {
        f.sign = 0;
        return f;
    }
    Factorization num = factor_int(x.get_num(), budget);
    Factorization den = factor_int(x.get_den(), budget);
    f.sign = num.sign; // canonical mpq keeps denominators positive
    for (auto& [p, e] : num.factors) f.factors[p] += long(e);
    for (auto& [p, e] : den.factors) f.factors[p] -= long(e);
    for (auto it = f.factors.begin(); it != f.factors.end();)
        it = it->second == 0 ? f.factors.erase(it) : std::next(it);
    return f;
}

} // namespace fgc::exact
