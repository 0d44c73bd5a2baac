#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/padic_closure.hpp"
#include "fgc/par.hpp"

using namespace fgc;

// wall-clock comparison of the serial and OpenMP scan drivers on the same
// per-prime closure computation; results must agree element by element
int main(int argc, char** argv) {
    const long hi = argc > 1 ? std::atol(argv[1]) : 300;

    TorusSpec spec;
    spec.dim = 2;
    spec.gens = {{Rat(2), Rat(3)}, {Rat(3), Rat(5)}, {Rat(5), Rat(7)}};

    std::vector<Int> primes;
    for (Int q = 2; q <= hi; q = Int(q + 1))
        if (exact::is_prime(q)) primes.push_back(q);
    std::printf("d(p) scan on a rank-3 subgroup of G_m^2, %zu primes up to %ld\n", primes.size(),
                hi);

    auto job = [&spec](const Int& p) -> int {
        try {
            auto out = padic::dp_rank(spec, p, 64);
            return out.report ? out.report->d_p : -1;
        } catch (const Error&) {
            return -1;
        }
    };

    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    auto t0 = clock::now();
    auto serial = par::map_serial(primes, job);
    auto t1 = clock::now();
    auto parallel = par::map_omp(primes, job);
    auto t2 = clock::now();

    if (serial != parallel) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    const double ts = ms(t0, t1), tp = ms(t1, t2);
    std::printf("serial  %9.1f ms\n", ts);
    std::printf("openmp  %9.1f ms   (x%.2f, results identical)\n", tp, tp > 0 ? ts / tp : 0.0);
    return 0;
}
