#pragma once

#include <omp.h>

#include <vector>

namespace fgc::par {

// deterministic map: output order matches input order regardless of scheduling.
// f must not throw; wrap fallible work in an outcome type instead.
template <class In, class F>
auto map_omp(const std::vector<In>& items, F&& f, int workers = 0) {
    using Out = decltype(f(items[0]));
    std::vector<Out> out(items.size());
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (long i = 0; i < static_cast<long>(items.size()); ++i) out[i] = f(items[i]);
    return out;
}

// reference implementation used to cross-check the parallel path
template <class In, class F>
auto map_serial(const std::vector<In>& items, F&& f) {
    using Out = decltype(f(items[0]));
    std::vector<Out> out;
    out.reserve(items.size());
    for (const auto& x : items) out.push_back(f(x));
    return out;
}

} // namespace fgc::par
