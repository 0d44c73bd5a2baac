#include <doctest.h>

#include <functional>

#include "fgc/errors.hpp"
#include "fgc/lll.hpp"

using namespace fgc;
using namespace fgc::exact;

namespace {

uint64_t st = 41;
long rnd(long lo, long hi) {
    st = st * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + long((st >> 33) % uint64_t(hi - lo + 1));
}

Rat norm2(const IntMat& b, int i) {
    Rat s(0);
    for (int j = 0; j < b.cols(); ++j) s += Rat(b.at(i, j)) * Rat(b.at(i, j));
    return s;
}

// exhaustive shortest nonzero vector for tiny full-rank bases
Rat shortest_norm2(const IntMat& b, long box) {
    const int m = b.rows();
    Rat best(-1);
    std::vector<long> c(m, -box);
    while (true) {
        bool allzero = true;
        for (long x : c)
            if (x != 0) allzero = false;
        if (!allzero) {
            Rat n2(0);
            for (int j = 0; j < b.cols(); ++j) {
                Rat s(0);
                for (int i = 0; i < m; ++i) s += Rat(c[i]) * Rat(b.at(i, j));
                n2 += s * s;
            }
            if (best < 0 || n2 < best) best = n2;
        }
        int pos = 0;
        while (pos < m && ++c[pos] > box) c[pos++] = -box;
        if (pos == m) break;
    }
    return best;
}

} // namespace

TEST_CASE("classic reduction example") {
    // the standard (1,1,1),(−1,0,2),(3,5,6) exercise reduces to short vectors
    IntMat b = IntMat::from_rows({{Int(1), Int(1), Int(1)},
                                  {Int(-1), Int(0), Int(2)},
                                  {Int(3), Int(5), Int(6)}});
    IntMat r = lll_reduce(b);
    CHECK(lll_check(r));
    CHECK(lattice_equal(b, r));
    CHECK(norm2(r, 0) <= 3);
}

TEST_CASE("reduction preserves the lattice and satisfies invariants") {
    for (int iter = 0; iter < 25; ++iter) {
        int m = int(rnd(2, 4));
        int n = m + int(rnd(0, 2));
        IntMat b(m, n);
        do {
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) b.at(i, j) = rnd(-30, 30);
        } while (rank_q(b) < m);
        IntMat r = lll_reduce(b);
        CHECK(lll_check(r));
        CHECK(lattice_equal(b, r));
        // first reduced vector within the proven factor of the shortest
        Rat bound = Rat(pow2(static_cast<unsigned long>(m - 1))) * shortest_norm2(b, 6);
        CHECK(norm2(r, 0) <= bound);
    }
}

TEST_CASE("lll_check rejects an unreduced basis") {
    IntMat bad = IntMat::from_rows({{Int(1), Int(0)}, {Int(100), Int(1)}});
    CHECK(!lll_check(bad));
    CHECK(lll_check(lll_reduce(bad)));
}

TEST_CASE("dependent rows are rejected") {
    IntMat dep = IntMat::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}});
    CHECK_THROWS_AS(lll_reduce(dep), Error);
}

TEST_CASE("single row passes through") {
    IntMat one = IntMat::from_rows({{Int(7), Int(-3)}});
    CHECK(lll_reduce(one) == one);
    CHECK(lll_check(one));
}
