#include "fgc/relations.hpp"

#include <algorithm>
#include <set>

#include "fgc/factor.hpp"

namespace fgc::exact {

IntMat ExponentData::generator_matrix() const {
    const int p = int(primes.size());
    IntMat e(m, d * p);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < p; ++k) e.at(i, j * p + k) = exps[i][j][k];
    return e;
}

IntMat ExponentData::coordinate_matrix() const {
    const int p = int(primes.size());
    IntMat e(d, m * p);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < p; ++k) e.at(j, i * p + k) = exps[i][j][k];
    return e;
}

ExponentData exponent_data(const std::vector<std::vector<Rat>>& gens) {
    ExponentData out;
    out.m = int(gens.size());
    out.d = out.m ? int(gens[0].size()) : 0;
    std::vector<std::vector<RatFactorization>> facs(out.m);
    std::set<Int> prime_set;
    for (int i = 0; i < out.m; ++i) {
        if (int(gens[i].size()) != out.d)
            throw UnsupportedInput("generators must share the ambient dimension");
        facs[i].resize(out.d);
        for (int j = 0; j < out.d; ++j) {
            if (gens[i][j] == 0)
                throw UnsupportedInput("generator coordinate must be nonzero");
            facs[i][j] = factor_rat(gens[i][j]);
            for (auto& [p, e] : facs[i][j].factors) prime_set.insert(p);
        }
    }
    out.primes.assign(prime_set.begin(), prime_set.end());
    out.exps.assign(out.m, std::vector<std::vector<long>>(out.d, std::vector<long>(out.primes.size(), 0)));
    out.signs.assign(out.m, std::vector<int>(out.d, 0));
    for (int i = 0; i < out.m; ++i)
        for (int j = 0; j < out.d; ++j) {
            out.signs[i][j] = facs[i][j].sign < 0 ? 1 : 0;
            for (auto& [p, e] : facs[i][j].factors) {
                size_t k = size_t(std::lower_bound(out.primes.begin(), out.primes.end(), p) -
                                  out.primes.begin());
                out.exps[i][j][k] = e;
            }
        }
    return out;
}

IntMat mult_relation_lattice(const std::vector<std::vector<Rat>>& gens) {
    ExponentData ed = exponent_data(gens);
    return left_kernel(ed.generator_matrix());
}

namespace {

// kernel over F2 of a (rows x cols) 0/1 matrix, as row vectors
std::vector<std::vector<int>> f2_left_kernel(std::vector<std::vector<int>> m, int rows, int cols) {
    // augment with identity, eliminate
    for (int i = 0; i < rows; ++i) {
        m[i].resize(cols + rows, 0);
        m[i][cols + i] = 1;
    }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int j = 0; j < cols + rows; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    std::vector<std::vector<int>> ker;
    for (int i = r; i < rows; ++i)
        ker.emplace_back(m[i].begin() + cols, m[i].end());
    return ker;
}

} // namespace

IntMat strict_relation_lattice(const std::vector<std::vector<Rat>>& gens) {
    ExponentData ed = exponent_data(gens);
    IntMat torsion = left_kernel(ed.generator_matrix());
    const int k = torsion.rows(), m = ed.m, d = ed.d;
    if (k == 0) return torsion;
    // parity of each basis relation per coordinate
    std::vector<std::vector<int>> par(k, std::vector<int>(d, 0));
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < d; ++j) {
            Int s = 0;
            for (int i = 0; i < m; ++i) s += torsion.at(r, i) * ed.signs[i][j];
            par[r][j] = int(mpz_odd_p(s.get_mpz_t()));
        }
    std::vector<std::vector<int>> ker = f2_left_kernel(par, k, d);
    std::vector<std::vector<Int>> rows;
    for (auto& a : ker) {
        std::vector<Int> v(m, Int(0));
        for (int r = 0; r < k; ++r)
            if (a[r])
                for (int i = 0; i < m; ++i) v[i] += torsion.at(r, i);
        rows.push_back(std::move(v));
    }
    for (int r = 0; r < k; ++r) {
        std::vector<Int> v(m, Int(0));
        for (int i = 0; i < m; ++i) v[i] = 2 * torsion.at(r, i);
        rows.push_back(std::move(v));
    }
    return hnf_basis(IntMat::from_rows(rows));
}

IntMat smallest_subtorus(const std::vector<std::vector<Rat>>& gens) {
    ExponentData ed = exponent_data(gens);
    return left_kernel(ed.coordinate_matrix());
}

int mult_rank(const std::vector<std::vector<Rat>>& gens) {
    ExponentData ed = exponent_data(gens);
    return rank_q(ed.generator_matrix());
}

IntMat rank_le1_characters(const std::vector<std::vector<Rat>>& gens, int box) {
    ExponentData ed = exponent_data(gens);
    const int d = ed.d, m = ed.m, np = int(ed.primes.size());
    double count = 1;
    for (int j = 0; j < d; ++j) count *= 2 * box + 1;
    if (count > 2e5) box = 1;

    std::vector<std::vector<Int>> found;
    std::vector<long> u(d, -box);
    while (true) {
        bool zero = std::all_of(u.begin(), u.end(), [](long x) { return x == 0; });
        if (!zero) {
            IntMat mu(m, np);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < np; ++k) {
                    Int s = 0;
                    for (int j = 0; j < d; ++j) s += Int(u[j]) * ed.exps[i][j][k];
                    mu.at(i, k) = s;
                }
            if (rank_q(mu) <= 1) {
                std::vector<Int> v(d);
                for (int j = 0; j < d; ++j) v[j] = u[j];
                found.push_back(std::move(v));
            }
        }
        int pos = 0;
        while (pos < d && ++u[pos] > box) u[pos++] = -box;
        if (pos == d) break;
    }
    if (found.empty()) return IntMat(0, d);
    return saturate_rows(IntMat::from_rows(found));
}

RationalClosure closure_rational_generators(const std::vector<std::vector<Rat>>& vs) {
    RationalClosure out;
    const int m = int(vs.size());
    const int n = m ? int(vs[0].size()) : 0;
    Int den = 1;
    for (auto& v : vs)
        for (auto& x : v) den = lcm(den, x.get_den());
    IntMat a(m, n);
    for (int i = 0; i < m; ++i) {
        if (int(vs[i].size()) != n) throw UnsupportedInput("vectors must share the dimension");
        for (int j = 0; j < n; ++j) {
            Rat scaled = vs[i][j] * Rat(den);
            a.at(i, j) = scaled.get_num();
        }
    }
    out.basis = hnf_basis(a);
    out.den = den;
    out.discrete = true;
    return out;
}

} // namespace fgc::exact
