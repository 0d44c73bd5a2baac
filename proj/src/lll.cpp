#include "fgc/lll.hpp"

#include "fgc/errors.hpp"

namespace fgc::exact {

namespace {

struct Gs {
    // mu[i][j] for j < i, and squared norms of the orthogonalized vectors
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> bnorm;
};

// full recompute; bases here are small (a dozen rows), clarity wins
Gs gram_schmidt(const IntMat& b) {
    const int m = b.rows();
    Gs g;
    g.mu.assign(m, {});
    g.bnorm.assign(m, Rat(0));
    // bstar_i = b_i - sum_{j<i} mu_ij bstar_j; store dots via running coords
    std::vector<std::vector<Rat>> bstar(m, std::vector<Rat>(b.cols(), Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < b.cols(); ++k) bstar[i][k] = Rat(b.at(i, k));
        g.mu[i].assign(i, Rat(0));
        for (int j = 0; j < i; ++j) {
            if (g.bnorm[j] == 0) throw Error("dependent rows in lattice basis");
            Rat num(0);
            for (int k = 0; k < b.cols(); ++k) num += Rat(b.at(i, k)) * bstar[j][k];
            g.mu[i][j] = num / g.bnorm[j];
            for (int k = 0; k < b.cols(); ++k) bstar[i][k] -= g.mu[i][j] * bstar[j][k];
        }
        for (int k = 0; k < b.cols(); ++k) g.bnorm[i] += bstar[i][k] * bstar[i][k];
        if (g.bnorm[i] == 0) throw Error("dependent rows in lattice basis");
    }
    return g;
}

void size_reduce_row(IntMat& b, Gs& g, int k, int j) {
    if (rat_abs(g.mu[k][j]) <= Rat(1, 2)) return;
    Int r = round_rat(g.mu[k][j]);
    for (int t = 0; t < b.cols(); ++t) b.at(k, t) -= r * b.at(j, t);
    for (int t = 0; t < j; ++t) g.mu[k][t] -= Rat(r) * g.mu[j][t];
    g.mu[k][j] -= Rat(r);
}

} // namespace

IntMat lll_reduce(const IntMat& basis, const Rat& delta) {
    if (delta <= Rat(1, 4) || delta > 1) throw Error("lll delta out of range");
    IntMat b = basis;
    const int m = b.rows();
    if (m <= 1) return b;
    Gs g = gram_schmidt(b);
    int k = 1;
    while (k < m) {
        for (int j = k - 1; j >= 0; --j) size_reduce_row(b, g, k, j);
        Rat lhs = g.bnorm[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bnorm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            b.swap_rows(k, k - 1);
            g = gram_schmidt(b);
            k = std::max(k - 1, 1);
        }
    }
    return b;
}

bool lll_check(const IntMat& basis, const Rat& delta) {
    IntMat b = basis;
    Gs g = gram_schmidt(b);
    for (int i = 1; i < b.rows(); ++i) {
        for (int j = 0; j < i; ++j)
            if (rat_abs(g.mu[i][j]) > Rat(1, 2)) return false;
        Rat lhs = g.bnorm[i];
        Rat rhs = (delta - g.mu[i][i - 1] * g.mu[i][i - 1]) * g.bnorm[i - 1];
        if (lhs < rhs) return false;
    }
    return true;
}

} // namespace fgc::exact
