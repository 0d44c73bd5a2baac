#include "fgc/intmat.hpp"

#include <sstream>

namespace fgc::exact {

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string RatMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// rows i and j combined so that column c holds (gcd, 0); unimodular
void gcd_rows(IntMat& m, int i, int j, int c) {
    const Int a = m.at(i, c), b = m.at(j, c);
    if (b == 0) return;
    if (a == 0) {
        m.swap_rows(i, j);
        return;
    }
    if (b % a == 0) { // plain reduction keeps the pivot row untouched
        Int q = b / a;
        for (int k = 0; k < m.cols(); ++k) m.at(j, k) -= q * m.at(i, k);
        return;
    }
    Int s, t;
    Int g = gcdext(a, b, s, t);
    Int ag = a / g, bg = b / g;
    for (int k = 0; k < m.cols(); ++k) {
        Int x = m.at(i, k), y = m.at(j, k);
        m.at(i, k) = s * x + t * y;
        m.at(j, k) = ag * y - bg * x;
    }
}

void negate_row(IntMat& m, int i) {
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

} // namespace

IntMat hnf(const IntMat& a) {
    IntMat h = a;
    const int m = h.rows(), n = h.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (h.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) h.swap_rows(piv, r);
        for (int i = r + 1; i < m; ++i)
            if (h.at(i, c) != 0) gcd_rows(h, r, i, c);
        if (h.at(r, c) < 0) negate_row(h, r);
        const Int& d = h.at(r, c);
        for (int i = 0; i < r; ++i) {
            if (h.at(i, c) == 0) continue;
            Int q = fdiv_q(h.at(i, c), d);
            if (q == 0) continue;
            for (int k = 0; k < n; ++k) h.at(i, k) -= q * h.at(r, k);
        }
        ++r;
    }
    return h;
}

IntMat hnf_basis(const IntMat& a) {
    IntMat h = hnf(a);
    int nz = 0;
    for (int i = 0; i < h.rows(); ++i)
        if (!h.is_zero_row(i)) ++nz;
    IntMat b(nz, h.cols());
    for (int i = 0; i < nz; ++i)
        for (int j = 0; j < h.cols(); ++j) b.at(i, j) = h.at(i, j);
    return b;
}

namespace {

void snf_gcd_cols(IntMat& m, IntMat& v, int i, int j, int r) {
    const Int a = m.at(r, i), b = m.at(r, j);
    if (b == 0) return;
    if (a == 0) {
        for (int k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
        for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
        return;
    }
    if (b % a == 0) { // plain reduction: pivot column stays, |pivot| never grows
        Int q = b / a;
        for (int k = 0; k < m.rows(); ++k) m.at(k, j) -= q * m.at(k, i);
        for (int k = 0; k < v.rows(); ++k) v.at(k, j) -= q * v.at(k, i);
        return;
    }
    Int s, t;
    Int g = gcdext(a, b, s, t);
    Int ag = a / g, bg = b / g;
    for (int k = 0; k < m.rows(); ++k) {
        Int x = m.at(k, i), y = m.at(k, j);
        m.at(k, i) = s * x + t * y;
        m.at(k, j) = ag * y - bg * x;
    }
    for (int k = 0; k < v.rows(); ++k) {
        Int x = v.at(k, i), y = v.at(k, j);
        v.at(k, i) = s * x + t * y;
        v.at(k, j) = ag * y - bg * x;
    }
}

void snf_gcd_rows(IntMat& m, IntMat& u, int i, int j, int c) {
    const Int a = m.at(i, c), b = m.at(j, c);
    if (b == 0) return;
    if (a == 0) {
        m.swap_rows(i, j);
        u.swap_rows(i, j);
        return;
    }
    if (b % a == 0) { // plain reduction: pivot row stays, |pivot| never grows
        Int q = b / a;
        for (int k = 0; k < m.cols(); ++k) m.at(j, k) -= q * m.at(i, k);
        for (int k = 0; k < u.cols(); ++k) u.at(j, k) -= q * u.at(i, k);
        return;
    }
    Int s, t;
    Int g = gcdext(a, b, s, t);
    Int ag = a / g, bg = b / g;
    for (int k = 0; k < m.cols(); ++k) {
        Int x = m.at(i, k), y = m.at(j, k);
        m.at(i, k) = s * x + t * y;
        m.at(j, k) = ag * y - bg * x;
    }
    for (int k = 0; k < u.cols(); ++k) {
        Int x = u.at(i, k), y = u.at(j, k);
        u.at(i, k) = s * x + t * y;
        u.at(j, k) = ag * y - bg * x;
    }
}

} // namespace

SnfResult snf(const IntMat& a) {
    const int m = a.rows(), n = a.cols();
    SnfResult res;
    res.s = a;
    res.u = IntMat::identity(m);
    res.v = IntMat::identity(n);
    IntMat& s = res.s;
    const int k = std::min(m, n);

    for (int t = 0; t < k; ++t) {
        int pr = -1, pc = -1;
        for (int i = t; i < m && pr < 0; ++i)
            for (int j = t; j < n; ++j)
                if (s.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        if (pr != t) { s.swap_rows(pr, t); res.u.swap_rows(pr, t); }
        if (pc != t) {
            for (int i = 0; i < m; ++i) std::swap(s.at(i, pc), s.at(i, t));
            for (int i = 0; i < n; ++i) std::swap(res.v.at(i, pc), res.v.at(i, t));
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i)
                if (s.at(i, t) != 0) { snf_gcd_rows(s, res.u, t, i, t); dirty = true; }
            for (int j = t + 1; j < n; ++j)
                if (s.at(t, j) != 0) { snf_gcd_cols(s, res.v, t, j, t); dirty = true; }
        }
        if (s.at(t, t) < 0) { negate_row(s, t); negate_row(res.u, t); }
    }

    // divisibility chain
    bool fixed = false;
    while (!fixed) {
        fixed = true;
        for (int t = 0; t + 1 < k; ++t) {
            const Int &d1 = s.at(t, t), &d2 = s.at(t + 1, t + 1);
            if (d1 == 0 || d2 == 0 || d2 % d1 == 0) continue;
            fixed = false;
            // fold d2 into column t, then re-diagonalize the 2x2 block
            for (int i = 0; i < m; ++i) s.at(i, t) += s.at(i, t + 1);
            for (int i = 0; i < n; ++i) res.v.at(i, t) += res.v.at(i, t + 1);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                if (s.at(t + 1, t) != 0) { snf_gcd_rows(s, res.u, t, t + 1, t); dirty = true; }
                if (s.at(t, t + 1) != 0) { snf_gcd_cols(s, res.v, t, t + 1, t); dirty = true; }
            }
            if (s.at(t, t) < 0) { negate_row(s, t); negate_row(res.u, t); }
            if (s.at(t + 1, t + 1) < 0) { negate_row(s, t + 1); negate_row(res.u, t + 1); }
        }
    }

    for (int t = 0; t < k; ++t)
        if (s.at(t, t) != 0) res.invariant_factors.push_back(s.at(t, t));
    return res;
}

namespace {

// fraction-free elimination; returns rank, and the determinant when square
int bareiss(IntMat m, Int* detout) {
    const int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int r = 0;
    bool negate = false;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) { m.swap_rows(piv, r); negate = !negate; }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (detout) {
        if (rows != cols || r < rows) *detout = 0;
        else *detout = negate ? Int(-prev) : prev;
    }
    return r;
}

} // namespace

int rank_q(const IntMat& a) { return bareiss(a, nullptr); }

int rank_q(const RatMat& a) {
    IntMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Int den = 1;
        for (int j = 0; j < a.cols(); ++j) den = lcm(den, a.at(i, j).get_den());
        for (int j = 0; j < a.cols(); ++j) {
            Rat scaled = a.at(i, j) * Rat(den);
            m.at(i, j) = scaled.get_num();
        }
    }
    return bareiss(m, nullptr);
}

Int det(const IntMat& a) {
    assert(a.rows() == a.cols());
    Int d;
    bareiss(a, &d);
    return d;
}

Rat det(const RatMat& a) {
    assert(a.rows() == a.cols());
    Rat scale = 1;
    IntMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Int den = 1;
        for (int j = 0; j < a.cols(); ++j) den = lcm(den, a.at(i, j).get_den());
        scale /= Rat(den);
        for (int j = 0; j < a.cols(); ++j) {
            Rat scaled = a.at(i, j) * Rat(den);
            m.at(i, j) = scaled.get_num();
        }
    }
    return Rat(det(m)) * scale;
}

IntMat left_kernel(const IntMat& a) {
    const int m = a.rows(), n = a.cols();
    IntMat aug(m, n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    IntMat h = hnf(aug);
    std::vector<std::vector<Int>> ker;
    for (int i = 0; i < m; ++i) {
        bool zero = true;
        for (int j = 0; j < n && zero; ++j)
            if (h.at(i, j) != 0) zero = false;
        if (!zero) continue;
        if (h.is_zero_row(i)) continue;
        std::vector<Int> row(m);
        for (int j = 0; j < m; ++j) row[j] = h.at(i, n + j);
        ker.push_back(std::move(row));
    }
    if (ker.empty()) return IntMat(0, m);
    return IntMat::from_rows(ker);
}

IntMat saturate_rows(const IntMat& a) {
    IntMat kt = left_kernel(a.transposed()); // rows span right kernel of a
    if (kt.rows() == 0) {
        // full column rank span: saturation is the set of x with x in Q-span = all of Z^n
        // only when rank == n; otherwise kernel is nonzero
        return IntMat::identity(a.cols());
    }
    return left_kernel(kt.transposed());
}

bool lattice_contains(const IntMat& basis, const std::vector<Int>& v) {
    IntMat h = hnf_basis(basis);
    std::vector<Int> w = v;
    const int n = h.cols();
    if (int(w.size()) != n) return false;
    for (int i = 0; i < h.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (h.at(i, j) != 0) { p = j; break; }
        if (p < 0) continue;
        if (w[p] % h.at(i, p) != 0) return false;
        Int q = w[p] / h.at(i, p);
        if (q == 0) continue;
        for (int j = 0; j < n; ++j) w[j] -= q * h.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) return false;
    return hnf_basis(a) == hnf_basis(b);
}

bool solve_left(const RatMat& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
    // x * a = b  <=>  a^T x^T = b^T
    const int m = a.rows(), n = a.cols();
    assert(int(b.size()) == n);
    RatMat aug(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(j, i);
        aug.at(i, m) = b[i];
    }
    int r = 0;
    std::vector<int> pivcol;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (aug.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= m; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
        Rat inv = 1 / aug.at(r, c);
        for (int j = 0; j <= m; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j <= m; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (aug.at(i, m) != 0) return false;
    x.assign(m, Rat(0));
    for (int i = 0; i < r; ++i) x[pivcol[i]] = aug.at(i, m);
    return true;
}

} // namespace fgc::exact
