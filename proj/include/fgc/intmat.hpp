#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "fgc/int.hpp"

namespace fgc::exact {

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMat from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        IntMat m(r, c);
        for (int i = 0; i < r; ++i) {
            assert(int(rows[i].size()) == c);
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool is_zero_row(int r) const {
        for (int j = 0; j < cols_; ++j)
            if (at(r, j) != 0) return false;
        return true;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMat mul(const IntMat& b) const {
        assert(cols_ == b.rows_);
        IntMat r(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += at(i, k) * b.at(k, j);
            }
        return r;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Rat(0)) {}

    static RatMat from_int(const IntMat& m) {
        RatMat r(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
        return r;
    }

    static RatMat from_rows(const std::vector<std::vector<Rat>>& rows) {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        RatMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

// Row Hermite normal form: H = U*A for unimodular U. Nonzero rows first,
// pivots positive with strictly increasing column index, entries above a
// pivot reduced into [0, pivot).
IntMat hnf(const IntMat& a);

// HNF with the nonzero rows only (a basis of the row lattice).
IntMat hnf_basis(const IntMat& a);

struct SnfResult {
    IntMat s;                          // u * a * v
    IntMat u, v;                       // unimodular
    std::vector<Int> invariant_factors; // nonzero diagonal, d1 | d2 | ...
};

SnfResult snf(const IntMat& a);

// rank over Q (fraction-free elimination)
int rank_q(const IntMat& a);
int rank_q(const RatMat& a);

// determinant of a square matrix
Int det(const IntMat& a);
Rat det(const RatMat& a);

// basis (rows) of { x in Z^m : x * a = 0 }; always saturated
IntMat left_kernel(const IntMat& a);

// saturation of the row lattice: (Q-span of rows) intersected with Z^n
IntMat saturate_rows(const IntMat& a);

// is v in the row lattice of basis (basis rows need not be in HNF)?
bool lattice_contains(const IntMat& basis, const std::vector<Int>& v);

// do two row sets generate the same lattice?
bool lattice_equal(const IntMat& a, const IntMat& b);

// solve x * a = b over Q; returns empty if inconsistent
bool solve_left(const RatMat& a, const std::vector<Rat>& b, std::vector<Rat>& x);

} // namespace fgc::exact
