#include "fgc/relation_detect.hpp"

#include <algorithm>

#include "fgc/lll.hpp"

namespace fgc::real {

using exact::IntMat;

namespace {

Int round_scaled(const Ball& x, long bits) {
    Rat v = x.c.to_rat();
    mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(bits));
    return round_rat(v);
}

void make_primitive(std::vector<Int>& c) {
    Int g = 0;
    for (const Int& x : c) g = gcd(g, x);
    if (g > 1)
        for (Int& x : c) x /= g;
    for (const Int& x : c) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : c) y = -y;
        break;
    }
}

// residual enclosure of sum c_i x_i for one component
Ball residual(const std::vector<Ball>& xs, const std::vector<Int>& c) {
    Ball acc;
    for (size_t i = 0; i < xs.size(); ++i) acc = acc + xs[i].mul_int(c[i]);
    return acc;
}

// the residual test: encloses zero and is small at the acceptance scale
bool residual_ok(const std::vector<std::vector<Ball>>& vectors, const std::vector<Int>& c,
                 long accept) {
    Dyadic thresh(Int(1), -(accept / 2));
    for (const auto& xs : vectors) {
        Ball r = residual(xs, c);
        if (!r.contains_zero()) return false;
        if (r.upper().abs() > thresh || r.lower().abs() > thresh) return false;
    }
    return true;
}

Int norm_inf(const std::vector<Int>& c) {
    Int m = 0;
    for (const Int& x : c) m = std::max(m, Int(abs(x)));
    return m;
}

// lower bound on |c|_inf of any true relation, from the shortest reduced row:
// a relation c gives a lattice vector of length^2 <= (d+1) m^2 |c|_inf^2
// (rounding slack of each scaled column is at most m |c|_inf / 2), and LLL
// loses at most 2^(m-1) on the shortest vector
Int exclusion_bound(const IntMat& reduced, int m, int d) {
    Rat best(0);
    for (int i = 0; i < reduced.rows(); ++i) {
        Rat n2(0);
        for (int j = 0; j < reduced.cols(); ++j) n2 += Rat(reduced.at(i, j)) * Rat(reduced.at(i, j));
        if (i == 0 || n2 < best) best = n2;
    }
    Rat bound2 = best / (Rat(pow2(static_cast<unsigned long>(m - 1))) * Rat((d + 1) * m * m));
    Int num = bound2.get_num() / bound2.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
    return root;
}

struct Candidates {
    std::vector<std::vector<Int>> accepted; // passed residual (and exact) tests
    bool any_inexact = false;
    Int excluded = 0;
};

Candidates scan_lattice(const std::vector<std::vector<Ball>>& vectors, const DetectOptions& opt,
                        const ExactCheck& check) {
    const int m = int(vectors[0].size());
    const int d = int(vectors.size());
    const long accept = opt.scaling();
    IntMat lat(m, m + d);
    for (int i = 0; i < m; ++i) {
        lat.at(i, i) = 1;
        for (int j = 0; j < d; ++j) lat.at(i, m + j) = round_scaled(vectors[j][i], accept);
    }
    IntMat red = exact::lll_reduce(lat);

    Candidates out;
    out.excluded = exclusion_bound(red, m, d);
    for (int i = 0; i < red.rows(); ++i) {
        std::vector<Int> c(m);
        for (int j = 0; j < m; ++j) c[j] = red.at(i, j);
        bool zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;
        make_primitive(c);
        if (norm_inf(c) > opt.coeff_bound) continue;
        if (!residual_ok(vectors, c, accept)) continue;
        if (check) {
            auto verdict = check(c);
            if (verdict.has_value()) {
                if (!*verdict) continue; // refuted: a numeric near-miss
                out.accepted.push_back(c);
                continue;
            }
        }
        out.any_inexact = true;
        out.accepted.push_back(c);
    }
    return out;
}

} // namespace

RelationResult find_integer_relation(const std::vector<Ball>& xs, const DetectOptions& opt,
                                     const ExactCheck& check) {
    RelationResult res;
    if (xs.size() < 2) return res;
    Candidates c = scan_lattice({xs}, opt, check);
    res.excluded_bound = c.excluded;
    if (c.accepted.empty()) return res;
    // shortest accepted candidate
    auto best = std::min_element(c.accepted.begin(), c.accepted.end(),
                                 [](const auto& a, const auto& b) { return norm_inf(a) < norm_inf(b); });
    res.found = true;
    res.coeffs = *best;
    res.exact = check && !c.any_inexact;
    if (check && c.any_inexact) {
        auto verdict = check(res.coeffs);
        res.exact = verdict.has_value() && *verdict;
    }
    return res;
}

LatticeResult relation_lattice_detect(const std::vector<std::vector<Ball>>& vectors,
                                      const DetectOptions& opt, const ExactCheck& check) {
    LatticeResult res;
    if (vectors.empty() || vectors[0].empty()) return res;
    const int m = int(vectors[0].size());
    Candidates c = scan_lattice(vectors, opt, check);
    if (c.accepted.empty()) {
        res.basis = IntMat(0, m);
        res.all_exact = bool(check);
        return res;
    }
    res.basis = exact::hnf_basis(IntMat::from_rows(c.accepted));
    res.all_exact = check && !c.any_inexact;
    return res;
}

namespace {

// transpose a ball matrix
std::vector<std::vector<Ball>> transpose(const std::vector<std::vector<Ball>>& a) {
    std::vector<std::vector<Ball>> t(a[0].size(), std::vector<Ball>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// does some k x k minor certifiably exclude zero?
bool minor_excludes_zero(const std::vector<std::vector<Ball>>& a, int k) {
    const int m = int(a.size()), n = int(a[0].size());
    std::vector<int> ri(k), ci(k);
    std::function<bool(int, int)> cols = [&](int pos, int start) -> bool {
        if (pos == k) {
            std::vector<std::vector<Ball>> sub(k, std::vector<Ball>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
            Ball d = det_ball(sub);
            return !d.contains_zero();
        }
        for (int c = start; c < n; ++c) {
            ci[pos] = c;
            if (cols(pos + 1, c + 1)) return true;
        }
        return false;
    };
    std::function<bool(int, int)> rows = [&](int pos, int start) -> bool {
        if (pos == k) return cols(0, 0);
        for (int r = start; r < m; ++r) {
            ri[pos] = r;
            if (rows(pos + 1, r + 1)) return true;
        }
        return false;
    };
    return rows(0, 0);
}

} // namespace

RankReport certified_numeric_rank(const std::vector<std::vector<Ball>>& a,
                                  const DetectOptions& opt, const ExactCheck& row_check,
                                  const ExactCheck& col_check) {
    RankReport rep;
    rep.prec = opt.prec;
    if (a.empty() || a[0].empty()) return rep;
    const int m = int(a.size()), n = int(a[0].size());
    const int kmax = std::min(m, n);

    for (int k = kmax; k >= 1; --k)
        if (minor_excludes_zero(a, k)) {
            rep.certified_lower = k;
            break;
        }

    // heuristic side: relations among rows (as vectors) and among columns
    auto rows_as_vectors = transpose(a); // component j lists row values
    LatticeResult rowrel =
        m >= 2 ? relation_lattice_detect(rows_as_vectors, opt, row_check) : LatticeResult{};
    LatticeResult colrel =
        n >= 2 ? relation_lattice_detect(a, opt, col_check) : LatticeResult{};
    rep.row_relations = rowrel.basis.rows();
    rep.col_relations = colrel.basis.rows();

    // smallest k where every k x k minor encloses zero
    int all_vanish = kmax + 1;
    for (int k = 1; k <= kmax; ++k)
        if (!minor_excludes_zero(a, k)) {
            all_vanish = k;
            break;
        }

    int conj = std::min(m - rep.row_relations, n - rep.col_relations);
    conj = std::min(conj, all_vanish - 1);
    rep.conjectural = std::max(conj, rep.certified_lower);
    return rep;
}

} // namespace fgc::real
