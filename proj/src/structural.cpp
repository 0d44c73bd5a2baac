#include "fgc/structural.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/par.hpp"
#include "fgc/rng.hpp"

namespace fgc::real {

using exact::IntMat;
using exact::RatMat;

namespace {

constexpr long kMaxCheckExponent = 512;

long to_long(const Int& e) {
    if (!mpz_fits_slong_p(e.get_mpz_t())) throw Error("exponent too large in structural analysis");
    return e.get_si();
}

Rat rat_pow(const Rat& x, long e) {
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r(pow_int(x.get_num(), k), pow_int(x.get_den(), k));
    r.canonicalize();
    if (e < 0) r = Rat(1) / r;
    return r;
}

bool exponents_sane(const std::vector<Int>& c) {
    for (const Int& e : c)
        if (Int(abs(e)) > kMaxCheckExponent) return false;
    return true;
}

void require_rectangular(size_t rows, size_t cols) {
    if (rows == 0 || cols == 0) throw ConfigError("matrix must be nonempty");
}

// reduced echelon form of the relation rows with pivots chosen rightmost, so
// the earliest entries survive as the value basis and every later entry is
// rewritten in terms of them
struct Rewrite {
    std::vector<int> free_cols;           // ascending
    std::map<int, std::vector<Rat>> expr; // pivot column -> coefficients over free_cols
};

Rewrite rewrite_from_relations(const IntMat& k) {
    const int r = k.rows(), n = k.cols();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(k.at(i, j));
    std::vector<int> pivot_row(n, -1);
    int used = 0;
    for (int col = n - 1; col >= 0 && used < r; --col) {
        int sel = -1;
        for (int i = used; i < r; ++i)
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[used]);
        Rat inv = Rat(1) / a[used][col];
        for (int j = 0; j < n; ++j) a[used][j] *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == used || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= Rat(f * a[used][j]);
        }
        pivot_row[col] = used;
        ++used;
    }
    Rewrite out;
    for (int col = 0; col < n; ++col)
        if (pivot_row[col] < 0) out.free_cols.push_back(col);
    for (int col = 0; col < n; ++col) {
        if (pivot_row[col] < 0) continue;
        const auto& row = a[pivot_row[col]];
        std::vector<Rat> coef(out.free_cols.size(), Rat(0));
        for (size_t l = 0; l < out.free_cols.size(); ++l) coef[l] = -row[out.free_cols[l]];
        out.expr[col] = std::move(coef);
    }
    return out;
}

PencilDecomposition assemble(const std::vector<std::vector<Ball>>& m, const IntMat& relations,
                             std::string confidence, long prec) {
    const int rows = int(m.size()), cols = int(m[0].size());
    Rewrite rw = rewrite_from_relations(relations);
    PencilDecomposition out;
    out.confidence = std::move(confidence);
    out.prec = prec;
    for (int f : rw.free_cols) out.lambda_basis.push_back(m[f / cols][f % cols]);
    const int k = int(rw.free_cols.size());
    out.b_matrices.assign(k, RatMat(rows, cols));
    for (int j = 0; j < rows * cols; ++j) {
        auto it = rw.expr.find(j);
        if (it == rw.expr.end()) {
            int l = int(std::lower_bound(rw.free_cols.begin(), rw.free_cols.end(), j) -
                        rw.free_cols.begin());
            out.b_matrices[l].at(j / cols, j % cols) = 1;
        } else {
            for (int l = 0; l < k; ++l) out.b_matrices[l].at(j / cols, j % cols) = it->second[l];
        }
    }
    return out;
}

std::vector<Ball> flatten(const std::vector<std::vector<Ball>>& m) {
    std::vector<Ball> flat;
    for (const auto& row : m) {
        if (row.size() != m[0].size()) throw ConfigError("matrix rows must have equal length");
        for (const Ball& b : row) flat.push_back(b);
    }
    return flat;
}

// ---- symbolic minors for small pencils ----

using Mono = std::array<int, 3>;
using Poly = std::map<Mono, Rat>;

void poly_add(Poly& a, const Poly& b, const Rat& scale) {
    for (const auto& [mo, co] : b) {
        Rat& slot = a[mo];
        slot += Rat(co * scale);
        if (slot == 0) a.erase(mo);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono mo{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            Rat& slot = out[mo];
            slot += Rat(ca * cb);
            if (slot == 0) out.erase(mo);
        }
    return out;
}

Poly entry_poly(const std::vector<RatMat>& pencil, int i, int j) {
    Poly p;
    for (size_t l = 0; l < pencil.size(); ++l) {
        const Rat& c = pencil[l].at(i, j);
        if (c == 0) continue;
        Mono mo{0, 0, 0};
        mo[l] = 1;
        p[mo] = c;
    }
    return p;
}

Poly det_poly(const std::vector<RatMat>& pencil, const std::vector<int>& rows,
              const std::vector<int>& cols) {
    const int n = int(rows.size());
    if (n == 1) return entry_poly(pencil, rows[0], cols[0]);
    Poly acc;
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (int j = 0; j < n; ++j) {
        Poly top = entry_poly(pencil, rows[0], cols[j]);
        if (top.empty()) continue;
        std::vector<int> rest;
        for (int t = 0; t < n; ++t)
            if (t != j) rest.push_back(cols[t]);
        Poly minor = det_poly(pencil, sub, rest);
        poly_add(acc, poly_mul(top, minor), j % 2 == 0 ? Rat(1) : Rat(-1));
    }
    return acc;
}

bool some_minor_nonzero(const std::vector<RatMat>& pencil, int k) {
    const int m = pencil[0].rows(), n = pencil[0].cols();
    std::vector<int> ri(k), ci(k);
    std::function<bool(int, int)> cols = [&](int pos, int start) -> bool {
        if (pos == k) return !det_poly(pencil, ri, ci).empty();
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

// ---- evaluation side ----

IntMat eval_pencil(const std::vector<IntMat>& c, const std::vector<long>& t) {
    IntMat m(c[0].rows(), c[0].cols());
    for (size_t l = 0; l < c.size(); ++l) {
        if (t[l] == 0) continue;
        Int f(t[l]);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) += f * c[l].at(i, j);
    }
    return m;
}

// index sets of an s x s nonsingular submatrix, by full-pivot elimination
GenericRankWitness make_witness(const IntMat& m, const std::vector<long>& t, int s) {
    GenericRankWitness w;
    for (long v : t) w.point.push_back(Int(v));
    if (s == 0) {
        w.minor_value = Rat(0);
        return w;
    }
    RatMat a = RatMat::from_int(m);
    std::vector<int> rleft, cleft;
    for (int i = 0; i < m.rows(); ++i) rleft.push_back(i);
    for (int j = 0; j < m.cols(); ++j) cleft.push_back(j);
    for (int step = 0; step < s; ++step) {
        int pi = -1, pj = -1;
        for (size_t i = step; i < rleft.size() && pi < 0; ++i)
            for (size_t j = step; j < cleft.size(); ++j)
                if (a.at(rleft[i], cleft[j]) != 0) {
                    pi = int(i);
                    pj = int(j);
                    break;
                }
        if (pi < 0) throw Error("rank witness extraction lost a pivot");
        std::swap(rleft[step], rleft[pi]);
        std::swap(cleft[step], cleft[pj]);
        const Rat piv = a.at(rleft[step], cleft[step]);
        for (size_t i = step + 1; i < rleft.size(); ++i) {
            Rat f = Rat(a.at(rleft[i], cleft[step]) / piv);
            if (f == 0) continue;
            for (size_t j = step; j < cleft.size(); ++j)
                a.at(rleft[i], cleft[j]) -= Rat(f * a.at(rleft[step], cleft[j]));
        }
    }
    w.rows.assign(rleft.begin(), rleft.begin() + s);
    w.cols.assign(cleft.begin(), cleft.begin() + s);
    std::sort(w.rows.begin(), w.rows.end());
    std::sort(w.cols.begin(), w.cols.end());
    RatMat sub(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub.at(i, j) = Rat(m.at(w.rows[i], w.cols[j]));
    w.minor_value = exact::det(sub);
    if (w.minor_value == 0) throw Error("rank witness minor vanished");
    return w;
}

Rat sampling_failure_bound(int s, const std::vector<long>& boxes, long per_box) {
    Rat fb(1);
    for (long e : boxes) {
        Rat per(Int(s + 1), Int(2) * pow2(static_cast<unsigned long>(e)) + 1);
        per.canonicalize();
        Rat powed(pow_int(per.get_num(), static_cast<unsigned long>(per_box)),
                  pow_int(per.get_den(), static_cast<unsigned long>(per_box)));
        powed.canonicalize();
        fb *= powed;
    }
    if (fb > 1) fb = 1;
    return fb;
}

// ---- multiplicative checks for rational log matrices ----

StructuralRankResult compose_result(PencilDecomposition pencil,
                                    const std::vector<std::vector<Ball>>& m,
                                    const DetectOptions& opt, const ExactCheck& row_check,
                                    const ExactCheck& col_check, unsigned long long seed,
                                    int workers) {
    StructuralRankResult res;
    res.pencil = std::move(pencil);
    res.generic = generic_rank(res.pencil.b_matrices, seed, workers);
    res.numeric = certified_numeric_rank(m, opt, row_check, col_check);
    res.s = res.generic.s;
    res.r = res.numeric.conjectural;
    if (res.numeric.certified_lower > res.s)
        throw Error("structural rank fell below the certified numeric rank");
    if (res.r > res.s || res.s > 2 * res.r)
        throw Error("numeric and structural ranks violate r <= s <= 2r");
    res.equality = res.r == res.s;
    return res;
}

} // namespace

ExactCheck log_row_check(const std::vector<std::vector<Rat>>& x) {
    return [x](const std::vector<Int>& c) -> std::optional<bool> {
        if (!exponents_sane(c)) return std::nullopt;
        for (size_t j = 0; j < x[0].size(); ++j) {
            Rat prod(1);
            for (size_t i = 0; i < x.size(); ++i) prod *= rat_pow(rat_abs(x[i][j]), to_long(c[i]));
            if (prod != 1) return false;
        }
        return true;
    };
}

ExactCheck log_col_check(const std::vector<std::vector<Rat>>& x) {
    return [x](const std::vector<Int>& c) -> std::optional<bool> {
        if (!exponents_sane(c)) return std::nullopt;
        for (const auto& row : x) {
            Rat prod(1);
            for (size_t j = 0; j < row.size(); ++j) prod *= rat_pow(rat_abs(row[j]), to_long(c[j]));
            if (prod != 1) return false;
        }
        return true;
    };
}

PencilDecomposition decompose(const std::vector<std::vector<Ball>>& m, const DetectOptions& opt,
                              const ExactCheck& check) {
    require_rectangular(m.size(), m.empty() ? 0 : m[0].size());
    std::vector<Ball> flat = flatten(m);
    LatticeResult lat = relation_lattice_detect({flat}, opt, check);
    if (lat.basis.cols() == 0) lat.basis = IntMat(0, int(flat.size()));
    return assemble(m, lat.basis, "conjectural_at_precision", opt.prec);
}

PencilDecomposition decompose_log_rat(const std::vector<std::vector<Rat>>& x, long prec) {
    require_rectangular(x.size(), x.empty() ? 0 : x[0].size());
    const int rows = int(x.size()), cols = int(x[0].size());
    std::vector<exact::RatFactorization> fac;
    std::vector<std::vector<Ball>> logs(rows, std::vector<Ball>(cols));
    for (int i = 0; i < rows; ++i) {
        if (int(x[i].size()) != cols) throw ConfigError("matrix rows must have equal length");
        for (int j = 0; j < cols; ++j) {
            if (x[i][j] == 0) throw ConfigError("matrix entries must be nonzero rationals");
            fac.push_back(exact::factor_rat(rat_abs(x[i][j])));
            logs[i][j] = ln_rat(rat_abs(x[i][j]), prec);
        }
    }
    std::map<Int, int> prime_col;
    for (const auto& f : fac)
        for (const auto& [p, e] : f.factors)
            if (!prime_col.count(p)) {
                int next = int(prime_col.size());
                prime_col[p] = next;
            }
    IntMat relations = IntMat::identity(rows * cols);
    if (!prime_col.empty()) {
        IntMat expo(rows * cols, int(prime_col.size()));
        for (size_t n = 0; n < fac.size(); ++n)
            for (const auto& [p, e] : fac[n].factors) expo.at(int(n), prime_col[p]) = e;
        relations = exact::left_kernel(expo);
    }
    return assemble(logs, relations, "exact", prec);
}

GenericRankResult generic_rank(const std::vector<RatMat>& pencil, unsigned long long seed,
                               int workers) {
    GenericRankResult res;
    res.seed = seed;
    res.failure_bound = Rat(0);
    if (pencil.empty()) {
        res.exact = true;
        return res;
    }
    const int m = pencil[0].rows(), n = pencil[0].cols();
    const int k = int(pencil.size());
    if (m == 0 || n == 0) throw ConfigError("pencil matrices must be nonempty");
    for (const RatMat& b : pencil)
        if (b.rows() != m || b.cols() != n) throw ConfigError("pencil matrices must share a shape");

    // clear denominators once; a single positive factor preserves every rank
    Int den(1);
    for (const RatMat& b : pencil)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) den = lcm(den, b.at(i, j).get_den());
    std::vector<IntMat> c(k, IntMat(m, n));
    for (int l = 0; l < k; ++l)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                Rat scaled = Rat(pencil[l].at(i, j) * Rat(den));
                scaled.canonicalize();
                c[l].at(i, j) = scaled.get_num();
            }

    const std::vector<long> boxes{4, 8, 16};
    const long per_box = 32;
    SplitMix64 rng(seed);
    std::vector<std::vector<long>> points;
    for (long e : boxes) {
        long bound = 1L << e;
        for (long i = 0; i < per_box; ++i) {
            std::vector<long> t(k);
            for (int l = 0; l < k; ++l) t[l] = rng.range(-bound, bound);
            points.push_back(std::move(t));
        }
    }
    std::vector<int> ranks =
        par::map_omp(points, [&](const std::vector<long>& t) { return exact::rank_q(eval_pencil(c, t)); },
                     workers);
    res.evaluations = long(points.size());
    long best = -1;
    for (size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] > res.s_sampled) {
            res.s_sampled = ranks[i];
            best = long(i);
        }
    res.s = res.s_sampled;

    if (m <= 4 && n <= 4 && k <= 3) {
        res.exact = true;
        int s_exact = 0;
        for (int r = std::min(m, n); r >= 1; --r)
            if (some_minor_nonzero(pencil, r)) {
                s_exact = r;
                break;
            }
        if (s_exact < res.s_sampled) throw Error("sampled rank exceeds the symbolic generic rank");
        res.s = s_exact;
        if (s_exact > res.s_sampled) {
            // a nonzero minor of degree <= 4 per variable cannot vanish on a
            // full 5-point grid, so this walk always lands
            best = -1;
            std::vector<long> t(k, -2);
            for (;;) {
                if (exact::rank_q(eval_pencil(c, t)) == s_exact) {
                    points.push_back(t);
                    best = long(points.size()) - 1;
                    break;
                }
                int l = 0;
                while (l < k && t[l] == 2) t[l++] = -2;
                if (l == k) throw Error("grid walk failed to realize the generic rank");
                ++t[l];
            }
        }
    } else {
        res.failure_bound = res.s >= std::min(m, n) ? Rat(0) : sampling_failure_bound(res.s, boxes, per_box);
    }

    if (res.s > 0) {
        res.witness = make_witness(eval_pencil(c, points[best]), points[best], res.s);
        // undo the denominator clearing in the reported minor
        Rat unscale(Int(1), pow_int(den, static_cast<unsigned long>(res.s)));
        unscale.canonicalize();
        res.witness.minor_value *= unscale;
    } else {
        res.witness.minor_value = Rat(0);
        if (!points.empty())
            for (long v : points[0]) res.witness.point.push_back(Int(v));
    }
    return res;
}

StructuralRankResult structural_rank(const std::vector<std::vector<Ball>>& m,
                                     const DetectOptions& opt, const ExactCheck& entry_check,
                                     const ExactCheck& row_check, const ExactCheck& col_check,
                                     unsigned long long seed, int workers) {
    PencilDecomposition pencil = decompose(m, opt, entry_check);
    return compose_result(std::move(pencil), m, opt, row_check, col_check, seed, workers);
}

StructuralRankResult structural_rank_log_rat(const std::vector<std::vector<Rat>>& x, long prec,
                                             unsigned long long seed, int workers) {
    PencilDecomposition pencil = decompose_log_rat(x, prec);
    std::vector<std::vector<Ball>> logs(x.size(), std::vector<Ball>(x[0].size()));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x[i].size(); ++j) logs[i][j] = ln_rat(rat_abs(x[i][j]), prec);
    DetectOptions opt;
    opt.prec = prec;
    return compose_result(std::move(pencil), logs, opt, log_row_check(x), log_col_check(x),
                          seed, workers);
}

} // namespace fgc::real
