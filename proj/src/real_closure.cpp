#include "fgc/real_closure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/relations.hpp"
#include "fgc/sturm.hpp"

namespace fgc::real {

using exact::IntMat;
using exact::NfElement;

namespace {

long to_long(const Int& e) {
    if (!mpz_fits_slong_p(e.get_mpz_t())) throw Error("exponent too large in closure analysis");
    return e.get_si();
}

Rat rat_pow(const Rat& x, long e) {
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r(pow_int(x.get_num(), k), pow_int(x.get_den(), k));
    r.canonicalize();
    if (e < 0) r = Rat(1) / r;
    return r;
}

constexpr long kMaxCheckExponent = 512;

bool exponents_sane(const std::vector<Int>& c) {
    for (const Int& e : c)
        if (Int(abs(e)) > kMaxCheckExponent) return false;
    return true;
}

// row relation in the log matrix <=> the power product is +-1 coordinatewise
ExactCheck torus_row_check(const std::vector<std::vector<Rat>>& gens) {
    return [gens](const std::vector<Int>& c) -> std::optional<bool> {
        if (!exponents_sane(c)) return std::nullopt;
        const int d = int(gens[0].size());
        for (int j = 0; j < d; ++j) {
            Rat prod(1);
            for (size_t i = 0; i < gens.size(); ++i) prod *= rat_pow(gens[i][j], to_long(c[i]));
            if (prod != 1 && prod != -1) return false;
        }
        return true;
    };
}

// column relation <=> the |coordinate| power product is 1 for every generator
ExactCheck torus_col_check(const std::vector<std::vector<Rat>>& gens) {
    return [gens](const std::vector<Int>& c) -> std::optional<bool> {
        if (!exponents_sane(c)) return std::nullopt;
        for (const auto& g : gens) {
            Rat prod(1);
            for (size_t j = 0; j < g.size(); ++j) prod *= rat_pow(rat_abs(g[j]), to_long(c[j]));
            if (prod != 1) return false;
        }
        return true;
    };
}

std::vector<std::vector<Ball>> torus_log_matrix(const std::vector<std::vector<Rat>>& gens,
                                                long prec) {
    std::vector<std::vector<Ball>> lg(gens.size(), std::vector<Ball>(gens[0].size()));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens[i].size(); ++j) lg[i][j] = ln_rat(rat_abs(gens[i][j]), prec);
    return lg;
}

struct LevelResult {
    int id_dim = 0;          // conjectural dimension of the identity component
    int absorbed_rank = 0;   // free rank of the subgroup dense in it
    bool bottom_exact = true;
};

// recursive splitting: peel off certified discrete directions (characters with
// cyclic value group), pass the kernel subgroup to the complement coordinates,
// and treat the remaining block as dense in the span of its log vectors
LevelResult analyze_level(const std::vector<std::vector<Rat>>& gens, long prec) {
    const int m = int(gens.size());
    const int d = m ? int(gens[0].size()) : 0;
    if (d == 0 || m == 0) return {};
    if (exact::mult_rank(gens) == 0) return {};

    int box = 3;
    while (box > 1 && std::pow(double(2 * box + 1), d) > 2e5) --box;
    IntMat u = exact::rank_le1_characters(gens, box);

    if (u.rows() == 0) {
        DetectOptions opt;
        opt.prec = prec;
        RankReport rr = certified_numeric_rank(torus_log_matrix(gens, prec), opt,
                                               torus_row_check(gens), torus_col_check(gens));
        return {rr.conjectural, exact::mult_rank(gens), d == 1};
    }

    // exponent vectors of the character values along each discrete direction
    std::vector<std::vector<exact::RatFactorization>> vals(u.rows());
    std::map<Int, int> prime_col;
    for (int k = 0; k < u.rows(); ++k) {
        vals[k].reserve(m);
        for (int i = 0; i < m; ++i) {
            Rat v(1);
            for (int j = 0; j < d; ++j) v *= rat_pow(gens[i][j], to_long(u.at(k, j)));
            vals[k].push_back(exact::factor_rat(rat_abs(v)));
            for (const auto& [p, e] : vals[k].back().factors) prime_col.emplace(p, 0);
        }
    }
    int ncols = 0;
    for (auto& [p, idx] : prime_col) idx = ncols++;
    IntMat b(m, std::max(1, u.rows() * ncols));
    for (int k = 0; k < u.rows(); ++k)
        for (int i = 0; i < m; ++i)
            for (const auto& [p, e] : vals[k][i].factors)
                b.at(i, k * ncols + prime_col[p]) = e;

    IntMat kern = exact::left_kernel(b);
    if (kern.rows() == 0) return {}; // kernel subgroup is torsion only

    // complement coordinates: standard directions extending the discrete ones
    std::vector<int> comp;
    IntMat h = u;
    int have = exact::rank_q(h);
    for (int j = 0; j < d && int(comp.size()) < d - u.rows(); ++j) {
        IntMat trial(h.rows() + 1, d);
        for (int r = 0; r < h.rows(); ++r)
            for (int t = 0; t < d; ++t) trial.at(r, t) = h.at(r, t);
        trial.at(h.rows(), j) = 1;
        if (exact::rank_q(trial) > have) {
            comp.push_back(j);
            h = trial;
            ++have;
        }
    }
    if (comp.empty()) return {}; // discrete directions span everything

    std::vector<std::vector<Rat>> next(kern.rows(), std::vector<Rat>(comp.size()));
    for (int r = 0; r < kern.rows(); ++r)
        for (size_t t = 0; t < comp.size(); ++t) {
            Rat prod(1);
            for (int i = 0; i < m; ++i) prod *= rat_pow(gens[i][comp[t]], to_long(kern.at(r, i)));
            next[r][t] = prod;
        }
    return analyze_level(next, prec);
}

void map_verdict(RealClosureReport& rep, const LevelResult& lv, bool relations_exact) {
    rep.identity_component_dim = lv.id_dim;
    rep.discrete_rank = std::max(0, rep.generator_rank - lv.absorbed_rank);
    if (lv.id_dim == 0) {
        rep.verdict = ClosureVerdict::discrete;
        rep.discrete_rank = rep.generator_rank;
        rep.exact = relations_exact;
    } else if (lv.id_dim == rep.ambient_dim) {
        rep.verdict = ClosureVerdict::dense;
        rep.exact = relations_exact && lv.bottom_exact;
    } else if (lv.id_dim == rep.subtorus_dim && rep.discrete_rank == 0) {
        rep.verdict = ClosureVerdict::dense_in_subtorus;
        rep.exact = relations_exact && lv.bottom_exact;
    } else {
        rep.verdict = ClosureVerdict::undecided;
        rep.exact = false;
    }
}

} // namespace

std::string to_string(ClosureVerdict v) {
    switch (v) {
        case ClosureVerdict::discrete: return "discrete";
        case ClosureVerdict::dense_in_subtorus: return "dense_in_subtorus";
        case ClosureVerdict::dense: return "dense";
        default: return "undecided";
    }
}

RealClosureReport real_closure_verdict(const TorusSpec& spec, long prec) {
    validate(spec);
    RealClosureReport rep;
    rep.ambient_dim = spec.dim;
    rep.precision_bits = prec;
    rep.generator_rank = exact::mult_rank(spec.gens);
    rep.subtorus_dim = spec.dim - exact::smallest_subtorus(spec.gens).rows();

    DetectOptions opt;
    opt.prec = prec;
    rep.log_rank = certified_numeric_rank(torus_log_matrix(spec.gens, prec), opt,
                                          torus_row_check(spec.gens), torus_col_check(spec.gens));

    if (rep.generator_rank == 0) {
        rep.verdict = ClosureVerdict::discrete;
        rep.exact = true;
        return rep;
    }
    // a free group of rank r spanning an r-dimensional space is a lattice
    if (rep.log_rank.certified_lower == rep.generator_rank) {
        rep.verdict = ClosureVerdict::discrete;
        rep.discrete_rank = rep.generator_rank;
        rep.exact = true;
        return rep;
    }
    LevelResult lv = analyze_level(spec.gens, prec);
    map_verdict(rep, lv, true);
    return rep;
}

namespace {

NfElement nf_power_product(const std::vector<NfElement>& gens, const std::vector<Int>& c) {
    NfElement prod = NfElement::from_rat(gens[0].field(), Rat(1));
    for (size_t i = 0; i < gens.size(); ++i)
        if (c[i] != 0) prod = prod * gens[i].pow(c[i]);
    return prod;
}

// row relation among embedded logs <=> the field power product is a root of
// unity, i.e. +-1 in a totally real field
ExactCheck weil_row_check(const std::vector<NfElement>& gens) {
    return [gens](const std::vector<Int>& c) -> std::optional<bool> {
        if (!exponents_sane(c)) return std::nullopt;
        NfElement prod = nf_power_product(gens, c);
        NfElement one = NfElement::from_rat(gens[0].field(), Rat(1));
        return prod == one || prod == -one;
    };
}

// only the norm direction has an exact certificate among column relations
ExactCheck weil_col_check(const std::vector<NfElement>& gens) {
    return [gens](const std::vector<Int>& c) -> std::optional<bool> {
        bool uniform = true;
        for (const Int& e : c)
            if (e != c[0]) uniform = false;
        if (!uniform || c[0] == 0) return std::nullopt;
        for (const auto& g : gens)
            if (rat_abs(g.norm()) != 1) return false;
        return true;
    };
}

std::vector<std::vector<Ball>> weil_log_matrix(const std::vector<RealEmbedding>& embs,
                                               const std::vector<NfElement>& gens, long prec) {
    std::vector<std::vector<Ball>> lg(gens.size(), std::vector<Ball>(embs.size()));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < embs.size(); ++j) lg[i][j] = log_abs_embed(embs[j], gens[i], prec);
    return lg;
}

std::vector<std::vector<Ball>> transpose_balls(const std::vector<std::vector<Ball>>& a) {
    std::vector<std::vector<Ball>> t(a[0].size(), std::vector<Ball>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// relations confirmed by exact field arithmetic only (numeric near-misses and
// unverifiable candidates are dropped)
int verified_nf_relations(const std::vector<std::vector<Ball>>& lg,
                          const std::vector<NfElement>& gens, long prec) {
    if (gens.size() < 2) {
        return gens.size() == 1 && (gens[0] * gens[0] == NfElement::from_rat(gens[0].field(), Rat(1)))
                   ? 1
                   : 0;
    }
    DetectOptions opt;
    opt.prec = prec;
    ExactCheck base = weil_row_check(gens);
    ExactCheck strict = [base](const std::vector<Int>& c) -> std::optional<bool> {
        return base(c).value_or(false);
    };
    return relation_lattice_detect(transpose_balls(lg), opt, strict).basis.rows();
}

} // namespace

RealClosureReport real_closure_verdict(const WeilSpec& spec, long prec) {
    validate(spec);
    const exact::NumberField& k = *spec.field;
    auto embs = real_embeddings(k);
    if (int(embs.size()) != k.degree())
        throw UnsupportedInput("real closure verdicts require a totally real field");
    const int n = k.degree();
    const int m = int(spec.gens.size());

    RealClosureReport rep;
    rep.ambient_dim = n;
    rep.precision_bits = prec;

    auto lg = weil_log_matrix(embs, spec.gens, prec);
    DetectOptions opt;
    opt.prec = prec;
    rep.log_rank = certified_numeric_rank(lg, opt, weil_row_check(spec.gens),
                                          weil_col_check(spec.gens));
    rep.generator_rank = m - verified_nf_relations(lg, spec.gens, prec);

    // the norm is the only rational character of the restriction of scalars
    std::vector<std::vector<Rat>> norms;
    bool norm_one = true;
    for (const auto& g : spec.gens) {
        norms.push_back({rat_abs(g.norm())});
        if (norms.back()[0] != 1) norm_one = false;
    }
    rep.subtorus_dim = norm_one ? n - 1 : n;

    if (rep.generator_rank == 0) {
        rep.verdict = ClosureVerdict::discrete;
        rep.exact = true;
        return rep;
    }
    if (rep.log_rank.certified_lower == rep.generator_rank) {
        rep.verdict = ClosureVerdict::discrete;
        rep.discrete_rank = rep.generator_rank;
        rep.exact = true;
        return rep;
    }

    LevelResult lv;
    if (exact::mult_rank(norms) <= 1) {
        // the norm direction is discrete; analyze its kernel subgroup
        IntMat b(m, 1);
        std::map<Int, int> prime_col;
        std::vector<exact::RatFactorization> nf;
        for (const auto& v : norms) {
            nf.push_back(exact::factor_rat(v[0]));
            for (const auto& [p, e] : nf.back().factors) prime_col.emplace(p, 0);
        }
        int ncols = 0;
        for (auto& [p, idx] : prime_col) idx = ncols++;
        if (ncols > 0) {
            b = IntMat(m, ncols);
            for (int i = 0; i < m; ++i)
                for (const auto& [p, e] : nf[i].factors) b.at(i, prime_col[p]) = e;
        }
        IntMat kern = exact::left_kernel(b);
        std::vector<NfElement> sub;
        NfElement one = NfElement::from_rat(spec.field, Rat(1));
        for (int r = 0; r < kern.rows(); ++r) {
            std::vector<Int> c(m);
            for (int i = 0; i < m; ++i) c[i] = kern.at(r, i);
            NfElement g = nf_power_product(spec.gens, c);
            if (!(g * g == one)) sub.push_back(g); // drop torsion
        }
        if (sub.empty()) {
            // every kernel combination is torsion, so the kernel lattice is
            // exactly the relation lattice and the rank is no longer a bound
            rep.generator_rank = m - kern.rows();
        } else {
            auto lg2 = weil_log_matrix(embs, sub, prec);
            RankReport rr2 = certified_numeric_rank(lg2, opt, weil_row_check(sub),
                                                    weil_col_check(sub));
            lv.id_dim = rr2.conjectural;
            lv.absorbed_rank = int(sub.size()) - verified_nf_relations(lg2, sub, prec);
            lv.bottom_exact = false;
        }
    } else {
        lv.id_dim = rep.log_rank.conjectural;
        lv.absorbed_rank = rep.generator_rank;
        lv.bottom_exact = false;
    }
    map_verdict(rep, lv, true);
    return rep;
}

} // namespace fgc::real
