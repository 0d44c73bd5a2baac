#include "fgc/padic_closure.hpp"

#include <algorithm>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/intmat.hpp"
#include "fgc/par.hpp"
#include "fgc/relations.hpp"

namespace fgc::padic {

namespace {

Int mod_reduce(const Int& v, const Int& modulus) {
    Int out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Int mod_inverse(const Int& v, const Int& modulus) {
    Int out;
    if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw Error("p-adic inverse of a non-unit");
    return out;
}

} // namespace

PadicRankResult padic_rank(std::vector<std::vector<Int>> a, const Int& p, long n) {
    const int m = static_cast<int>(a.size());
    const int d = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<char> rowon(m, 1), colon(d, 1);
    int rleft = m, cleft = d, rank = 0;
    long avail = n;
    while (rleft > 0 && cleft > 0 && avail > 0) {
        Int pa = pow_int(p, static_cast<unsigned long>(avail));
        long best = avail;
        int bi = -1, bj = -1;
        for (int i = 0; i < m; ++i) {
            if (!rowon[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (!colon[j]) continue;
                a[i][j] = mod_reduce(a[i][j], pa);
                if (a[i][j] == 0) continue;
                Int rest;
                long v = static_cast<long>(remove_factor(a[i][j], p, rest));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0) break; // everything left vanishes to the current precision
        ++rank;
        Int pv = pow_int(p, static_cast<unsigned long>(best));
        Int pa2 = pow_int(p, static_cast<unsigned long>(avail - best));
        Int inv = mod_inverse(mod_reduce(a[bi][bj] / pv, pa2), pa2);
        for (int i = 0; i < m; ++i) {
            if (!rowon[i] || i == bi) continue;
            Int mult = mod_reduce((a[i][bj] / pv) * inv, pa2);
            for (int j = 0; j < d; ++j) {
                if (!colon[j]) continue;
                a[i][j] = mod_reduce(a[i][j] - mult * a[bi][j], pa2);
            }
        }
        rowon[bi] = 0;
        colon[bj] = 0;
        --rleft;
        --cleft;
        avail -= best;
    }
    return {rank, rleft == 0 || cleft == 0};
}

namespace {

Int torsion_from_units(const std::vector<Int>& residues, const Int& p) {
    Int e(1);
    for (const Int& u : residues) {
        if (p == 2)
            e = lcm(e, mod_reduce(u, Int(4)) == 3 ? Int(2) : Int(1));
        else
            e = lcm(e, unit_order_mod_p(u, p));
    }
    return e;
}

PadicClosureReport finish_report(const Int& p, int rank, int r_v, const Int& torsion, long n,
                                 bool certified) {
    PadicClosureReport rep;
    rep.p = p;
    rep.d_p = rank;
    rep.r_v = r_v;
    rep.ell_p = r_v + rank;
    rep.torsion_exponent = torsion;
    rep.precision_used = n;
    rep.certified = certified;
    rep.status = certified ? "certified" : "needs_more_precision";
    return rep;
}

} // namespace

DpOutcome dp_rank(const TorusSpec& spec, const Int& p, long n, long n_cap) {
    validate(spec);
    if (!exact::is_prime(p)) throw ConfigError("scan prime is not prime");
    const int m = static_cast<int>(spec.gens.size());
    const int d = spec.dim;

    // split each coordinate into p-power and unit parts
    exact::IntMat valmat(m, d);
    std::vector<std::vector<Rat>> units(m, std::vector<Rat>(d));
    std::vector<Int> unit_residues;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j) {
            Int num_rest, den_rest;
            long vn = static_cast<long>(remove_factor(spec.gens[i][j].get_num(), p, num_rest));
            long vd = static_cast<long>(remove_factor(spec.gens[i][j].get_den(), p, den_rest));
            valmat.at(i, j) = vn - vd;
            Rat u = Rat(num_rest) / Rat(den_rest);
            units[i][j] = u;
            unit_residues.push_back(padic_from_rat(u, p, 1).r);
        }
    const int r_v = exact::rank_q(valmat);
    const int cap = std::min(exact::mult_rank(units), d);
    const Int torsion = torsion_from_units(unit_residues, p);

    for (long big = n;; big *= 2) {
        long n_eff = p == 2 ? big - 2 : big;
        std::vector<std::vector<Int>> logs(m, std::vector<Int>(d));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < d; ++j)
                logs[i][j] = padic_log_unit(padic_from_rat(units[i][j], p, big)).r;
        PadicRankResult pr = padic_rank(logs, p, n_eff);
        bool certified = pr.complete || pr.rank == cap;
        if (certified || 2 * big > n_cap)
            return {finish_report(p, pr.rank, r_v, torsion, big, certified), ""};
    }
}

DpOutcome dp_rank(const WeilSpec& spec, const Int& p, long n, long n_cap) {
    validate(spec);
    if (!exact::is_prime(p)) throw ConfigError("scan prime is not prime");
    const int m = static_cast<int>(spec.gens.size());
    const int d = spec.field->degree();

    for (long big = n;; big *= 2) {
        HenselOutcome h = hensel_lift_roots(spec.field->poly(), p, big);
        if (!h.set) return {std::nullopt, h.refusal};
        long n_eff = p == 2 ? big - 2 : big;
        std::vector<std::vector<Int>> logs(m, std::vector<Int>(d));
        std::vector<Int> unit_residues;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < d; ++j) {
                auto val = embed_at_root(*h.set, j, spec.gens[i].coords());
                if (!val) return {std::nullopt, "generator is not p-integral"};
                if (!val->is_unit()) return {std::nullopt, "generator is not a p-adic unit"};
                unit_residues.push_back(val->r);
                logs[i][j] = padic_log_unit(*val).r;
            }
        const Int torsion = torsion_from_units(unit_residues, p);
        PadicRankResult pr = padic_rank(logs, p, n_eff);
        // without an exact rank for the generators, only structural completion
        // or the generator-count ceiling certify the rank
        bool certified = pr.complete || pr.rank == std::min(m, d);
        if (certified || 2 * big > n_cap)
            return {finish_report(p, pr.rank, 0, torsion, big, certified), ""};
    }
}

NoriScanReport nori_scan(const GroupSpec& spec, const Int& lo, const Int& hi, long n,
                         int workers) {
    if (std::holds_alternative<EllipticSpec>(spec))
        throw UnsupportedInput("elliptic scans are provided by the curve engine");

    std::vector<Int> primes;
    for (Int q = std::max(lo, Int(2)); q <= hi; ++q)
        if (exact::is_prime(q)) primes.push_back(q);

    auto outcomes = par::map_omp(
        primes,
        [&spec, n](const Int& p) -> DpOutcome {
            try {
                if (const auto* t = std::get_if<TorusSpec>(&spec)) return dp_rank(*t, p, n);
                return dp_rank(std::get<WeilSpec>(spec), p, n);
            } catch (const Error& e) {
                return {std::nullopt, e.what()};
            }
        },
        workers);

    NoriScanReport rep;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (outcomes[i].report) {
            rep.rows.push_back(*outcomes[i].report);
            rep.all_certified = rep.all_certified && outcomes[i].report->certified;
        } else {
            rep.skipped.emplace_back(primes[i], outcomes[i].skip_reason);
        }
    }
    if (rep.rows.empty()) {
        rep.verdict = "no data";
        return rep;
    }
    bool constant = true;
    for (const auto& row : rep.rows) constant = constant && row.d_p == rep.rows[0].d_p;
    rep.verdict = constant ? "constant" : "varies";
    if (constant) rep.d_value = rep.rows[0].d_p;
    return rep;
}

int topological_rank(const GroupShape& s) {
    if (s.real_dim < 0 || s.circle_dim < 0 || s.z_rank < 0 || s.zp_rank < 0)
        throw ConfigError("negative dimension in a group shape");
    if (s.zp_rank > 0 && (s.real_dim > 0 || s.circle_dim > 0))
        throw UnsupportedInput("mixed archimedean and p-adic shapes");
    if (s.zp_rank > 0) return s.z_rank + s.zp_rank;
    if (s.real_dim > 0) return s.z_rank + s.real_dim + 1;
    if (s.circle_dim > 0) return s.z_rank + 1;
    return s.z_rank;
}

} // namespace fgc::padic
