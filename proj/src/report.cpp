#include "fgc/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "fgc/ball.hpp"
#include "fgc/diophantine.hpp"
#include "fgc/elliptic.hpp"
#include "fgc/elliptic_padic.hpp"
#include "fgc/errors.hpp"
#include "fgc/factor.hpp"
#include "fgc/intmat.hpp"
#include "fgc/numberfield.hpp"
#include "fgc/padic_closure.hpp"
#include "fgc/par.hpp"
#include "fgc/real_closure.hpp"
#include "fgc/structural.hpp"
#include "fgc/sturm.hpp"

namespace fgc::cli {

namespace {

using nlohmann::json;

std::string str(const Int& n) { return n.get_str(); }
std::string str(const Rat& r) { return r.get_str(); }

std::string point_str(const ECPoint& p) {
    if (p.infinity) return "O";
    return "(" + str(p.x) + ", " + str(p.y) + ")";
}

json rat_list_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(str(x));
    return a;
}

json int_list_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(str(x));
    return a;
}

json rat_rows_json(const std::vector<std::vector<Rat>>& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(rat_list_json(row));
    return a;
}

json ratmat_json(const exact::RatMat& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(str(m.at(i, j)));
        a.push_back(row);
    }
    return a;
}

json primes_json(const PrimeSelection& sel) {
    if (sel.is_range()) return str(sel.lo) + ".." + str(sel.hi);
    return int_list_json(sel.list);
}

json theta_json(const ThetaSpec& t) {
    json j;
    if (t.rational) {
        j["rational"] = str(*t.rational);
        return j;
    }
    j["poly"] = int_list_json(t.poly);
    j["element"] = rat_list_json(t.element);
    j["embedding"] = t.embedding;
    return j;
}

json config_json(const ScenarioConfig& cfg) {
    json j;
    j["kind"] = to_string(cfg.kind);
    j["label"] = cfg.label;
    switch (cfg.kind) {
        case ScenarioKind::kronecker:
            j["theta"] = theta_json(cfg.theta);
            break;
        case ScenarioKind::dirichlet:
            j["theta"] = theta_json(cfg.theta);
            j["count"] = cfg.count;
            break;
        case ScenarioKind::six_exp:
        case ScenarioKind::four_exp_matrix:
            j["matrix"] = rat_rows_json(cfg.matrix);
            j["precision"] = cfg.precision;
            break;
        case ScenarioKind::structural_rank:
            j["matrix"] = rat_rows_json(cfg.matrix);
            j["precision"] = cfg.precision;
            break;
        case ScenarioKind::torus_closure:
            j["dim"] = cfg.torus->dim;
            j["gens"] = rat_rows_json(cfg.torus->gens);
            j["precision"] = cfg.precision;
            break;
        case ScenarioKind::nori_scan:
            if (cfg.torus) {
                j["dim"] = cfg.torus->dim;
                j["gens"] = rat_rows_json(cfg.torus->gens);
            } else {
                j["poly"] = int_list_json(cfg.field_poly);
                j["gens"] = rat_rows_json(cfg.field_gens);
            }
            j["primes"] = primes_json(cfg.primes);
            j["padic_n"] = cfg.padic_n;
            break;
        case ScenarioKind::elliptic_scan: {
            j["curve"] = int_list_json(cfg.elliptic->a);
            j["copies"] = cfg.elliptic->copies;
            json gens = json::array();
            for (const auto& tuple : cfg.elliptic->gens) {
                json t = json::array();
                for (const ECPoint& p : tuple) t.push_back(point_str(p));
                gens.push_back(t);
            }
            j["gens"] = gens;
            j["primes"] = primes_json(cfg.primes);
            j["padic_n"] = cfg.padic_n;
            break;
        }
        case ScenarioKind::mazur_check: {
            j["curve"] = int_list_json(cfg.elliptic->a);
            json pts = json::array();
            for (const ECPoint& p : cfg.elliptic->gens[0]) pts.push_back(point_str(p));
            j["points"] = pts;
            j["prime"] = str(cfg.prime);
            j["padic_n"] = cfg.padic_n;
            j["bound"] = cfg.search_bound;
            break;
        }
    }
    return j;
}

exact::FieldPtr make_field(const std::vector<Int>& poly) {
    return std::make_shared<const exact::NumberField>(poly);
}

exact::NfElement make_element(exact::FieldPtr field, std::vector<Rat> coords) {
    coords.resize(field->degree(), Rat(0));
    return exact::NfElement(std::move(field), std::move(coords));
}

real::RealEmbedding pick_embedding(const exact::NumberField& k, int index) {
    auto embs = real::real_embeddings(k);
    if (index < 0 || index >= int(embs.size()))
        throw ConfigError("embedding index " + std::to_string(index) + " out of range: the field has " +
                          std::to_string(embs.size()) + " real embeddings");
    return embs[size_t(index)];
}

json rank_report_json(const real::RankReport& r) {
    json j;
    j["certified_lower"] = r.certified_lower;
    j["conjectural"] = r.conjectural;
    j["precision_bits"] = r.prec;
    j["row_relations"] = r.row_relations;
    j["col_relations"] = r.col_relations;
    return j;
}

std::vector<std::vector<real::Ball>> log_abs_balls(const std::vector<std::vector<Rat>>& x, long prec) {
    std::vector<std::vector<real::Ball>> m;
    for (const auto& row : x) {
        std::vector<real::Ball> out;
        for (const Rat& v : row) out.push_back(real::ln_rat(rat_abs(v), prec));
        m.push_back(std::move(out));
    }
    return m;
}

// no integer vector c has prod_i x[i][j]^{c_i} = +-1 for every column j
bool rows_independent(const std::vector<std::vector<Rat>>& x) {
    std::map<Int, int> col_of;
    std::vector<std::vector<exact::RatFactorization>> fac;
    for (const auto& row : x) {
        std::vector<exact::RatFactorization> frow;
        for (const Rat& v : row) {
            frow.push_back(exact::factor_rat(rat_abs(v)));
            for (const auto& [p, e] : frow.back().factors)
                col_of.emplace(p, int(col_of.size()));
        }
        fac.push_back(std::move(frow));
    }
    const int np = int(col_of.size());
    if (np == 0) return false; // every entry is a unit, all logs vanish
    const int cols = int(x[0].size());
    exact::IntMat expo(int(x.size()), np * cols);
    for (size_t i = 0; i < x.size(); ++i)
        for (int j = 0; j < cols; ++j)
            for (const auto& [p, e] : fac[i][j].factors)
                expo.at(int(i), j * np + col_of[p]) = e;
    return exact::left_kernel(expo).rows() == 0;
}

std::vector<std::vector<Rat>> transpose(const std::vector<std::vector<Rat>>& x) {
    std::vector<std::vector<Rat>> t(x[0].size(), std::vector<Rat>(x.size()));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x[0].size(); ++j) t[j][i] = x[i][j];
    return t;
}

json scan_report_json(const padic::NoriScanReport& rep) {
    json j;
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r;
        r["p"] = str(row.p);
        r["d_p"] = row.d_p;
        r["r_v"] = row.r_v;
        r["ell_p"] = row.ell_p;
        r["torsion_exponent"] = str(row.torsion_exponent);
        r["precision_used"] = row.precision_used;
        r["certified"] = row.certified;
        r["status"] = row.status;
        rows.push_back(r);
    }
    j["rows"] = rows;
    json skipped = json::array();
    for (const auto& [p, reason] : rep.skipped) {
        json s;
        s["p"] = str(p);
        s["reason"] = reason;
        skipped.push_back(s);
    }
    j["skipped"] = skipped;
    j["verdict"] = rep.verdict;
    if (rep.d_value)
        j["d_value"] = *rep.d_value;
    else
        j["d_value"] = nullptr;
    j["all_certified"] = rep.all_certified;
    return j;
}

// list-of-primes variant of the range scan: same aggregation as the engine
template <class PerPrime>
padic::NoriScanReport scan_list(const std::vector<Int>& primes, int workers, PerPrime per_prime) {
    auto outcomes = par::map_omp(primes, per_prime, workers);
    padic::NoriScanReport rep;
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

json run_kronecker(const ScenarioConfig& cfg, bool& certified) {
    real::KroneckerReport rep;
    if (cfg.theta.rational) {
        rep = real::kronecker_verdict(*cfg.theta.rational);
    } else {
        auto field = make_field(cfg.theta.poly);
        rep = real::kronecker_verdict(make_element(field, cfg.theta.element));
    }
    json j;
    j["dense"] = rep.dense;
    j["rational"] = rep.rational;
    j["exact"] = true;
    certified = true;
    return j;
}

json run_dirichlet(const ScenarioConfig& cfg, bool& certified) {
    real::DirichletResult res;
    if (cfg.theta.rational) {
        res = real::dirichlet_convergents(*cfg.theta.rational, cfg.count);
    } else {
        auto field = make_field(cfg.theta.poly);
        auto emb = pick_embedding(*field, cfg.theta.embedding);
        res = real::dirichlet_convergents(emb, make_element(field, cfg.theta.element), cfg.count);
    }
    json j;
    json conv = json::array();
    for (const auto& c : res.convergents) {
        json e;
        e["p"] = str(c.p);
        e["q"] = str(c.q);
        e["err"] = c.err.to_string();
        conv.push_back(e);
    }
    j["convergents"] = conv;
    j["terminated"] = res.terminated;
    j["certified"] = res.certified;
    certified = res.certified;
    return j;
}

json run_six_exp(const ScenarioConfig& cfg, bool& certified) {
    const auto& x = cfg.matrix;
    const bool rows_ind = rows_independent(x);
    const bool cols_ind = rows_independent(transpose(x));
    real::DetectOptions opt;
    opt.prec = cfg.precision;
    real::RankReport rank = real::certified_numeric_rank(log_abs_balls(x, cfg.precision), opt,
                                             real::log_row_check(x), real::log_col_check(x));
    long prec = cfg.precision;
    while (rows_ind && cols_ind && rank.certified_lower < 2 && prec < 4 * cfg.precision) {
        prec *= 2;
        opt.prec = prec;
        rank = real::certified_numeric_rank(log_abs_balls(x, prec), opt, real::log_row_check(x),
                                      real::log_col_check(x));
    }
    // rank 2 is a theorem for independent rows and columns; failing to reach
    // it after the precision retries means the arithmetic is broken
    if (rows_ind && cols_ind && rank.certified_lower < 2)
        throw Error("six exponentials instance with independent rows and columns failed to "
                    "certify rank 2");
    json j;
    j["rank"] = rank_report_json(rank);
    j["rows_independent"] = rows_ind;
    j["cols_independent"] = cols_ind;
    j["theorem_applies"] = rows_ind && cols_ind;
    certified = rows_ind && cols_ind && rank.certified_lower >= 2;
    return j;
}

json run_four_exp(const ScenarioConfig& cfg, bool& certified) {
    real::Ball det = real::det_ball(log_abs_balls(cfg.matrix, cfg.precision));
    const bool nonzero = det.certain_sign() != 0;
    json j;
    j["det"] = det.to_string();
    j["zero_excluded"] = nonzero;
    j["precision_bits"] = cfg.precision;
    j["label"] =
        nonzero ? "numerically nonzero; unproven in general" : "zero not excluded at this precision";
    // the general nonvanishing is an open problem, so the verdict never
    // upgrades past conjectural
    certified = false;
    return j;
}

json closure_report_json(const real::RealClosureReport& rep) {
    json j;
    j["ambient_dim"] = rep.ambient_dim;
    j["generator_rank"] = rep.generator_rank;
    j["subtorus_dim"] = rep.subtorus_dim;
    j["identity_component_dim"] = rep.identity_component_dim;
    j["discrete_rank"] = rep.discrete_rank;
    j["verdict"] = real::to_string(rep.verdict);
    j["exact"] = rep.exact;
    j["precision_bits"] = rep.precision_bits;
    j["log_rank"] = rank_report_json(rep.log_rank);
    return j;
}

json run_torus_closure(const ScenarioConfig& cfg, bool& certified) {
    validate(*cfg.torus);
    auto rep = real::real_closure_verdict(*cfg.torus, cfg.precision);
    certified = rep.exact;
    return closure_report_json(rep);
}

json run_nori_scan(const ScenarioConfig& cfg, const RunOptions& opt, bool& certified) {
    padic::NoriScanReport rep;
    if (cfg.torus) {
        validate(*cfg.torus);
        const TorusSpec& spec = *cfg.torus;
        if (cfg.primes.is_range()) {
            rep = padic::nori_scan(GroupSpec(spec), cfg.primes.lo, cfg.primes.hi, cfg.padic_n,
                                   opt.workers);
        } else {
            rep = scan_list(cfg.primes.list, opt.workers,
                            [&spec, &cfg](const Int& p) -> padic::DpOutcome {
                                try {
                                    return padic::dp_rank(spec, p, cfg.padic_n);
                                } catch (const Error& e) {
                                    return {std::nullopt, e.what()};
                                }
                            });
        }
    } else {
        auto field = make_field(cfg.field_poly);
        WeilSpec spec;
        spec.field = field;
        for (const auto& coords : cfg.field_gens) spec.gens.push_back(make_element(field, coords));
        spec.label = cfg.label;
        validate(spec);
        if (cfg.primes.is_range()) {
            rep = padic::nori_scan(GroupSpec(spec), cfg.primes.lo, cfg.primes.hi, cfg.padic_n,
                                   opt.workers);
        } else {
            rep = scan_list(cfg.primes.list, opt.workers,
                            [&spec, &cfg](const Int& p) -> padic::DpOutcome {
                                try {
                                    return padic::dp_rank(spec, p, cfg.padic_n);
                                } catch (const Error& e) {
                                    return {std::nullopt, e.what()};
                                }
                            });
        }
    }
    certified = !rep.rows.empty() && rep.all_certified;
    return scan_report_json(rep);
}

json run_elliptic_scan(const ScenarioConfig& cfg, const RunOptions& opt, bool& certified) {
    const EllipticSpec& spec = *cfg.elliptic;
    padic::NoriScanReport rep;
    if (cfg.primes.is_range()) {
        rep = ec::ec_nori_scan(spec, cfg.primes.lo, cfg.primes.hi, cfg.padic_n, opt.workers);
    } else {
        rep = scan_list(cfg.primes.list, opt.workers,
                        [&spec, &cfg](const Int& p) -> padic::DpOutcome {
                            try {
                                return ec::ec_dp_rank(spec, p, cfg.padic_n);
                            } catch (const Error& e) {
                                return {std::nullopt, e.what()};
                            }
                        });
    }
    certified = !rep.rows.empty() && rep.all_certified;
    return scan_report_json(rep);
}

json run_structural(const ScenarioConfig& cfg, const RunOptions& opt, bool& certified) {
    auto rep = real::structural_rank_log_rat(cfg.matrix, cfg.precision, cfg.seed, opt.workers);
    json j;
    json pencil;
    pencil["confidence"] = rep.pencil.confidence;
    pencil["precision_bits"] = rep.pencil.prec;
    json lambda = json::array();
    for (const real::Ball& b : rep.pencil.lambda_basis) lambda.push_back(b.to_string());
    pencil["lambda"] = lambda;
    json mats = json::array();
    for (const auto& m : rep.pencil.b_matrices) mats.push_back(ratmat_json(m));
    pencil["matrices"] = mats;
    j["pencil"] = pencil;

    json gen;
    gen["s_sampled"] = rep.generic.s_sampled;
    gen["evaluations"] = rep.generic.evaluations;
    gen["failure_bound"] = str(rep.generic.failure_bound);
    gen["exact"] = rep.generic.exact;
    json wit;
    wit["point"] = int_list_json(rep.generic.witness.point);
    wit["rows"] = rep.generic.witness.rows;
    wit["cols"] = rep.generic.witness.cols;
    wit["minor"] = str(rep.generic.witness.minor_value);
    gen["witness"] = wit;
    j["generic"] = gen;

    j["numeric"] = rank_report_json(rep.numeric);
    j["s"] = rep.s;
    j["r"] = rep.r;
    j["equality"] = rep.equality;
    certified = rep.pencil.confidence == "exact" && rep.generic.exact;
    return j;
}

json run_mazur(const ScenarioConfig& cfg, bool& certified) {
    ec::EllipticCurve e(cfg.elliptic->a);
    const auto& tri = cfg.elliptic->gens.at(0);
    auto rep = ec::mazur_counterexample_check(e, tri.at(0), tri.at(1), tri.at(2), cfg.prime,
                                              cfg.padic_n, cfg.search_bound);
    json j;
    j["p"] = str(rep.p);
    j["precision"] = rep.precision;
    j["skew_verified"] = rep.skew_verified;
    j["det_exactly_zero"] = rep.det_exactly_zero;
    j["d_p"] = rep.d_p;
    j["d_p_certified"] = rep.d_p_certified;
    if (rep.relation)
        j["relation"] = int_list_json(*rep.relation);
    else
        j["relation"] = nullptr;
    j["search_bound"] = rep.search_bound;
    certified = rep.skew_verified && rep.d_p_certified;
    return j;
}

void render(std::ostream& os, const json& v, int indent);

bool scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool table_shaped(const json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& el : v)
        if (!el.is_object()) return false;
    for (const auto& [key, field] : v[0].items())
        if (!scalar(field)) return false;
    return true;
}

void render_table(std::ostream& os, const json& rows, int indent) {
    std::vector<std::string> keys;
    for (const auto& [key, field] : rows[0].items()) keys.push_back(key);
    std::vector<size_t> width(keys.size());
    std::vector<std::vector<std::string>> cells;
    for (size_t k = 0; k < keys.size(); ++k) width[k] = keys[k].size();
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (size_t k = 0; k < keys.size(); ++k) {
            std::string cell = row.contains(keys[k]) ? scalar_str(row[keys[k]]) : "";
            width[k] = std::max(width[k], cell.size());
            line.push_back(std::move(cell));
        }
        cells.push_back(std::move(line));
    }
    std::string pad(indent, ' ');
    os << pad;
    for (size_t k = 0; k < keys.size(); ++k)
        os << keys[k] << std::string(width[k] - keys[k].size() + 2, ' ');
    os << "\n";
    for (const auto& line : cells) {
        os << pad;
        for (size_t k = 0; k < keys.size(); ++k)
            os << line[k] << std::string(width[k] - line[k].size() + 2, ' ');
        os << "\n";
    }
}

void render(std::ostream& os, const json& v, int indent) {
    std::string pad(indent, ' ');
    for (const auto& [key, field] : v.items()) {
        if (scalar(field)) {
            os << pad << key << ": " << scalar_str(field) << "\n";
        } else if (field.is_array() && std::all_of(field.begin(), field.end(), scalar)) {
            os << pad << key << ":";
            for (const auto& el : field) os << " " << scalar_str(el);
            os << "\n";
        } else if (table_shaped(field)) {
            os << pad << key << ":\n";
            render_table(os, field, indent + 2);
        } else if (field.is_array()) {
            os << pad << key << ": " << field.dump() << "\n";
        } else {
            os << pad << key << ":\n";
            render(os, field, indent + 2);
        }
    }
}

} // namespace

const char* tool_version() { return "0.1.0"; }

RunOutcome run_scenario(const ScenarioConfig& cfg, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    json result;
    bool certified = false;
    switch (cfg.kind) {
        case ScenarioKind::kronecker: result = run_kronecker(cfg, certified); break;
        case ScenarioKind::dirichlet: result = run_dirichlet(cfg, certified); break;
        case ScenarioKind::six_exp: result = run_six_exp(cfg, certified); break;
        case ScenarioKind::four_exp_matrix: result = run_four_exp(cfg, certified); break;
        case ScenarioKind::torus_closure: result = run_torus_closure(cfg, certified); break;
        case ScenarioKind::nori_scan: result = run_nori_scan(cfg, opt, certified); break;
        case ScenarioKind::elliptic_scan: result = run_elliptic_scan(cfg, opt, certified); break;
        case ScenarioKind::structural_rank: result = run_structural(cfg, opt, certified); break;
        case ScenarioKind::mazur_check: result = run_mazur(cfg, certified); break;
    }
    RunOutcome out;
    out.status = certified ? "certified" : "conjectural";
    out.exit_code = certified ? 0 : 2;
    out.report["config"] = config_json(cfg);
    out.report["result"] = result;
    out.report["seed"] = cfg.seed;
    out.report["status"] = out.status;
    out.report["version"] = tool_version();
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        out.report["timings_ms"] = json{{"total", ms}};
    }
    return out;
}

std::string emit_json(const json& report) { return report.dump(2) + "\n"; }

std::string emit_table(const json& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

namespace {

// demo texts are byte-identical to the shipped fixture files; a unit test
// keeps the two in sync
const std::map<std::string, std::string>& demo_table() {
    static const std::map<std::string, std::string> demos{
        {"kronecker",
         "# density of the orbit of multiples of a quadratic irrational\n"
         "kind: kronecker\n"
         "label: sqrt2-orbit\n"
         "poly: -2, 0, 1\n"
         "element: 0, 1\n"
         "embedding: 1\n"},
        {"dirichlet",
         "# continued fraction convergents of sqrt 2 with certified quality\n"
         "kind: dirichlet\n"
         "label: sqrt2-convergents\n"
         "poly: -2, 0, 1\n"
         "element: 0, 1\n"
         "embedding: 1\n"
         "count: 10\n"},
        {"four_exp",
         "# 2x2 determinant of prime logs; nonvanishing is open in general\n"
         "kind: four_exp_matrix\n"
         "label: four-exponentials\n"
         "row: 2, 3\n"
         "row: 5, 7\n"
         "precision: 256\n"},
        {"six_exp",
         "# 3x2 prime log matrix; rank 2 is forced once rows and columns are\n"
         "# multiplicatively independent\n"
         "kind: six_exp\n"
         "label: six-exponentials\n"
         "row: 2, 3\n"
         "row: 5, 7\n"
         "row: 11, 13\n"
         "precision: 256\n"},
        {"counterexample",
         "# rank-3 subgroup of the split 3-torus whose log matrix drops to rank 2\n"
         "kind: torus_closure\n"
         "label: rank-two-log-matrix\n"
         "dim: 3\n"
         "gen: 1, 2, 3\n"
         "gen: 1/2, 1, 5\n"
         "gen: 1/3, 1/5, 1\n"
         "precision: 256\n"},
        {"structural",
         "# structural rank of the same log matrix via its rational pencil\n"
         "kind: structural_rank\n"
         "label: skew-pencil\n"
         "row: 1, 2, 3\n"
         "row: 1/2, 1, 5\n"
         "row: 1/3, 1/5, 1\n"
         "precision: 256\n"
         "seed: 24301\n"},
        {"leopoldt",
         "# d(p) of the unit 1+sqrt2 of Q(sqrt 2) across split primes\n"
         "kind: nori_scan\n"
         "label: sqrt2-units\n"
         "poly: -2, 0, 1\n"
         "gen: 1, 1\n"
         "primes: 2..100\n"
         "padic_n: 32\n"},
        {"torus_scan",
         "# d(p) of a rank-2 subgroup of the split 2-torus\n"
         "kind: nori_scan\n"
         "label: two-three-scan\n"
         "dim: 2\n"
         "gen: 2, 3\n"
         "gen: 3, 5\n"
         "primes: 7..60\n"
         "padic_n: 32\n"},
        {"elliptic",
         "# d(p) for the generator of a rank-one curve of conductor 37\n"
         "kind: elliptic_scan\n"
         "label: conductor-37\n"
         "curve: 0, 0, 1, -1, 0\n"
         "gen: (0, 0)\n"
         "primes: 2..20\n"
         "padic_n: 24\n"},
        {"mazur",
         "# skew triple on a rank-three curve: the three log vectors stay\n"
         "# Z_p-dependent while no Z-relation exists\n"
         "kind: mazur_check\n"
         "label: rank-three-triple\n"
         "curve: 0, 0, 1, -7, 6\n"
         "point: (-2, 3)\n"
         "point: (-1, 3)\n"
         "point: (0, 2)\n"
         "prime: 7\n"
         "padic_n: 16\n"
         "bound: 20\n"},
    };
    return demos;
}

} // namespace

std::vector<std::string> demo_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : demo_table()) names.push_back(name);
    return names;
}

const std::string& demo_config(const std::string& name) {
    auto it = demo_table().find(name);
    if (it == demo_table().end()) {
        std::string names;
        for (const std::string& n : demo_names()) names += (names.empty() ? "" : ", ") + n;
        throw ConfigError("unknown demo `" + name + "`; available: " + names);
    }
    return it->second;
}

} // namespace fgc::cli
