#include "fgc/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

#include "fgc/errors.hpp"
#include "fgc/factor.hpp"

namespace fgc::cli {

namespace {

const std::map<std::string, ScenarioKind>& kind_table() {
    static const std::map<std::string, ScenarioKind> t{
        {"kronecker", ScenarioKind::kronecker},
        {"dirichlet", ScenarioKind::dirichlet},
        {"six_exp", ScenarioKind::six_exp},
        {"four_exp_matrix", ScenarioKind::four_exp_matrix},
        {"torus_closure", ScenarioKind::torus_closure},
        {"nori_scan", ScenarioKind::nori_scan},
        {"elliptic_scan", ScenarioKind::elliptic_scan},
        {"structural_rank", ScenarioKind::structural_rank},
        {"mazur_check", ScenarioKind::mazur_check},
    };
    return t;
}

struct RawEntry {
    int line = 0;
    int kcol = 0, vcol = 0;
    std::string key, value;
};

void add_issue(std::vector<ParseIssue>& out, int line, int col, std::string field,
               std::string msg) {
    out.push_back(ParseIssue{line, col, std::move(field), std::move(msg)});
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_' ||
              std::isdigit(static_cast<unsigned char>(c))))
            return false;
    return true;
}

std::vector<RawEntry> lex(const std::string& text, std::vector<ParseIssue>& issues) {
    std::vector<RawEntry> entries;
    int line = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) continue;
        size_t colon = raw.find(':');
        if (colon == std::string::npos) {
            add_issue(issues, line, int(raw.find_first_not_of(" \t")) + 1, "",
                      "expected `key: value`");
            continue;
        }
        RawEntry e;
        e.line = line;
        e.kcol = int(raw.find_first_not_of(" \t")) + 1;
        e.key = trim(raw.substr(0, colon));
        size_t vstart = raw.find_first_not_of(" \t", colon + 1);
        e.vcol = vstart == std::string::npos ? int(colon) + 2 : int(vstart) + 1;
        e.value = vstart == std::string::npos ? "" : trim(raw.substr(vstart));
        if (!valid_key(e.key)) {
            add_issue(issues, line, e.kcol, "", "malformed key `" + e.key + "`");
            continue;
        }
        if (e.value.empty()) {
            add_issue(issues, line, e.vcol, e.key, "empty value");
            continue;
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Int> parse_int_str(const std::string& s) {
    std::string t = s;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t = t.substr(1);
    if (!all_digits(t)) return std::nullopt;
    return Int(s);
}

std::optional<Rat> parse_rat_str(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        auto n = parse_int_str(trim(s));
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto num = parse_int_str(trim(s.substr(0, slash)));
    auto den = parse_int_str(trim(s.substr(slash + 1)));
    if (!num || !den || *den == 0) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

// comma split at parenthesis depth zero
std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

struct FieldReader {
    const std::vector<RawEntry>& entries;
    std::vector<ParseIssue>& issues;

    const RawEntry* one(const std::string& key) const {
        const RawEntry* found = nullptr;
        for (const auto& e : entries)
            if (e.key == key && !found) found = &e;
        return found;
    }

    std::vector<const RawEntry*> all(const std::string& key) const {
        std::vector<const RawEntry*> out;
        for (const auto& e : entries)
            if (e.key == key) out.push_back(&e);
        return out;
    }

    std::optional<long> long_in(const RawEntry& e, long lo, long hi) {
        auto v = parse_int_str(e.value);
        if (!v || !mpz_fits_slong_p(v->get_mpz_t())) {
            add_issue(issues, e.line, e.vcol, e.key, "expected an integer");
            return std::nullopt;
        }
        long x = v->get_si();
        if (x < lo || x > hi) {
            add_issue(issues, e.line, e.vcol, e.key,
                      "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
            return std::nullopt;
        }
        return x;
    }

    std::optional<Rat> rat(const RawEntry& e) {
        auto v = parse_rat_str(e.value);
        if (!v) add_issue(issues, e.line, e.vcol, e.key, "expected a rational like -3/4");
        return v;
    }

    std::optional<std::vector<Rat>> rat_list(const RawEntry& e) {
        std::vector<Rat> out;
        for (const std::string& part : split_top(e.value)) {
            auto v = parse_rat_str(part);
            if (!v) {
                add_issue(issues, e.line, e.vcol, e.key,
                          "expected comma-separated rationals, got `" + part + "`");
                return std::nullopt;
            }
            out.push_back(*v);
        }
        return out;
    }

    std::optional<std::vector<Int>> int_list(const RawEntry& e) {
        std::vector<Int> out;
        for (const std::string& part : split_top(e.value)) {
            auto v = parse_int_str(part);
            if (!v) {
                add_issue(issues, e.line, e.vcol, e.key,
                          "expected comma-separated integers, got `" + part + "`");
                return std::nullopt;
            }
            out.push_back(*v);
        }
        return out;
    }

    std::optional<ECPoint> point(const RawEntry& e, const std::string& text) {
        if (text == "O") return ECPoint{};
        if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
            add_issue(issues, e.line, e.vcol, e.key, "expected a point `(x, y)` or `O`");
            return std::nullopt;
        }
        auto coords = split_top(text.substr(1, text.size() - 2));
        if (coords.size() != 2) {
            add_issue(issues, e.line, e.vcol, e.key, "a point needs exactly two coordinates");
            return std::nullopt;
        }
        auto x = parse_rat_str(coords[0]);
        auto y = parse_rat_str(coords[1]);
        if (!x || !y) {
            add_issue(issues, e.line, e.vcol, e.key, "point coordinates must be rationals");
            return std::nullopt;
        }
        ECPoint p;
        p.infinity = false;
        p.x = *x;
        p.y = *y;
        return p;
    }

    std::optional<std::vector<ECPoint>> point_list(const RawEntry& e) {
        std::vector<ECPoint> out;
        for (const std::string& part : split_top(e.value)) {
            auto p = point(e, part);
            if (!p) return std::nullopt;
            out.push_back(*p);
        }
        return out;
    }
};

void read_primes(FieldReader& r, const RawEntry& e, PrimeSelection& out,
                 std::vector<ParseIssue>& issues) {
    size_t dots = e.value.find("..");
    if (dots != std::string::npos) {
        auto lo = parse_int_str(trim(e.value.substr(0, dots)));
        auto hi = parse_int_str(trim(e.value.substr(dots + 2)));
        if (!lo || !hi) {
            add_issue(issues, e.line, e.vcol, e.key, "expected a range like 2..100");
            return;
        }
        if (*lo < 2 || *hi < *lo) {
            add_issue(issues, e.line, e.vcol, e.key, "range must satisfy 2 <= lo <= hi");
            return;
        }
        out.lo = *lo;
        out.hi = *hi;
        return;
    }
    auto list = r.int_list(e);
    if (!list) return;
    for (const Int& p : *list)
        if (p < 2 || !exact::is_prime(p)) {
            add_issue(issues, e.line, e.vcol, e.key, p.get_str() + " is not prime");
            return;
        }
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
    out.list = std::move(*list);
}

// rectangular, nonzero-entry matrix from repeated `row:` lines
std::optional<std::vector<std::vector<Rat>>> read_matrix(FieldReader& r,
                                                         const std::vector<const RawEntry*>& rows,
                                                         std::vector<ParseIssue>& issues) {
    std::vector<std::vector<Rat>> m;
    bool ok = true;
    for (const RawEntry* e : rows) {
        auto v = r.rat_list(*e);
        if (!v) {
            ok = false;
            continue;
        }
        if (!m.empty() && v->size() != m[0].size()) {
            add_issue(issues, e->line, e->vcol, "row", "rows must have equal length");
            ok = false;
            continue;
        }
        for (const Rat& x : *v)
            if (x == 0) {
                add_issue(issues, e->line, e->vcol, "row", "entries must be nonzero");
                ok = false;
            }
        m.push_back(std::move(*v));
    }
    if (!ok) return std::nullopt;
    return m;
}

ParseOutcome build(const std::vector<RawEntry>& entries, std::vector<ParseIssue> issues) {
    ParseOutcome out;
    ScenarioConfig cfg;
    FieldReader r{entries, issues};

    int kinds = 0;
    const RawEntry* kind_e = nullptr;
    for (const auto& e : entries)
        if (e.key == "kind") {
            ++kinds;
            kind_e = &e;
        }
    if (kinds == 0) {
        add_issue(issues, 0, 0, "kind", "required key is missing");
        out.issues = std::move(issues);
        return out;
    }
    if (kinds > 1) add_issue(issues, kind_e->line, kind_e->kcol, "kind", "given more than once");
    auto kit = kind_table().find(kind_e->value);
    if (kit == kind_table().end()) {
        std::string names;
        for (const auto& [name, k] : kind_table()) names += (names.empty() ? "" : ", ") + name;
        add_issue(issues, kind_e->line, kind_e->vcol, "kind",
                  "unknown kind `" + kind_e->value + "`; expected one of: " + names);
        out.issues = std::move(issues);
        return out;
    }
    cfg.kind = kit->second;

    // schema: repeatable keys are marked true
    std::map<std::string, bool> allowed{
        {"kind", false}, {"label", false}, {"precision", false}, {"padic_n", false},
        {"seed", false},
    };
    switch (cfg.kind) {
        case ScenarioKind::kronecker:
            allowed.insert({{"theta", false}, {"poly", false}, {"element", false},
                            {"embedding", false}});
            break;
        case ScenarioKind::dirichlet:
            allowed.insert({{"theta", false}, {"poly", false}, {"element", false},
                            {"embedding", false}, {"count", false}});
            break;
        case ScenarioKind::six_exp:
        case ScenarioKind::four_exp_matrix:
        case ScenarioKind::structural_rank:
            allowed.insert({{"row", true}});
            break;
        case ScenarioKind::torus_closure:
            allowed.insert({{"dim", false}, {"gen", true}});
            break;
        case ScenarioKind::nori_scan:
            allowed.insert({{"dim", false}, {"poly", false}, {"gen", true}, {"primes", false}});
            break;
        case ScenarioKind::elliptic_scan:
            allowed.insert({{"curve", false}, {"copies", false}, {"gen", true},
                            {"primes", false}});
            break;
        case ScenarioKind::mazur_check:
            allowed.insert({{"curve", false}, {"point", true}, {"prime", false},
                            {"bound", false}});
            break;
    }
    std::map<std::string, int> seen;
    for (const auto& e : entries) {
        auto it = allowed.find(e.key);
        if (it == allowed.end()) {
            add_issue(issues, e.line, e.kcol, e.key,
                      "unknown key for kind `" + kind_e->value + "`");
            continue;
        }
        if (!it->second && ++seen[e.key] > 1)
            add_issue(issues, e.line, e.kcol, e.key, "given more than once");
    }

    if (const RawEntry* e = r.one("label")) cfg.label = e->value;
    if (const RawEntry* e = r.one("precision")) {
        if (auto v = r.long_in(*e, 8, 1L << 20)) cfg.precision = *v;
    }
    if (const RawEntry* e = r.one("padic_n")) {
        if (auto v = r.long_in(*e, 1, 1L << 16)) cfg.padic_n = *v;
    }
    if (const RawEntry* e = r.one("seed")) {
        auto v = parse_int_str(e->value);
        if (!v || *v < 0 || !mpz_fits_ulong_p(v->get_mpz_t()))
            add_issue(issues, e->line, e->vcol, "seed", "expected an unsigned 64-bit integer");
        else
            cfg.seed = v->get_ui();
    }

    auto read_theta = [&]() {
        const RawEntry* theta = r.one("theta");
        const RawEntry* poly = r.one("poly");
        const RawEntry* element = r.one("element");
        const RawEntry* embedding = r.one("embedding");
        if (theta && (poly || element || embedding)) {
            add_issue(issues, theta->line, theta->kcol, "theta",
                      "give either `theta` or the `poly`/`element` pair, not both");
            return;
        }
        if (theta) {
            if (auto v = r.rat(*theta)) cfg.theta.rational = *v;
            return;
        }
        if (!poly || !element) {
            add_issue(issues, 0, 0, "theta",
                      "needs `theta` for a rational or `poly` plus `element` for an "
                      "algebraic target");
            return;
        }
        if (auto v = r.int_list(*poly)) {
            if (v->size() < 2 || v->back() != 1)
                add_issue(issues, poly->line, poly->vcol, "poly",
                          "expected ascending coefficients of a monic polynomial");
            else
                cfg.theta.poly = std::move(*v);
        }
        if (auto v = r.rat_list(*element)) cfg.theta.element = std::move(*v);
        if (!cfg.theta.poly.empty() && cfg.theta.element.size() >= cfg.theta.poly.size())
            add_issue(issues, element->line, element->vcol, "element",
                      "more coordinates than the field degree");
        if (embedding) {
            if (auto v = r.long_in(*embedding, 0, 64)) cfg.theta.embedding = int(*v);
        }
    };

    auto require = [&](const char* key) -> const RawEntry* {
        const RawEntry* e = r.one(key);
        if (!e) add_issue(issues, 0, 0, key, "required key is missing");
        return e;
    };

    switch (cfg.kind) {
        case ScenarioKind::kronecker:
            read_theta();
            break;
        case ScenarioKind::dirichlet:
            read_theta();
            if (const RawEntry* e = r.one("count")) {
                if (auto v = r.long_in(*e, 1, 10000)) cfg.count = int(*v);
            }
            break;
        case ScenarioKind::six_exp:
        case ScenarioKind::four_exp_matrix:
        case ScenarioKind::structural_rank: {
            auto rows = r.all("row");
            if (rows.empty()) {
                add_issue(issues, 0, 0, "row", "required key is missing");
                break;
            }
            auto m = read_matrix(r, rows, issues);
            if (!m) break;
            if (cfg.kind == ScenarioKind::six_exp && (m->size() != 3 || (*m)[0].size() != 2))
                add_issue(issues, rows[0]->line, rows[0]->kcol, "row",
                          "this scenario takes exactly a 3 x 2 matrix");
            else if (cfg.kind == ScenarioKind::four_exp_matrix &&
                     (m->size() != 2 || (*m)[0].size() != 2))
                add_issue(issues, rows[0]->line, rows[0]->kcol, "row",
                          "this scenario takes exactly a 2 x 2 matrix");
            else
                cfg.matrix = std::move(*m);
            break;
        }
        case ScenarioKind::torus_closure: {
            const RawEntry* dim = require("dim");
            auto gens = r.all("gen");
            if (gens.empty()) add_issue(issues, 0, 0, "gen", "required key is missing");
            if (!dim || gens.empty()) break;
            auto d = r.long_in(*dim, 1, 64);
            if (!d) break;
            TorusSpec spec;
            spec.dim = int(*d);
            spec.label = cfg.label;
            bool ok = true;
            for (const RawEntry* g : gens) {
                auto v = r.rat_list(*g);
                if (!v) {
                    ok = false;
                    continue;
                }
                if (long(v->size()) != *d) {
                    add_issue(issues, g->line, g->vcol, "gen",
                              "expected " + std::to_string(*d) + " coordinates");
                    ok = false;
                    continue;
                }
                for (const Rat& x : *v)
                    if (x == 0) {
                        add_issue(issues, g->line, g->vcol, "gen", "coordinates must be nonzero");
                        ok = false;
                    }
                spec.gens.push_back(std::move(*v));
            }
            if (ok) cfg.torus = std::move(spec);
            break;
        }
        case ScenarioKind::nori_scan: {
            const RawEntry* dim = r.one("dim");
            const RawEntry* poly = r.one("poly");
            auto gens = r.all("gen");
            const RawEntry* primes = require("primes");
            if (primes) read_primes(r, *primes, cfg.primes, issues);
            if ((dim && poly) || (!dim && !poly)) {
                add_issue(issues, 0, 0, "dim",
                          "give `dim` for a split torus or `poly` for a number field");
                break;
            }
            if (gens.empty()) {
                add_issue(issues, 0, 0, "gen", "required key is missing");
                break;
            }
            if (dim) {
                auto d = r.long_in(*dim, 1, 64);
                if (!d) break;
                TorusSpec spec;
                spec.dim = int(*d);
                spec.label = cfg.label;
                bool ok = true;
                for (const RawEntry* g : gens) {
                    auto v = r.rat_list(*g);
                    if (!v) {
                        ok = false;
                        continue;
                    }
                    if (long(v->size()) != *d) {
                        add_issue(issues, g->line, g->vcol, "gen",
                                  "expected " + std::to_string(*d) + " coordinates");
                        ok = false;
                        continue;
                    }
                    for (const Rat& x : *v)
                        if (x == 0) {
                            add_issue(issues, g->line, g->vcol, "gen",
                                      "coordinates must be nonzero");
                            ok = false;
                        }
                    spec.gens.push_back(std::move(*v));
                }
                if (ok) cfg.torus = std::move(spec);
                break;
            }
            if (auto v = r.int_list(*poly)) {
                if (v->size() < 3 || v->back() != 1)
                    add_issue(issues, poly->line, poly->vcol, "poly",
                              "expected ascending coefficients of a monic polynomial of "
                              "degree at least 2");
                else
                    cfg.field_poly = std::move(*v);
            }
            if (cfg.field_poly.empty()) break;
            const size_t deg = cfg.field_poly.size() - 1;
            for (const RawEntry* g : gens) {
                auto v = r.rat_list(*g);
                if (!v) continue;
                if (v->size() > deg) {
                    add_issue(issues, g->line, g->vcol, "gen",
                              "more coordinates than the field degree");
                    continue;
                }
                v->resize(deg, Rat(0));
                bool zero = true;
                for (const Rat& x : *v)
                    if (x != 0) zero = false;
                if (zero) {
                    add_issue(issues, g->line, g->vcol, "gen", "generator must be nonzero");
                    continue;
                }
                cfg.field_gens.push_back(std::move(*v));
            }
            break;
        }
        case ScenarioKind::elliptic_scan:
        case ScenarioKind::mazur_check: {
            const RawEntry* curve = require("curve");
            EllipticSpec spec;
            spec.label = cfg.label;
            bool ok = true;
            if (curve) {
                auto v = r.int_list(*curve);
                if (!v || v->size() != 5) {
                    add_issue(issues, curve->line, curve->vcol, "curve",
                              "expected the five coefficients a1, a2, a3, a4, a6");
                    ok = false;
                } else {
                    spec.a = std::move(*v);
                }
            } else {
                ok = false;
            }
            if (cfg.kind == ScenarioKind::elliptic_scan) {
                spec.copies = 1;
                if (const RawEntry* e = r.one("copies")) {
                    if (auto v = r.long_in(*e, 1, 16)) spec.copies = int(*v);
                }
                auto gens = r.all("gen");
                if (gens.empty()) {
                    add_issue(issues, 0, 0, "gen", "required key is missing");
                    ok = false;
                }
                for (const RawEntry* g : gens) {
                    auto pts = r.point_list(*g);
                    if (!pts) {
                        ok = false;
                        continue;
                    }
                    if (int(pts->size()) != spec.copies) {
                        add_issue(issues, g->line, g->vcol, "gen",
                                  "expected " + std::to_string(spec.copies) +
                                      " points, one per copy of the curve");
                        ok = false;
                        continue;
                    }
                    spec.gens.push_back(std::move(*pts));
                }
                const RawEntry* primes = require("primes");
                if (primes) read_primes(r, *primes, cfg.primes, issues);
                if (ok && primes) cfg.elliptic = std::move(spec);
            } else {
                auto pts = r.all("point");
                if (pts.size() != 3) {
                    add_issue(issues, pts.empty() ? 0 : pts[0]->line, 0, "point",
                              "this scenario takes exactly three points");
                    ok = false;
                }
                spec.copies = 3;
                std::vector<ECPoint> triple;
                for (const RawEntry* pe : pts) {
                    auto p = r.point(*pe, pe->value);
                    if (!p) {
                        ok = false;
                        continue;
                    }
                    if (p->infinity) {
                        add_issue(issues, pe->line, pe->vcol, "point",
                                  "the three points must be affine");
                        ok = false;
                        continue;
                    }
                    triple.push_back(*p);
                }
                if (ok && triple.size() == 3) {
                    spec.gens = {triple};
                    cfg.elliptic = std::move(spec);
                }
                const RawEntry* prime = require("prime");
                if (prime) {
                    auto v = parse_int_str(prime->value);
                    if (!v || *v < 2 || !exact::is_prime(*v))
                        add_issue(issues, prime->line, prime->vcol, "prime",
                                  "expected a prime at least 2");
                    else
                        cfg.prime = *v;
                }
                if (const RawEntry* e = r.one("bound")) {
                    if (auto v = r.long_in(*e, 1, 1000)) cfg.search_bound = *v;
                }
            }
            break;
        }
    }

    out.issues = std::move(issues);
    if (out.issues.empty()) out.config = std::move(cfg);
    return out;
}

std::string json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// arrays render as the line format does: scalars joined by commas, nested
// arrays wrapped in parentheses (elliptic points)
std::string json_value(const nlohmann::json& v) {
    if (!v.is_array()) return json_scalar(v);
    std::string out;
    for (const auto& el : v) {
        if (!out.empty()) out += ", ";
        if (el.is_array())
            out += "(" + json_value(el) + ")";
        else
            out += json_scalar(el);
    }
    return out;
}

bool json_ok_leaf(const nlohmann::json& v) {
    if (v.is_string()) return true;
    if (v.is_number_integer() || v.is_number_unsigned()) return true;
    if (v.is_array()) {
        for (const auto& el : v)
            if (!json_ok_leaf(el)) return false;
        return true;
    }
    return false;
}

} // namespace

std::string to_string(ScenarioKind k) {
    for (const auto& [name, kk] : kind_table())
        if (kk == k) return name;
    return "unknown";
}

std::string to_string(const ParseIssue& issue) {
    std::string out;
    if (issue.line > 0) {
        out += "line " + std::to_string(issue.line);
        if (issue.col > 0) out += ", col " + std::to_string(issue.col);
        out += ": ";
    }
    if (!issue.field.empty()) out += issue.field + ": ";
    out += issue.message;
    return out;
}

ParseOutcome parse_config(const std::string& text) {
    std::vector<ParseIssue> issues;
    std::vector<RawEntry> entries = lex(text, issues);
    return build(entries, std::move(issues));
}

std::optional<PrimeSelection> parse_primes(const std::string& text, std::string& error) {
    std::vector<RawEntry> entries;
    std::vector<ParseIssue> issues;
    FieldReader r{entries, issues};
    RawEntry e{0, 0, 0, "primes", trim(text)};
    PrimeSelection sel;
    read_primes(r, e, sel, issues);
    if (!issues.empty()) {
        error = issues[0].message;
        return std::nullopt;
    }
    return sel;
}

ParseOutcome parse_config_json(const std::string& text) {
    std::vector<ParseIssue> issues;
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        add_issue(issues, 0, 0, "", "not valid JSON");
        return ParseOutcome{std::nullopt, std::move(issues)};
    }
    if (!doc.is_object()) {
        add_issue(issues, 0, 0, "", "the top level must be a JSON object");
        return ParseOutcome{std::nullopt, std::move(issues)};
    }
    static const std::map<std::string, bool> repeatable{{"gen", true}, {"row", true},
                                                        {"point", true}};
    std::vector<RawEntry> entries;
    for (const auto& [key, value] : doc.items()) {
        if (!json_ok_leaf(value)) {
            add_issue(issues, 0, 0, key,
                      "values must be strings, integers, or arrays of those; write "
                      "rationals as strings");
            continue;
        }
        auto rep = repeatable.find(key);
        if (rep != repeatable.end() && value.is_array()) {
            for (const auto& el : value) {
                std::string text = json_value(el);
                if (key == "point" && el.is_array()) text = "(" + text + ")";
                entries.push_back(RawEntry{0, 0, 0, key, std::move(text)});
            }
        } else {
            entries.push_back(RawEntry{0, 0, 0, key, json_value(value)});
        }
    }
    return build(entries, std::move(issues));
}

} // namespace fgc::cli
