#include "fgc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fgc/factor.hpp"
#include "fgc/intmat.hpp"

namespace fgc::exact {

RatPoly RatPoly::from_int(const std::vector<Int>& coeffs) {
    std::vector<Rat> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Rat(coeffs[i]);
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v = -v;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (deg() <= 0) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& div) const {
    if (div.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem = c_;
    int dd = div.deg();
    if (deg() < dd) return {RatPoly(), *this};
    std::vector<Rat> quo(deg() - dd + 1, Rat(0));
    Rat lead_inv = 1 / div.lead();
    for (int i = deg(); i >= dd; --i) {
        Rat f = rem[i] * lead_inv;
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * div.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        Rat v = c_[i];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Rat a = rat_abs(v);
        if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {

int degree_of(const std::vector<Int>& f) {
    int d = int(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

} // namespace

Int resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
    int df = degree_of(f), dg = degree_of(g);
    if (df < 0 || dg < 0) return 0;
    if (df == 0) return pow_int(f[0], dg);
    if (dg == 0) return pow_int(g[0], df);
    IntMat s(df + dg, df + dg);
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s.at(i, i + j) = f[df - j];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s.at(dg + i, i + j) = g[dg - j];
    return det(s);
}

Rat discriminant(const std::vector<Int>& f) {
    int n = degree_of(f);
    if (n < 1) throw Error("discriminant needs degree >= 1");
    std::vector<Int> fp(n);
    for (int i = 1; i <= n; ++i) fp[i - 1] = f[i] * i;
    Int r = resultant(f, fp);
    Rat d = Rat(r) / Rat(f[n]);
    if ((Int(n) * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

namespace {

// ---- arithmetic mod p on dense integer coefficient vectors ----

std::vector<Int> mod_reduce(const std::vector<Int>& f, const Int& p) {
    std::vector<Int> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % p;
        if (r[i] < 0) r[i] += p;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> mod_mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> mod_rem(std::vector<Int> a, const std::vector<Int>& m, const Int& p) {
    int dm = int(m.size()) - 1;
    Int lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), m.back().get_mpz_t(), p.get_mpz_t());
    while (int(a.size()) - 1 >= dm) {
        Int f = (a.back() * lead_inv) % p;
        int shift = int(a.size()) - 1 - dm;
        if (f != 0)
            for (int j = 0; j <= dm; ++j) {
                a[shift + j] = (a[shift + j] - f * m[j]) % p;
                if (a[shift + j] < 0) a[shift + j] += p;
            }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<Int> mod_gcd(std::vector<Int> a, std::vector<Int> b, const Int& p) {
    while (!b.empty()) {
        std::vector<Int> r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
        for (auto& v : a) v = (v * inv) % p;
    }
    return a;
}

// x^(p^k) mod m, by iterating frobenius powers of the previous result
std::vector<Int> frobenius_step(const std::vector<Int>& prev, const std::vector<Int>& m,
                                const Int& p) {
    // prev^p mod m by square-and-multiply over the bits of p
    std::vector<Int> result{Int(1)};
    std::vector<Int> base = prev;
    Int e = p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mod_rem(mod_mul(result, base, p), m, p);
        e >>= 1;
        if (e > 0) base = mod_rem(mod_mul(base, base, p), m, p);
    }
    return result;
}

} // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const std::vector<Int>& f, unsigned long p) {
    Int pp(p);
    std::vector<Int> g = mod_reduce(f, pp);
    int n = int(g.size()) - 1;
    if (n != degree_of(f)) return std::nullopt; // leading coefficient vanished
    std::vector<Int> gp(n);
    for (int i = 1; i <= n; ++i) gp[i - 1] = (g[i] * i) % pp;
    while (!gp.empty() && gp.back() == 0) gp.pop_back();
    std::vector<Int> sq = mod_gcd(g, gp, pp);
    if (int(sq.size()) - 1 > 0) return std::nullopt; // not squarefree mod p

    std::vector<int> degrees;
    std::vector<Int> xq{Int(0), Int(1)}; // x
    std::vector<Int> current = g;
    int d = 0;
    while (int(current.size()) - 1 > 0) {
        ++d;
        if (2 * d > int(current.size()) - 1) {
            degrees.push_back(int(current.size()) - 1);
            break;
        }
        xq = frobenius_step(xq, current, pp);
        std::vector<Int> diff = xq;
        if (diff.size() < 2) diff.resize(2, Int(0));
        diff[1] = (diff[1] - 1) % pp;
        if (diff[1] < 0) diff[1] += pp;
        while (!diff.empty() && diff.back() == 0) diff.pop_back();
        std::vector<Int> h = mod_gcd(current, diff, pp);
        int dh = int(h.size()) - 1;
        if (dh > 0) {
            for (int i = 0; i < dh / d; ++i) degrees.push_back(d);
            // divide current by h
            std::vector<Int> quo;
            {
                std::vector<Int> rem = current;
                int dm = dh;
                Int lead_inv;
                mpz_invert(lead_inv.get_mpz_t(), h.back().get_mpz_t(), pp.get_mpz_t());
                quo.assign(int(current.size()) - dh, Int(0));
                while (int(rem.size()) - 1 >= dm) {
                    Int fq = (rem.back() * lead_inv) % pp;
                    int shift = int(rem.size()) - 1 - dm;
                    quo[shift] = fq;
                    for (int j = 0; j <= dm; ++j) {
                        rem[shift + j] = (rem[shift + j] - fq * h[j]) % pp;
                        if (rem[shift + j] < 0) rem[shift + j] += pp;
                    }
                    rem.pop_back();
                    while (!rem.empty() && rem.back() == 0) rem.pop_back();
                }
            }
            while (!quo.empty() && quo.back() == 0) quo.pop_back();
            current = quo;
            // recompute the frobenius tower base for the reduced modulus
            xq = mod_rem(xq, current.empty() ? std::vector<Int>{Int(1)} : current, pp);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::vector<Int> roots_mod_p(const std::vector<Int>& f, const Int& p) {
    std::vector<Int> g = mod_reduce(f, p);
    std::vector<Int> roots;
    for (Int x = 0; x < p; ++x) {
        Int acc = 0;
        for (int i = int(g.size()) - 1; i >= 0; --i) acc = (acc * x + g[i]) % p;
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

namespace {

std::vector<Int> all_divisors(const Int& n) {
    Factorization f = factor_int(abs(n));
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : f.factors) {
        size_t base = divs.size();
        Int pe = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pe *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

// monic integer polynomial of degree exactly k through the given points, if any
std::optional<std::vector<Int>> interpolate_monic(const std::vector<Int>& xs,
                                                  const std::vector<Int>& ys, int k) {
    std::vector<Rat> cs(k + 1, Rat(0));
    // Lagrange
    for (int i = 0; i <= k; ++i) {
        RatPoly li = RatPoly::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j <= k; ++j) {
            if (j == i) continue;
            li = li * RatPoly({Rat(-xs[j]), Rat(1)});
            denom *= Rat(xs[i] - xs[j]);
        }
        li = li.scaled(Rat(ys[i]) / denom);
        for (int t = 0; t <= li.deg(); ++t) cs[t] += li.coeff(t);
    }
    RatPoly p{std::vector<Rat>(cs)};
    if (p.deg() != k || p.lead() != 1) return std::nullopt;
    std::vector<Int> out(k + 1);
    for (int i = 0; i <= k; ++i) {
        Rat c = p.coeff(i);
        if (c.get_den() != 1) return std::nullopt;
        out[i] = c.get_num();
    }
    return out;
}

bool divides_exactly(const std::vector<Int>& g, const std::vector<Int>& f) {
    RatPoly fp = RatPoly::from_int(f), gp = RatPoly::from_int(g);
    auto [q, r] = fp.divrem(gp);
    (void)q;
    return r.is_zero();
}

// Kronecker-style complete search for a monic factor of degree exactly k
bool has_monic_factor_of_degree(const std::vector<Int>& f, int k) {
    RatPoly fp = RatPoly::from_int(f);
    std::vector<Int> xs, ys;
    for (Int x = 0; int(xs.size()) <= k; x = (x > 0 ? Int(-x) : Int(1 - x))) {
        Rat v = fp.eval(Rat(x));
        if (v == 0) continue; // rational roots are handled separately
        xs.push_back(x);
        ys.push_back(v.get_num());
    }
    std::vector<std::vector<Int>> div_choices(k + 1);
    double combos = 1;
    for (int i = 0; i <= k; ++i) {
        std::vector<Int> ds = all_divisors(ys[i]);
        size_t base = ds.size();
        for (size_t j = 0; j < base; ++j) ds.push_back(-ds[j]);
        div_choices[i] = std::move(ds);
        combos *= double(div_choices[i].size());
        if (combos > 4e6) throw UnsupportedInput("irreducibility search budget exceeded");
    }
    std::vector<size_t> idx(k + 1, 0);
    std::vector<Int> vals(k + 1);
    while (true) {
        for (int i = 0; i <= k; ++i) vals[i] = div_choices[i][idx[i]];
        auto g = interpolate_monic(xs, vals, k);
        if (g && divides_exactly(*g, f)) return true;
        int pos = 0;
        while (pos <= k) {
            if (++idx[pos] < div_choices[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos > k) break;
    }
    return false;
}

bool has_rational_root(const std::vector<Int>& f) {
    // monic integer: rational roots are integer divisors of the constant term
    if (f[0] == 0) return true;
    RatPoly fp = RatPoly::from_int(f);
    for (const Int& d : all_divisors(f[0])) {
        if (fp.eval(Rat(d)) == 0) return true;
        if (fp.eval(Rat(-d)) == 0) return true;
    }
    return false;
}

} // namespace

bool irreducible_monic(const std::vector<Int>& f) {
    int n = degree_of(f);
    if (n <= 0) return false;
    if (f[n] != 1) throw UnsupportedInput("irreducibility test expects a monic polynomial");
    if (n == 1) return true;

    RatPoly fp = RatPoly::from_int(f);
    if (poly_gcd(fp, fp.derivative()).deg() > 0) return false;
    if (has_rational_root(f)) return false;
    if (n <= 3) return true;

    // candidate proper factor degrees, narrowed by factor patterns mod p;
    // degree 1 (and its complement) is already excluded by the root test
    std::vector<bool> possible(n, true);
    possible[0] = false;
    possible[1] = false;
    possible[n - 1] = false;

    int checked = 0;
    for (unsigned long p : primes_below(200)) {
        auto degs = factor_degrees_mod_p(f, p);
        if (!degs) continue;
        if (int(degs->size()) == 1) return true; // irreducible mod p
        // subset sums of the factor degree multiset are the only viable splits
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (int d : *degs)
            for (int s = n; s >= d; --s)
                if (sums[s - d]) sums[s] = true;
        for (int d = 1; d < n; ++d)
            if (!sums[d]) possible[d] = false;
        bool split_possible = false;
        for (int d = 1; d < n; ++d)
            if (possible[d] && possible[n - d]) split_possible = true;
        if (!split_possible) return true;
        if (++checked >= 12) break;
    }

    if (n > 6) throw UnsupportedInput("irreducibility not certified for degree > 6");

    // complete finite search over the remaining candidate degrees
    for (int d = 2; d <= n / 2; ++d)
        if (possible[d] && possible[n - d] && has_monic_factor_of_degree(f, d)) return false;
    // degree-1 factors were excluded by the rational root test
    return true;
}

std::optional<std::vector<Int>> as_monic_int(const RatPoly& p) {
    if (p.deg() < 1 || p.lead() != 1) return std::nullopt;
    std::vector<Int> out(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) {
        Rat c = p.coeff(i);
        if (c.get_den() != 1) return std::nullopt;
        out[i] = c.get_num();
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    std::optional<Int> number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return Int(s.substr(start, pos - start));
    }

    bool word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            size_t end = pos + w.size();
            if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
                return false;
            pos = end;
            return true;
        }
        return false;
    }

    // term := coeff [* var [^ exp]] | var [^ exp]
    RatPoly term() {
        Rat coeff(1);
        bool saw_coeff = false;
        if (auto n = number()) {
            coeff = Rat(*n);
            saw_coeff = true;
            if (eat('/')) {
                auto d = number();
                if (!d || *d == 0) throw ConfigError("bad rational in polynomial");
                coeff /= Rat(*d);
            }
        }
        bool saw_var = false;
        unsigned long exp = 0;
        skip_ws();
        if (saw_coeff && eat('*')) {
            if (!word(var)) throw ConfigError("expected variable after '*'");
            saw_var = true;
        } else if (!saw_coeff && word(var)) {
            saw_var = true;
        }
        if (saw_var) {
            exp = 1;
            if (eat('^')) {
                auto e = number();
                if (!e || *e < 0 || *e > 64) throw ConfigError("bad exponent in polynomial");
                exp = e->get_ui();
            }
        }
        if (!saw_coeff && !saw_var) throw ConfigError("expected term in polynomial");
        std::vector<Rat> c(exp + 1, Rat(0));
        c[exp] = coeff;
        return RatPoly(std::move(c));
    }

    RatPoly parse() {
        RatPoly acc;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                if (first) throw ConfigError("polynomial cannot start with '+'");
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw ConfigError("expected '+' or '-' between terms");
            }
            RatPoly t = term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
        }
        if (first) throw ConfigError("empty polynomial");
        return acc;
    }
};

} // namespace

RatPoly parse_poly(const std::string& text, const std::string& var) {
    Parser p{text, var};
    RatPoly out = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) throw ConfigError("trailing characters in polynomial: " + text);
    return out;
}

} // namespace fgc::exact
