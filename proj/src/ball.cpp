#include "fgc/ball.hpp"

#include <climits>
#include <map>
#include <mutex>
#include <sstream>

namespace fgc::real {

void Dyadic::normalize() {
    if (m == 0) {
        e = 0;
        return;
    }
    unsigned long z = mpz_scan1(m.get_mpz_t(), 0);
    if (z > 0) {
        m >>= z;
        e += long(z);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (m == 0) return o;
    if (o.m == 0) return *this;
    long ee = std::min(e, o.e);
    Int a = m << (e - ee);
    Int b = o.m << (o.e - ee);
    return make(a + b, ee);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Dyadic d = a - b;
    return d.sign();
}

Rat Dyadic::to_rat() const {
    Rat x(m);
    if (e >= 0) {
        mpq_mul_2exp(x.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(x.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return x;
}

namespace {

Rat shift_rat(Rat v, long sh) {
    if (sh >= 0)
        mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(sh));
    else
        mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(-sh));
    return v;
}

} // namespace

Dyadic Dyadic::round_rat(const Rat& x, long frac_bits) {
    Rat y = shift_rat(x, frac_bits);
    return Dyadic(fgc::round_rat(y), -frac_bits);
}

Dyadic Dyadic::ceil_rat(const Rat& x, long frac_bits) {
    Rat y = shift_rat(x, frac_bits);
    Int n;
    mpz_cdiv_q(n.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    return Dyadic(n, -frac_bits);
}

std::string Dyadic::to_string() const {
    std::ostringstream os;
    os << m.get_str() << "*2^" << e;
    return os.str();
}

Ball Ball::from_rat(const Rat& x, long prec) {
    if (x.get_den() == 1) {
        // integers are dyadic; no rounding at any precision
        return Ball(Dyadic(x.get_num()));
    }
    Dyadic c = Dyadic::round_rat(x, prec + 1);
    Rat err = abs(x - c.to_rat());
    if (err == 0) return Ball(c);
    return Ball(c, Dyadic::ceil_rat(err, prec + 8));
}

Ball Ball::operator*(const Ball& o) const {
    // |xy - c1c2| <= |c1| r2 + |c2| r1 + r1 r2
    Dyadic cc = c * o.c;
    Dyadic rr = c.abs() * o.r + o.c.abs() * r + r * o.r;
    return Ball(cc, rr);
}

std::optional<int> Ball::certain_sign() const {
    if (lower().sign() > 0) return 1;
    if (upper().sign() < 0) return -1;
    if (c.is_zero() && r.is_zero()) return 0;
    return std::nullopt;
}

Ball Ball::compress(long prec) const {
    Dyadic nc = Dyadic::round_rat(c.to_rat(), prec);
    Rat slack = abs(c.to_rat() - nc.to_rat()) + r.to_rat();
    if (slack == 0) return Ball(nc);
    // keep the radius mantissa short: round up to 16 significant bits
    Dyadic nr = Dyadic::ceil_rat(slack, 16 - Dyadic::ceil_rat(slack, prec + 64).mag2());
    return Ball(nc, nr);
}

std::string Ball::decimal(int digits) const {
    Rat scaled = c.to_rat();
    Int pow10 = pow_int(Int(10), digits);
    scaled *= Rat(pow10);
    Int n = fgc::round_rat(scaled);
    bool neg = n < 0;
    std::string ds = Int(::abs(n)).get_str();
    if (int(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = neg ? "-" : "";
    out += ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return out;
}

long Ball::radius_log2() const {
    if (r.is_zero()) return LONG_MIN;
    return r.mag2();
}

std::string Ball::to_string() const {
    std::ostringstream os;
    os << decimal(30);
    if (!r.is_zero()) os << " +- 2^" << radius_log2();
    else os << " (exact)";
    return os.str();
}

namespace {

// sum of atanh series 2*(u + u^3/3 + ...) in fixed point at scale 2^W from an
// exact rational u with |u| <= 1/3 + eps; returns (value, error in ulps)
std::pair<Int, long> atanh_fixed(const Rat& u, long W) {
    Dyadic ud = Dyadic::round_rat(u, W);
    Int U = ud.m;
    if (ud.e + W < 0) throw Error("atanh scaling underflow");
    U <<= static_cast<unsigned long>(ud.e + W); // scaled integer: U ~ u * 2^W
    // truncate toward zero so |term| strictly decreases even for negative u
    Int U2, term = U, acc = 0, next;
    mpz_tdiv_q_2exp(U2.get_mpz_t(), Int(U * U).get_mpz_t(), static_cast<unsigned long>(W));
    long terms = 0;
    for (long j = 0; term != 0; ++j) {
        acc += term / Int(2 * j + 1);
        mpz_tdiv_q_2exp(next.get_mpz_t(), Int(term * U2).get_mpz_t(),
                        static_cast<unsigned long>(W));
        term = next;
        ++terms;
    }
    acc <<= 1; // 2 * atanh
    // error: u rounding (derivative 2/(1-u^2) <= 2.3 at |u|<=0.34) ~ 2 ulps,
    // 2 ulps floor loss per term (doubled), truncated tail < 2 ulps
    long err = 4 * terms + 8;
    return {acc, err};
}

} // namespace

Ball ln2_ball(long prec) {
    static std::map<long, Ball> cache;
    static std::mutex mu;
    long W = ((prec + 63) / 64 + 1) * 64; // bucketed working precision
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(W);
        if (it != cache.end()) return it->second;
    }
    auto [acc, err] = atanh_fixed(Rat(1, 3), W);
    Ball b(Dyadic(acc, -W), Dyadic(Int(err), -W));
    std::lock_guard<std::mutex> g(mu);
    cache.emplace(W, b);
    return b;
}

Ball ln_rat(const Rat& x, long prec) {
    if (x <= 0) throw UnsupportedInput("log of a nonpositive value");
    if (x == 1) return Ball(Dyadic(Int(0)));
    // normalize x = s * 2^k with s^2 in [1/2, 2)
    long k = long(bit_length(x.get_num())) - long(bit_length(x.get_den()));
    Rat s = shift_rat(x, -k);
    while (s * s >= 2) { s = shift_rat(s, -1); ++k; }
    while (s * s < Rat(1, 2)) { s = shift_rat(s, 1); --k; }

    long kbits = k == 0 ? 0 : long(bit_length(Int(std::abs(k))));
    long W = prec + 32 + kbits;
    Ball acc;
    if (s != 1) {
        Rat u = (s - 1) / (s + 1); // |u| <= (sqrt2-1)/(sqrt2+1) < 0.172
        auto [v, err] = atanh_fixed(u, W);
        acc = Ball(Dyadic(v, -W), Dyadic(Int(err), -W));
    } else {
        acc = Ball(Dyadic(Int(0)));
    }
    if (k != 0) acc = acc + ln2_ball(W).mul_int(Int(k));
    return acc.compress(prec + 8);
}

Ball ln_ball(const Ball& x, long prec) {
    if (x.is_exact()) return ln_rat(x.c.to_rat(), prec);
    Dyadic lo = x.lower();
    if (lo.sign() <= 0) throw UnsupportedInput("log over an enclosure touching zero");
    Ball base = ln_rat(x.c.to_rat(), prec + 2);
    // mean value: |ln t - ln c| <= r / (c - r) on the enclosure
    Rat mv = x.r.to_rat() / lo.to_rat();
    Ball out(base.c, base.r + Dyadic::ceil_rat(mv, prec + 8));
    return out.compress(prec + 4);
}

Ball det_ball(const std::vector<std::vector<Ball>>& m) {
    size_t n = m.size();
    if (n == 0) return Ball::exact_int(1);
    for (auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    Ball acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Ball>> sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(m[i][k]);
        Ball term = m[0][j] * det_ball(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace fgc::real
