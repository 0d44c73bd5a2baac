#include "fgc/diophantine.hpp"

#include "fgc/errors.hpp"

namespace fgc::real {

using exact::NfElement;

namespace {

constexpr long kPrecCap = 1L << 14;

// integer part of an embedded element, refined until unambiguous
Int certified_floor(const RealEmbedding& emb, const NfElement& x, long prec0) {
    for (long p = prec0; p <= kPrecCap; p *= 2) {
        Ball b = embed_element(emb, x, p);
        Int lo = floor_rat(b.lower().to_rat());
        Int hi = floor_rat(b.upper().to_rat());
        if (lo == hi) return lo;
    }
    throw PrecisionExhausted("integer part straddles an integer", kPrecCap);
}

// |b| for a ball known to avoid zero, refining the input is the caller's job
Ball ball_abs(const Ball& b) {
    auto s = b.certain_sign();
    if (!s) throw PrecisionExhausted("cannot separate approximation error from zero", 0);
    return *s < 0 ? -b : b;
}

struct CfState {
    Int h1 = 1, h2 = 0; // numerator recurrence
    Int k1 = 0, k2 = 1; // denominator recurrence
    void push(const Int& a, Int& p, Int& q) {
        p = a * h1 + h2;
        q = a * k1 + k2;
        h2 = h1;
        h1 = p;
        k2 = k1;
        k1 = q;
    }
};

} // namespace

KroneckerReport kronecker_verdict(const Rat&) { return {false, true}; }

KroneckerReport kronecker_verdict(const NfElement& theta) {
    bool rational = theta.is_rational();
    return {!rational, rational};
}

std::vector<Ball> orbit_sample(const Rat& theta, int count, long prec) {
    std::vector<Ball> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rat v = theta * i;
        Rat frac = v - floor_rat(v);
        out.push_back(Ball::from_rat(frac, prec));
    }
    return out;
}

std::vector<Ball> orbit_sample(const RealEmbedding& emb, const NfElement& theta, int count,
                               long prec) {
    if (theta.is_rational()) return orbit_sample(theta.coords()[0], count, prec);
    long need = prec + bit_length(Int(count) + 1) + 16;
    for (long p = need; p <= kPrecCap; p *= 2) {
        Ball x = embed_element(emb, theta, p);
        std::vector<Ball> out;
        out.reserve(count);
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            Ball b = x.mul_int(Int(i));
            Int fl = floor_rat(b.lower().to_rat());
            if (b.upper().to_rat() >= Rat(Int(fl + 1))) {
                ok = false; // enclosure straddles an integer, retry sharper
                break;
            }
            out.push_back(b - Ball::exact_int(fl));
        }
        if (ok) return out;
    }
    throw PrecisionExhausted("orbit point too close to an integer", kPrecCap);
}

DirichletResult dirichlet_convergents(const Rat& theta, int count) {
    DirichletResult res;
    res.certified = true;
    CfState st;
    Rat x = theta;
    for (int k = 0; k < count; ++k) {
        Int a = floor_rat(x);
        Int p, q;
        st.push(a, p, q);
        Rat err = rat_abs(theta - Rat(p) / Rat(q));
        res.convergents.push_back({p, q, Ball::from_rat(err, 160)});
        if (Rat(err * q * q) >= 1) res.certified = false;
        Rat r = x - a;
        if (r == 0) {
            res.terminated = true;
            break;
        }
        x = Rat(1) / r;
    }
    return res;
}

DirichletResult dirichlet_convergents(const RealEmbedding& emb, const NfElement& theta,
                                      int count) {
    if (theta.is_rational()) return dirichlet_convergents(theta.coords()[0], count);
    DirichletResult res;
    res.certified = true;
    CfState st;
    NfElement x = theta;
    NfElement one = NfElement::from_rat(x.field(), Rat(1));
    for (int k = 0; k < count; ++k) {
        Int a = certified_floor(emb, x, 64);
        Int p, q;
        st.push(a, p, q);
        Rat target = Rat(p) / Rat(q);
        Ball err;
        for (long pr = 4 * bit_length(q) + 96;; pr *= 2) {
            if (pr > kPrecCap) throw PrecisionExhausted("convergent error bound stalled", kPrecCap);
            Ball diff = embed_element(emb, theta, pr) - Ball::from_rat(target, pr);
            if (diff.certain_sign()) {
                err = ball_abs(diff);
                break;
            }
        }
        res.convergents.push_back({p, q, err});
        if (Rat(err.upper().to_rat() * q * q) >= 1) res.certified = false;
        x = (x - NfElement::from_rat(x.field(), Rat(a))).inverse();
    }
    return res;
}

} // namespace fgc::real
