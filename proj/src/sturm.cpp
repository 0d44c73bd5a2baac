#include "fgc/sturm.hpp"

#include <algorithm>

namespace fgc::real {

using exact::NfElement;
using exact::NumberField;
using exact::RatPoly;
using exact::poly_gcd;

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().deg() > 0) {
        auto [q, r] = chain[chain.size() - 2].divrem(chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = p.eval(x);
        int s = v == 0 ? 0 : (v < 0 ? -1 : 1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// roots in the open interval (a, b), both endpoints non-roots of f
int roots_between(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// a non-root sample point in (a, b)
Rat non_root_inside(const RatPoly& f, const Rat& a, const Rat& b) {
    Rat mid = (a + b) / 2;
    Rat step = (b - a) / 4;
    while (f.eval(mid) == 0) {
        mid += step; // at most deg(f) points vanish, steps shrink geometrically
        step /= 2;
    }
    return mid;
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const std::vector<Int>& f) {
    RatPoly p = RatPoly::from_int(f);
    if (p.deg() < 1) return {};
    RatPoly sf = p;
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.deg() > 0) sf = p.divrem(g).first; // squarefree part
    std::vector<RatPoly> chain = sturm_chain(sf);

    // Cauchy bound: all roots inside (-B, B)
    Rat bound(1);
    for (int i = 0; i < sf.deg(); ++i)
        bound = std::max(bound, rat_abs(sf.coeff(i) / sf.lead()));
    bound += 1;
    Rat lo = -bound, hi = bound;
    while (sf.eval(lo) == 0) lo -= 1;
    while (sf.eval(hi) == 0) hi += 1;

    std::vector<RootInterval> out;
    std::vector<RootInterval> work{{lo, hi}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int n = roots_between(chain, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat mid = non_root_inside(sf, iv.lo, iv.hi);
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root(const std::vector<Int>& f, RootInterval iv, const Rat& target) {
    RatPoly p = RatPoly::from_int(f);
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.deg() > 0) p = p.divrem(g).first;
    Rat flo = p.eval(iv.lo);
    if (flo == 0 || p.eval(iv.hi) == 0)
        throw Error("isolating interval endpoints must not be roots");
    int slo = flo < 0 ? -1 : 1;
    while (iv.hi - iv.lo > target) {
        Rat mid = (iv.lo + iv.hi) / 2;
        Rat fm = p.eval(mid);
        if (fm == 0) {
            // landed exactly on the (rational) root: center a tiny interval
            Rat eps = std::min(target, std::min(Rat(mid - iv.lo), Rat(iv.hi - mid))) / 2;
            return {mid - eps, mid + eps};
        }
        if ((fm < 0 ? -1 : 1) == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

Ball root_enclosure(const std::vector<Int>& f, const RootInterval& iv, long prec) {
    Rat one(1);
    Rat target = one / Rat(pow2(static_cast<unsigned long>(prec + 2)));
    RootInterval t = refine_root(f, iv, target);
    Rat mid = (t.lo + t.hi) / 2;
    Dyadic c = Dyadic::round_rat(mid, prec + 8);
    Rat err = abs(mid - c.to_rat()) + (t.hi - t.lo) / 2;
    return Ball(c, Dyadic::ceil_rat(err, prec + 8));
}

std::vector<RealEmbedding> real_embeddings(const NumberField& k) {
    std::vector<RealEmbedding> out;
    for (const auto& iv : isolate_real_roots(k.poly())) out.push_back({k.poly(), iv});
    return out;
}

namespace {

struct RatInterval {
    Rat lo, hi;

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    Rat width() const { return hi - lo; }
};

RatInterval eval_interval(const std::vector<Rat>& coeffs, const RatInterval& x) {
    RatInterval acc{Rat(0), Rat(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + RatInterval{*it, *it};
    return acc;
}

} // namespace

Ball embed_element(const RealEmbedding& e, const exact::NfElement& x, long prec) {
    Rat one(1);
    Rat gap = one / Rat(pow2(static_cast<unsigned long>(prec + 4)));
    RootInterval iv = e.iv;
    for (int pass = 0; pass < 128; ++pass) {
        RatInterval v = eval_interval(x.coords(), {iv.lo, iv.hi});
        if (v.width() <= gap) {
            Rat mid = (v.lo + v.hi) / 2;
            Dyadic c = Dyadic::round_rat(mid, prec + 8);
            Rat err = abs(mid - c.to_rat()) + v.width() / 2;
            return Ball(c, Dyadic::ceil_rat(err, prec + 8));
        }
        iv = refine_root(e.minpoly, iv, (iv.hi - iv.lo) / 16);
    }
    throw PrecisionExhausted("embedding did not converge", prec);
}

Ball log_abs_embed(const RealEmbedding& e, const exact::NfElement& x, long prec) {
    if (x.is_zero()) throw UnsupportedInput("log of zero element");
    // refine until the sign of the image is certain
    for (long extra = 0; extra < 4096; extra = extra ? extra * 2 : 32) {
        Ball v = embed_element(e, x, prec + extra);
        auto s = v.certain_sign();
        if (s.has_value() && *s != 0) {
            Ball a = *s > 0 ? v : -v;
            return ln_ball(a, prec);
        }
    }
    throw PrecisionExhausted("embedded image stays indistinguishable from zero", prec);
}

} // namespace fgc::real
