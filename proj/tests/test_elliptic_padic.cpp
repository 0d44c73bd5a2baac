#include <vector>

#include "doctest.h"
#include "fgc/elliptic_padic.hpp"
#include "fgc/errors.hpp"

using namespace fgc;
using namespace fgc::ec;
using fgc::padic::PadicInt;
using fgc::padic::agrees;

namespace {

EllipticCurve curve37() { return EllipticCurve({Int(0), Int(0), Int(1), Int(-1), Int(0)}); }
EllipticCurve curve5077() { return EllipticCurve({Int(0), Int(0), Int(1), Int(-7), Int(6)}); }

ECPoint pt(long x, long y) {
    ECPoint p;
    p.infinity = false;
    p.x = Rat(x);
    p.y = Rat(y);
    return p;
}

EllipticSpec spec37(std::vector<std::vector<ECPoint>> gens, int copies = 1) {
    EllipticSpec s;
    s.a = {Int(0), Int(0), Int(1), Int(-1), Int(0)};
    s.copies = copies;
    s.gens = std::move(gens);
    return s;
}

EllipticSpec spec5077(std::vector<std::vector<ECPoint>> gens, int copies) {
    EllipticSpec s;
    s.a = {Int(0), Int(0), Int(1), Int(-7), Int(6)};
    s.copies = copies;
    s.gens = std::move(gens);
    return s;
}

using Series = std::vector<Rat>;

Series smul(const Series& a, const Series& b) {
    Series r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) r[i + j] = Rat(r[i + j] + Rat(a[i] * b[j]));
    return r;
}

Series sinv(const Series& a) {
    Series r(a.size(), Rat(0));
    r[0] = Rat(1 / a[0]);
    for (size_t n = 1; n < a.size(); ++n) {
        Rat acc(0);
        for (size_t i = 1; i <= n; ++i) acc = Rat(acc + Rat(a[i] * r[n - i]));
        r[n] = Rat(Rat(-acc) / a[0]);
    }
    return r;
}

// independent expansion of w = t^3 sigma on the curve, for cross-checks
Series curve_sigma(const EllipticCurve& e, size_t len) {
    Rat a1(e.a1), a2(e.a2), a3(e.a3), a4(e.a4), a6(e.a6);
    Series s(len, Rat(0));
    s[0] = Rat(1);
    for (size_t pass = 0; pass < len; ++pass) {
        Series s2 = smul(s, s), s3 = smul(s2, s);
        Series next(len, Rat(0));
        next[0] = Rat(1);
        for (size_t j = 1; j < len; ++j) {
            Rat acc(Rat(a1 * s[j - 1]));
            if (j >= 2) acc = Rat(acc + Rat(a2 * s[j - 2]));
            if (j >= 3) acc = Rat(acc + Rat(a3 * s2[j - 3]));
            if (j >= 4) acc = Rat(acc + Rat(a4 * s2[j - 4]));
            if (j >= 6) acc = Rat(acc + Rat(a6 * s3[j - 6]));
            next[j] = acc;
        }
        s = std::move(next);
    }
    return s;
}

} // namespace

TEST_CASE("parametrized curve points satisfy the equation") {
    for (const EllipticCurve& e :
         {curve37(), curve5077(), EllipticCurve({Int(1), Int(-2), Int(3), Int(-4), Int(5)})}) {
        const size_t len = 14;
        Series u = sinv(curve_sigma(e, len));
        // with x = u/t^2, y = -u/t^3 the equation times t^6 reads
        // u^2 - a1 t u^2 - a3 t^3 u = u^3 + a2 t^2 u^2 + a4 t^4 u + a6 t^6
        Rat a1(e.a1), a2(e.a2), a3(e.a3), a4(e.a4), a6(e.a6);
        Series u2 = smul(u, u), u3 = smul(u2, u);
        for (size_t j = 0; j < len; ++j) {
            Rat lhs = u2[j];
            if (j >= 1) lhs = Rat(lhs - Rat(a1 * u2[j - 1]));
            if (j >= 3) lhs = Rat(lhs - Rat(a3 * u[j - 3]));
            Rat rhs = u3[j];
            if (j >= 2) rhs = Rat(rhs + Rat(a2 * u2[j - 2]));
            if (j >= 4) rhs = Rat(rhs + Rat(a4 * u[j - 4]));
            if (j == 6) rhs = Rat(rhs + a6);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("differential expansion against hand-derived coefficients") {
    // short Weierstrass y^2 = x^3 + a4 x + a6 starts 1 + 2 a4 t^4 + 3 a6 t^6
    EllipticCurve shortw({Int(0), Int(0), Int(0), Int(-1), Int(2)});
    Series f = formal_differential(shortw, 7);
    CHECK(f[0] == 1);
    CHECK(f[1] == 0);
    CHECK(f[2] == 0);
    CHECK(f[3] == 0);
    CHECK(f[4] == Rat(2) * Rat(-1));
    CHECK(f[5] == 0);
    CHECK(f[6] == Rat(3) * Rat(2));

    Series f37 = formal_differential(curve37(), 7);
    CHECK(f37[0] == 1);
    CHECK(f37[3] == 2);
    CHECK(f37[4] == -2);
    CHECK(f37[5] == 0);
    CHECK(f37[6] == 6);
    CHECK(f37[7] == -12);
}

TEST_CASE("differential matches the chain rule on an independent expansion") {
    for (const EllipticCurve& e :
         {curve37(), curve5077(), EllipticCurve({Int(1), Int(-2), Int(3), Int(-4), Int(5)})}) {
        const size_t len = 13;
        Series f = formal_differential(e, static_cast<long>(len - 1));
        Series u = sinv(curve_sigma(e, len));
        // F(t) (-2u + a1 t u + a3 t^3) = t u' - 2u, an identity equivalent to
        // F dt = dx / (2y + a1 x + a3) after clearing the t^-3 poles
        Rat a1(e.a1), a3(e.a3);
        Series den(len, Rat(0)), num(len, Rat(0));
        for (size_t j = 0; j < len; ++j) {
            num[j] = Rat(Rat(static_cast<long>(j) - 2) * u[j]);
            den[j] = Rat(Rat(-2) * u[j]);
            if (j >= 1) den[j] = Rat(den[j] + Rat(a1 * u[j - 1]));
            if (j == 3) den[j] = Rat(den[j] + a3);
        }
        Series prod = smul(f, den);
        for (size_t j = 0; j < len; ++j) REQUIRE(prod[j] == num[j]);
        // integer coefficients throughout
        for (size_t j = 0; j < len; ++j) REQUIRE(f[j].get_den() == 1);
    }
}

TEST_CASE("log expansion divides the differential by the exponent") {
    FormalLogSeries l = formal_log(curve37(), 8);
    Series f = formal_differential(curve37(), 7);
    CHECK(l.c[0] == 0);
    CHECK(l.c[1] == 1);
    for (long k = 1; k <= 8; ++k) {
        CHECK(l.c[k] == Rat(f[k - 1] / Rat(k)));
        CHECK(Int(Int(k) % l.c[k].get_den()) == 0); // denominator divides k
    }
    CHECK(l.c[4] == Rat(1, 2));
    CHECK(l.c[8] == Rat(-3, 2));
    CHECK_THROWS_AS(formal_log(curve37(), 1), ConfigError);
    CHECK_THROWS_AS(formal_differential(curve37(), 0), ConfigError);
}

TEST_CASE("elliptic logarithm is a homomorphism") {
    EllipticCurve e = curve37();
    ECPoint P = pt(0, 0);
    PadicInt lp = elliptic_padic_log(e, P, Int(5), 12);
    CHECK(lp.valuation() >= 1);
    CHECK(!lp.is_zero());
    for (long a : {2L, 3L, 7L}) {
        PadicInt la = elliptic_padic_log(e, ec_mul(e, Int(a), P), Int(5), 12);
        CHECK(agrees(la, PadicInt(Int(5), 12, Int(a)) * lp));
    }
    PadicInt lneg = elliptic_padic_log(e, ec_neg(e, P), Int(5), 12);
    CHECK(agrees(lneg, -lp));

    // the same homomorphism 2-adically
    PadicInt l2 = elliptic_padic_log(e, P, Int(2), 10);
    PadicInt l2d = elliptic_padic_log(e, ec_mul(e, Int(2), P), Int(2), 10);
    CHECK(agrees(l2d, PadicInt(Int(2), 10, Int(2)) * l2));

    // deeper precision refines, never contradicts
    PadicInt deep = elliptic_padic_log(e, P, Int(5), 20);
    CHECK(agrees(deep, lp));
}

TEST_CASE("torsion points have logarithm zero") {
    EllipticCurve t6({Int(0), Int(0), Int(0), Int(0), Int(1)});
    ECPoint T = pt(2, 3); // order 6
    PadicInt l = elliptic_padic_log(t6, T, Int(5), 8);
    CHECK(l.is_zero());
    CHECK(l.n == 8);
}

TEST_CASE("division by the group order costs its p-part") {
    // |E(F_5)| = 10 for the rank-3 curve, so one digit is spent on the division
    EllipticCurve e = curve5077();
    ECPoint P = pt(-2, 3);
    PadicInt lp = elliptic_padic_log(e, P, Int(5), 10);
    CHECK(lp.n == 10);
    PadicInt l2 = elliptic_padic_log(e, ec_mul(e, Int(2), P), Int(5), 10);
    CHECK(agrees(l2, PadicInt(Int(5), 10, Int(2)) * lp));
}

TEST_CASE("logarithm input validation") {
    EllipticCurve e = curve37();
    CHECK_THROWS_AS(elliptic_padic_log(e, pt(1, 1), Int(5), 8), ConfigError);
    CHECK_THROWS_AS(elliptic_padic_log(e, pt(0, 0), Int(37), 8), UnsupportedInput);
    CHECK_THROWS_AS(elliptic_padic_log(e, pt(0, 0), Int(4), 8), ConfigError);
    CHECK_THROWS_AS(elliptic_padic_log(e, pt(0, 0), Int(5), 0), ConfigError);
}

TEST_CASE("closure rank for cyclic subgroups") {
    auto out = ec_dp_rank(spec37({{pt(0, 0)}}), Int(5));
    REQUIRE(out.report);
    CHECK(out.report->d_p == 1);
    CHECK(out.report->r_v == 0);
    CHECK(out.report->ell_p == 1);
    CHECK(out.report->certified);
    CHECK(out.report->status == "certified");
    CHECK(out.report->torsion_exponent == 8); // order of the reduced generator

    EllipticCurve e = curve37();
    auto both = ec_dp_rank(spec37({{pt(0, 0)}, {ec_mul(e, Int(2), pt(0, 0))}}), Int(5));
    REQUIRE(both.report);
    CHECK(both.report->d_p == 1);
    CHECK(both.report->certified);
}

TEST_CASE("closure rank of torsion subgroups is zero and certified") {
    EllipticSpec s;
    s.a = {Int(0), Int(0), Int(0), Int(0), Int(1)};
    s.copies = 1;
    s.gens = {{pt(2, 3)}};
    auto out = ec_dp_rank(s, Int(5));
    REQUIRE(out.report);
    CHECK(out.report->d_p == 0);
    CHECK(out.report->certified);
    CHECK(out.report->torsion_exponent == 6);
}

TEST_CASE("closure rank on a product of two curve copies") {
    EllipticCurve e = curve5077();
    ECPoint P = pt(-2, 3), Q = pt(-1, 3), R = pt(0, 2);
    auto out = ec_dp_rank(spec5077({{P, Q}, {Q, R}}, 2), Int(7));
    REQUIRE(out.report);
    CHECK(out.report->d_p == 2);
    CHECK(out.report->certified);

    // unimodular recombination preserves the closure
    auto rec = ec_dp_rank(spec5077({{ec_add(e, P, Q), ec_add(e, Q, R)}, {Q, R}}, 2), Int(7));
    REQUIRE(rec.report);
    CHECK(rec.report->d_p == out.report->d_p);

    // a diagonally embedded subgroup cannot certify the full cap
    auto diag = ec_dp_rank(spec5077({{P, P}, {Q, Q}}, 2), Int(7), 8, 16);
    REQUIRE(diag.report);
    CHECK(diag.report->d_p == 1);
    CHECK(!diag.report->certified);
    CHECK(diag.report->status == "needs_more_precision");
}

TEST_CASE("bad primes are skipped with a reason") {
    auto out = ec_dp_rank(spec37({{pt(0, 0)}}), Int(37));
    CHECK(!out.report);
    CHECK(out.skip_reason == "bad reduction: prime divides the discriminant");
    CHECK_THROWS_AS(ec_dp_rank(spec37({{pt(0, 0)}}), Int(4)), ConfigError);
}

TEST_CASE("scans over good primes") {
    auto rep = ec_nori_scan(spec37({{pt(0, 0)}}), Int(2), Int(20));
    CHECK(rep.rows.size() == 8);
    CHECK(rep.skipped.empty());
    CHECK(rep.verdict == "constant");
    REQUIRE(rep.d_value);
    CHECK(*rep.d_value == 1);
    CHECK(rep.all_certified);
    for (size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i - 1].p < rep.rows[i].p);

    auto skipping = ec_nori_scan(spec37({{pt(0, 0)}}), Int(36), Int(40));
    CHECK(skipping.rows.empty());
    CHECK(skipping.verdict == "no data");
    REQUIRE(skipping.skipped.size() == 1);
    CHECK(skipping.skipped[0].first == 37);

    auto one = ec_nori_scan(spec37({{pt(0, 0)}}), Int(2), Int(20), 24, 1);
    auto four = ec_nori_scan(spec37({{pt(0, 0)}}), Int(2), Int(20), 24, 4);
    REQUIRE(one.rows.size() == four.rows.size());
    for (size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].p == four.rows[i].p);
        CHECK(one.rows[i].d_p == four.rows[i].d_p);
        CHECK(one.rows[i].certified == four.rows[i].certified);
    }
    CHECK(one.verdict == four.verdict);
}

TEST_CASE("skew triple construction on the rank-3 curve") {
    EllipticCurve e = curve5077();
    ECPoint P = pt(-2, 3), Q = pt(-1, 3), R = pt(0, 2);
    SkewTripleReport rep = mazur_counterexample_check(e, P, Q, R, Int(7), 16, 3);
    CHECK(rep.skew_verified);
    CHECK(rep.det_exactly_zero);
    CHECK(rep.d_p == 2);
    CHECK(rep.d_p_certified);
    CHECK(!rep.relation);
    CHECK(rep.search_bound == 3);

    // same conclusion at the prime where the group order is divisible by p
    SkewTripleReport rep5 = mazur_counterexample_check(e, P, Q, R, Int(5), 16, 2);
    CHECK(rep5.skew_verified);
    CHECK(rep5.d_p == 2);
    CHECK(rep5.d_p_certified);
}

TEST_CASE("skew triples built from dependent points reveal the relation") {
    EllipticCurve e = curve37();
    ECPoint P = pt(0, 0);
    ECPoint P2 = ec_mul(e, Int(2), P), P3 = ec_mul(e, Int(3), P);
    SkewTripleReport rep = mazur_counterexample_check(e, P, P2, P3, Int(5), 14, 3);
    CHECK(rep.skew_verified);
    CHECK(rep.d_p == 2);
    REQUIRE(rep.relation);
    CHECK((*rep.relation)[0] == 3);
    CHECK((*rep.relation)[1] == -2);
    CHECK((*rep.relation)[2] == 1);

    CHECK_THROWS_AS(mazur_counterexample_check(e, pt(1, 1), P2, P3, Int(5), 14, 3), ConfigError);
}
