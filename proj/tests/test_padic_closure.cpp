#include <memory>

#include "doctest.h"
#include "fgc/errors.hpp"
#include "fgc/padic_closure.hpp"

using namespace fgc;
using namespace fgc::padic;

namespace {

TorusSpec torus(int dim, std::vector<std::vector<Rat>> gens) {
    TorusSpec s;
    s.dim = dim;
    s.gens = std::move(gens);
    return s;
}

WeilSpec sqrt2_group() {
    auto k = std::make_shared<exact::NumberField>(std::vector<Int>{-2, 0, 1});
    WeilSpec s;
    s.field = k;
    s.gens = {exact::NfElement(k, {Rat(1), Rat(1)})}; // 1 + sqrt(2)
    return s;
}

} // namespace

TEST_CASE("d(p) of a single rational generator") {
    auto out = dp_rank(torus(1, {{Rat(2)}}), 7, 8);
    REQUIRE(out.report.has_value());
    const auto& r = *out.report;
    CHECK(r.d_p == 1);
    CHECK(r.r_v == 0);
    CHECK(r.ell_p == 1);
    CHECK(r.certified);
    CHECK(r.status == "certified");
    CHECK(r.torsion_exponent == 3); // order of 2 mod 7
}

TEST_CASE("ambient dimension caps d(p)") {
    auto out = dp_rank(torus(1, {{Rat(2)}, {Rat(3)}}), 7);
    REQUIRE(out.report.has_value());
    CHECK(out.report->d_p == 1);
    CHECK(out.report->certified);
    CHECK(out.report->ell_p == 1);
}

TEST_CASE("pure valuation generator contributes only r_v") {
    auto out = dp_rank(torus(1, {{Rat(7)}}), 7);
    REQUIRE(out.report.has_value());
    CHECK(out.report->d_p == 0);
    CHECK(out.report->r_v == 1);
    CHECK(out.report->ell_p == 1);
    CHECK(out.report->certified);
    CHECK(out.report->torsion_exponent == 1);
}

TEST_CASE("valuation and unit parts add up to the closure rank") {
    auto out = dp_rank(torus(1, {{Rat(2)}, {Rat(7)}}), 7);
    REQUIRE(out.report.has_value());
    CHECK(out.report->d_p == 1);
    CHECK(out.report->r_v == 1);
    CHECK(out.report->ell_p == 2);
    // consistency with the closed-form topological rank of Q_p^x
    GroupShape qpx;
    qpx.z_rank = 1;
    qpx.zp_rank = 1;
    qpx.finite_part = true;
    CHECK(topological_rank(qpx) == out.report->ell_p);
}

TEST_CASE("two-dimensional certified rank") {
    auto out = dp_rank(torus(2, {{Rat(2), Rat(3)}, {Rat(3), Rat(2)}}), 7);
    REQUIRE(out.report.has_value());
    CHECK(out.report->d_p == 2);
    CHECK(out.report->certified);

    auto single = dp_rank(torus(2, {{Rat(2), Rat(3)}}), 7);
    CHECK(single.report->d_p == 1);
    CHECK(single.report->certified);

    // multiplicative dependence keeps the certified rank at one
    auto dep = dp_rank(torus(2, {{Rat(2), Rat(3)}, {Rat(4), Rat(9)}}), 7);
    CHECK(dep.report->d_p == 1);
    CHECK(dep.report->certified);
}

TEST_CASE("precision retry resolves a high-valuation logarithm") {
    // 16808 = 1 + 7^5, so its log vanishes to 7-adic precision five
    auto low = dp_rank(torus(1, {{Rat(16808)}}), 7, 4, 4);
    REQUIRE(low.report.has_value());
    CHECK(!low.report->certified);
    CHECK(low.report->status == "needs_more_precision");
    CHECK(low.report->d_p == 0);

    auto retried = dp_rank(torus(1, {{Rat(16808)}}), 7, 4, 64);
    REQUIRE(retried.report.has_value());
    CHECK(retried.report->certified);
    CHECK(retried.report->d_p == 1);
    CHECK(retried.report->precision_used > 4);
}

TEST_CASE("certified d(p) is invariant under unimodular recombination") {
    auto base = dp_rank(torus(2, {{Rat(2), Rat(3)}, {Rat(3), Rat(2)}}), 11);
    // replace (g1, g2) by (g1*g2, g1*g2^2)
    auto mixed = dp_rank(torus(2, {{Rat(6), Rat(6)}, {Rat(18), Rat(12)}}), 11);
    REQUIRE(base.report.has_value());
    REQUIRE(mixed.report.has_value());
    CHECK(base.report->certified);
    CHECK(mixed.report->certified);
    CHECK(base.report->d_p == mixed.report->d_p);
    CHECK(base.report->r_v == mixed.report->r_v);
}

TEST_CASE("number-field generator at split and non-split primes") {
    auto spec = sqrt2_group();
    auto split = dp_rank(spec, 7);
    REQUIRE(split.report.has_value());
    CHECK(split.report->d_p == 1);
    CHECK(split.report->certified);
    CHECK(split.report->ell_p == 1);
    CHECK(split.report->torsion_exponent == 6); // lcm of orders of 4 and 5 mod 7

    auto inert = dp_rank(spec, 5);
    CHECK(!inert.report.has_value());
    CHECK(inert.skip_reason == "prime not totally split");

    auto ramified = dp_rank(spec, 2);
    CHECK(!ramified.report.has_value());
}

TEST_CASE("non-integral field generator is skipped with a reason") {
    auto k = std::make_shared<exact::NumberField>(std::vector<Int>{-2, 0, 1});
    WeilSpec s;
    s.field = k;
    s.gens = {exact::NfElement(k, {Rat(1, 7), Rat(1)})};
    auto out = dp_rank(s, 7);
    CHECK(!out.report.has_value());
    CHECK(out.skip_reason == "generator is not p-integral");

    // p-integral but not a unit above 7: the norm of 3 + sqrt(2) is 7
    WeilSpec s2;
    s2.field = k;
    s2.gens = {exact::NfElement(k, {Rat(3), Rat(1)})};
    auto out2 = dp_rank(s2, 7);
    CHECK(!out2.report.has_value());
    CHECK(out2.skip_reason == "generator is not a p-adic unit");
}

TEST_CASE("scan over a rational group is constant in p") {
    GroupSpec g = torus(1, {{Rat(2)}, {Rat(3)}});
    auto rep = nori_scan(g, 3, 50, 32);
    CHECK(rep.skipped.empty());
    CHECK(rep.verdict == "constant");
    REQUIRE(rep.d_value.has_value());
    CHECK(*rep.d_value == 1);
    CHECK(rep.all_certified);
    CHECK(rep.rows.size() == 14); // primes in [3, 50]
    for (size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i - 1].p < rep.rows[i].p);
}

TEST_CASE("scan over the quadratic unit visits exactly the split primes") {
    GroupSpec g = sqrt2_group();
    auto rep = nori_scan(g, 2, 100, 64);
    CHECK(rep.verdict == "constant");
    REQUIRE(rep.d_value.has_value());
    CHECK(*rep.d_value == 1);
    CHECK(rep.all_certified);
    const long split[] = {7, 17, 23, 31, 41, 47, 71, 73, 79, 89, 97};
    REQUIRE(rep.rows.size() == 11);
    for (int i = 0; i < 11; ++i) CHECK(rep.rows[i].p == split[i]);
    CHECK(rep.skipped.size() == 25 - 11);
}

TEST_CASE("scan results do not depend on the worker count") {
    GroupSpec g = sqrt2_group();
    auto a = nori_scan(g, 2, 60, 32, 1);
    auto b = nori_scan(g, 2, 60, 32, 4);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].p == b.rows[i].p);
        CHECK(a.rows[i].d_p == b.rows[i].d_p);
        CHECK(a.rows[i].torsion_exponent == b.rows[i].torsion_exponent);
        CHECK(a.rows[i].precision_used == b.rows[i].precision_used);
    }
    CHECK(a.verdict == b.verdict);
    CHECK(a.skipped == b.skipped);
}

TEST_CASE("empty admissible range yields no verdict") {
    GroupSpec g = sqrt2_group();
    auto rep = nori_scan(g, 2, 5, 32);
    CHECK(rep.rows.empty());
    CHECK(rep.verdict == "no data");
    CHECK(!rep.d_value.has_value());
    CHECK(rep.skipped.size() == 3); // 2, 3, 5 all refused
}

TEST_CASE("elliptic ambients are routed elsewhere") {
    EllipticSpec e;
    e.a = {0, 0, 1, -1, 0};
    e.gens = {{ECPoint{false, Rat(0), Rat(0)}}};
    CHECK_THROWS_AS(nori_scan(GroupSpec(e), 2, 10, 32), UnsupportedInput);
}

TEST_CASE("closed-form topological ranks") {
    GroupShape zp;
    zp.zp_rank = 3;
    CHECK(topological_rank(zp) == 3);

    GroupShape circles;
    circles.circle_dim = 5;
    CHECK(topological_rank(circles) == 1);

    GroupShape qpx;
    qpx.z_rank = 1;
    qpx.zp_rank = 1;
    CHECK(topological_rank(qpx) == 2);

    GroupShape rx;
    rx.real_dim = 1;
    rx.finite_part = true;
    CHECK(topological_rank(rx) == 2);

    GroupShape mixed_real;
    mixed_real.real_dim = 2;
    mixed_real.circle_dim = 3;
    mixed_real.z_rank = 1;
    CHECK(topological_rank(mixed_real) == 4);

    GroupShape lattice;
    lattice.z_rank = 4;
    CHECK(topological_rank(lattice) == 4);

    GroupShape bad;
    bad.zp_rank = 1;
    bad.circle_dim = 1;
    CHECK_THROWS_AS(topological_rank(bad), UnsupportedInput);
    GroupShape neg;
    neg.z_rank = -1;
    CHECK_THROWS_AS(topological_rank(neg), ConfigError);
}
