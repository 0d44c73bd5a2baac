#include "doctest.h"
#include "fgc/errors.hpp"
#include "fgc/padic.hpp"

using namespace fgc;
using namespace fgc::padic;

namespace {

// deterministic generator for reproducible sampling
struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 17;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Int pow_mod_int(const Int& b, const Int& e, const Int& m) {
    Int out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return out;
}

} // namespace

TEST_CASE("ring operations with precision propagation") {
    PadicInt two(7, 4, 2);
    CHECK(agrees(two * two.inverse(), PadicInt(7, 4, 1)));

    PadicInt three(7, 4, 3);
    PadicInt inv3 = three.inverse();
    CHECK(inv3.r == 1601); // 3 * 1601 = 4803 = 2 * 2401 + 1
    CHECK(Int(inv3.r * 3 % 2401) == 1);

    PadicInt zero(7, 4, 0);
    PadicInt sum = two + zero;
    CHECK(sum.n == 4);
    CHECK(sum.r == 2);

    PadicInt coarse(7, 2, 5);
    CHECK((two + coarse).n == 2);
    CHECK((two * coarse).n == 2);
    CHECK((two - coarse).n == 2);

    CHECK_THROWS_AS(PadicInt(7, 4, 7).inverse(), Error);
    CHECK_THROWS_AS(two + PadicInt(5, 4, 1), Error);
}

TEST_CASE("valuation and exact division by powers of p") {
    PadicInt x(7, 4, 49 * 3);
    CHECK(x.valuation() == 2);
    PadicInt y = x.shift_down(2);
    CHECK(y.n == 2);
    CHECK(y.r == 3);
    CHECK_THROWS_AS(PadicInt(7, 4, 3).shift_down(1), Error);
    CHECK(PadicInt(7, 4, 0).valuation() == 4); // apparent zero clamps to n
}

TEST_CASE("rational reduction requires a p-free denominator") {
    PadicInt half = padic_from_rat(Rat(1, 2), 7, 3);
    CHECK(Int(half.r * 2 % 343) == 1);
    PadicInt neg = padic_from_rat(Rat(-1), 7, 3);
    CHECK(neg.r == 342);
    CHECK_THROWS_AS(padic_from_rat(Rat(1, 7), 7, 3), Error);
}

TEST_CASE("teichmuller lifts are the torsion parts") {
    CHECK(teichmuller(PadicInt(7, 4, 1)).r == 1);
    CHECK(teichmuller(PadicInt(7, 2, 3)).r == 31); // 3^7 = 2187 = 44*49 + 31

    for (long p : {3, 5, 7, 11, 13}) {
        Int pn = pow_int(p, 6);
        for (long a = 2; a < p; ++a) {
            PadicInt t = teichmuller(PadicInt(p, 6, a));
            CHECK(pow_mod_int(t.r, p - 1, pn) == 1);
            CHECK(Int(t.r % p) == a);
        }
    }
    // sign part at p = 2
    CHECK(teichmuller(PadicInt(2, 5, 7)).r == 31);
    CHECK(teichmuller(PadicInt(2, 5, 5)).r == 1);
    CHECK_THROWS_AS(teichmuller(PadicInt(7, 3, 14)), Error);
}

TEST_CASE("logarithm matches the truncated series oracle") {
    // log(8) = log(1+7) = 7 - 49/2 + 343/3 mod 7^4: hand value 497 = 7 * 71
    PadicInt lg = padic_log_unit(PadicInt(7, 4, 8));
    CHECK(lg.n == 4);
    CHECK(lg.r == 497);
    CHECK(lg.valuation() == 1);

    CHECK(padic_log_unit(PadicInt(7, 4, 1)).is_zero());
    CHECK(padic_log_unit(PadicInt(7, 6, -1)).is_zero()); // log(-1) = 0
    CHECK_THROWS_AS(padic_log_unit(PadicInt(7, 4, 21)), Error);
}

TEST_CASE("logarithm is a homomorphism on units") {
    for (long p : {3, 5, 7, 11, 13}) {
        Lcg rng(p);
        Int pn = pow_int(p, 20);
        for (int k = 0; k < 50; ++k) {
            Int a(rng.range(2, 1 << 30));
            Int b(rng.range(2, 1 << 30));
            if (a % p == 0 || b % p == 0) continue;
            PadicInt pa(p, 20, a), pb(p, 20, b), pab(p, 20, a * b);
            CHECK(agrees(padic_log_unit(pab), padic_log_unit(pa) + padic_log_unit(pb)));
        }
    }
}

TEST_CASE("exp inverts log up to the torsion part") {
    for (long p : {3, 5, 7, 11, 13}) {
        Lcg rng(100 + p);
        for (int k = 0; k < 30; ++k) {
            Int a(rng.range(2, 1 << 30));
            if (a % p == 0) continue;
            PadicInt u(p, 24, a);
            PadicInt round_trip = padic_exp(padic_log_unit(u));
            CHECK(agrees(round_trip, u * teichmuller(u).inverse()));
        }
    }
    // direct convergence-domain inverse: exp(log(1+u)) = 1+u
    PadicInt onep(5, 16, 6);
    CHECK(agrees(padic_exp(padic_log_unit(onep)), onep));
    CHECK_THROWS_AS(padic_exp(PadicInt(5, 8, 2)), Error);
}

TEST_CASE("two-adic logarithm carries the documented penalty") {
    PadicInt three(2, 12, 3);
    PadicInt lg = padic_log_unit(three);
    CHECK(lg.n == 10);
    CHECK(lg.valuation() >= 2);
    // 3 = -1 * (-3) with -3 in 1+4Z_2, so exp(log 3) = -3
    PadicInt back = padic_exp(lg);
    CHECK(agrees(back, PadicInt(2, 10, -3)));
}

TEST_CASE("recomputing at higher precision refines, never contradicts") {
    Lcg rng(424242);
    for (long p : {3, 7, 13}) {
        for (int k = 0; k < 20; ++k) {
            Int a(rng.range(1, 1 << 20));
            Int b(rng.range(1, 1 << 20));
            if (a % p == 0 || b % p == 0) continue;
            PadicInt x8(p, 8, a), y8(p, 8, b);
            PadicInt x16(p, 16, a), y16(p, 16, b);
            CHECK((x16 * y16 - x16.inverse() + y16).with_precision(8).r ==
                  (x8 * y8 - x8.inverse() + y8).r);
            CHECK(padic_log_unit(x16).with_precision(8).r == padic_log_unit(x8).r);
        }
    }
}

TEST_CASE("multiplicative orders mod p") {
    CHECK(unit_order_mod_p(1, 7) == 1);
    CHECK(unit_order_mod_p(2, 7) == 3);
    CHECK(unit_order_mod_p(3, 7) == 6);
    CHECK(unit_order_mod_p(6, 7) == 2);
    CHECK(unit_order_mod_p(3, 2) == 1);
    CHECK_THROWS_AS(unit_order_mod_p(14, 7), Error);
}

TEST_CASE("hensel lifting of a totally split polynomial") {
    std::vector<Int> f = {-2, 0, 1}; // x^2 - 2
    auto out = hensel_lift_roots(f, 7, 2);
    REQUIRE(out.set.has_value());
    REQUIRE(out.set->roots.size() == 2);
    CHECK(out.set->roots[0].r == 10); // 3 lifts to 10, 10^2 = 100 = 2 + 2*49
    CHECK(out.set->roots[1].r == 39);

    auto deep = hensel_lift_roots(f, 7, 40);
    Int pn = pow_int(7, 40);
    for (const auto& r : deep.set->roots) CHECK(Int((r.r * r.r - 2) % pn) == 0);
    CHECK(Int(deep.set->roots[0].r % 49) == 10);
}

TEST_CASE("hensel refusals are typed, not failures") {
    std::vector<Int> f = {-2, 0, 1};
    auto inert = hensel_lift_roots(f, 5, 4);
    CHECK(!inert.set.has_value());
    CHECK(inert.refusal == "prime not totally split");
    auto ramified = hensel_lift_roots(f, 2, 4);
    CHECK(!ramified.set.has_value());
    CHECK(!ramified.refusal.empty());
    CHECK_THROWS_AS(hensel_lift_roots({Int(1), Int(2)}, 7, 2), UnsupportedInput);
}

TEST_CASE("embedding field elements through a lifted root") {
    auto out = hensel_lift_roots({-2, 0, 1}, 7, 2);
    REQUIRE(out.set.has_value());
    auto v = embed_at_root(*out.set, 0, {Rat(1), Rat(1)}); // 1 + sqrt(2) -> 1 + 10
    REQUIRE(v.has_value());
    CHECK(v->r == 11);
    CHECK(Int((v->r * v->r - 2 * v->r - 1) % 49) == 0); // satisfies x^2 - 2x - 1
    CHECK(!embed_at_root(*out.set, 0, {Rat(1, 7), Rat(0)}).has_value());
}
