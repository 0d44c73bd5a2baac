#include "doctest.h"
#include "fgc/elliptic.hpp"
#include "fgc/errors.hpp"
#include "fgc/factor.hpp"

using namespace fgc;
using namespace fgc::ec;

namespace {

// y^2 + y = x^3 - x, conductor 37, rank 1
EllipticCurve curve37() { return EllipticCurve({Int(0), Int(0), Int(1), Int(-1), Int(0)}); }

// y^2 + y = x^3 - 7x + 6, conductor 5077, rank 3
EllipticCurve curve5077() { return EllipticCurve({Int(0), Int(0), Int(1), Int(-7), Int(6)}); }

ECPoint pt(const Rat& x, const Rat& y) {
    ECPoint p;
    p.infinity = false;
    p.x = x;
    p.y = y;
    return p;
}

ECPoint pt(long x, long y) { return pt(Rat(x), Rat(y)); }

struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

} // namespace

TEST_CASE("curve invariants and the discriminant") {
    EllipticCurve e = curve37();
    CHECK(e.b2 == 0);
    CHECK(e.b4 == -2);
    CHECK(e.b6 == 1);
    CHECK(e.b8 == -1);
    CHECK(e.disc == 37);
    CHECK(curve5077().disc == 5077);
    CHECK_THROWS_AS(EllipticCurve({Int(0), Int(0), Int(0), Int(0), Int(0)}), ConfigError);
    CHECK_THROWS_AS(EllipticCurve({Int(1), Int(2)}), ConfigError);
}

TEST_CASE("group law on the conductor-37 curve") {
    EllipticCurve e = curve37();
    ECPoint P = pt(0, 0);
    REQUIRE(on_curve(e, P));

    ECPoint m = ec_neg(e, P);
    CHECK(m.x == 0);
    CHECK(m.y == -1);
    CHECK(ec_add(e, P, m).infinity);

    ECPoint P2 = ec_add(e, P, P);
    CHECK(P2.x == 1);
    CHECK(P2.y == 0);
    ECPoint P3 = ec_add(e, P2, P);
    CHECK(P3.x == -1);
    CHECK(P3.y == -1);
    ECPoint P4 = ec_mul(e, Int(4), P);
    CHECK(P4.x == 2);
    CHECK(P4.y == -3);
    CHECK(ec_equal(P4, ec_add(e, P2, P2)));
    CHECK(on_curve(e, P4));

    ECPoint P5 = ec_mul(e, Int(5), P);
    CHECK(P5.x == Rat(1, 4));
    CHECK(P5.y == Rat(-5, 8));
    CHECK(on_curve(e, P5));

    ECPoint m3 = ec_mul(e, Int(-3), P);
    CHECK(ec_equal(m3, ec_neg(e, P3)));
    CHECK(ec_mul(e, Int(0), P).infinity);
    CHECK(ec_equal(ec_add(e, P, ECPoint{}), P));
}

TEST_CASE("associativity on random combinations") {
    EllipticCurve e = curve5077();
    ECPoint P = pt(-2, 3), Q = pt(-1, 3), R = pt(0, 2);
    REQUIRE(on_curve(e, P));
    REQUIRE(on_curve(e, Q));
    REQUIRE(on_curve(e, R));

    Lcg rng(0x5077);
    auto random_point = [&]() {
        ECPoint s = ec_mul(e, Int(rng.next(-4, 4)), P);
        s = ec_add(e, s, ec_mul(e, Int(rng.next(-4, 4)), Q));
        s = ec_add(e, s, ec_mul(e, Int(rng.next(-4, 4)), R));
        return s;
    };
    for (int trial = 0; trial < 500; ++trial) {
        ECPoint a = random_point(), b = random_point(), c = random_point();
        ECPoint left = ec_add(e, ec_add(e, a, b), c);
        ECPoint right = ec_add(e, a, ec_add(e, b, c));
        REQUIRE(ec_equal(left, right));
        REQUIRE(on_curve(e, left));
    }
}

TEST_CASE("point counts over small fields") {
    EllipticCurve e = curve37();
    CHECK(ec_count_points(e, Int(5)) == 8);
    CHECK(ec_count_points(e, Int(2)) == 5);
    CHECK(ec_count_points(e, Int(3)) == 7);
    CHECK(ec_count_points(curve5077(), Int(5)) == 10);
    CHECK(ec_count_points(curve5077(), Int(7)) == 12);

    // cross-check the character sum against a direct double loop
    Int p(11);
    FpCurve c = reduce_curve(e, p);
    Int brute(1);
    for (Int x = 0; x < p; x = Int(x + 1))
        for (Int y = 0; y < p; y = Int(y + 1)) {
            Int lhs = Int(y * y + c.a1 * x * y + c.a3 * y);
            Int rhs = Int(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            if (Int((lhs - rhs) % p) == 0) brute = Int(brute + 1);
        }
    CHECK(ec_count_points(e, p) == brute);

    CHECK_THROWS_AS(ec_count_points(e, Int(37)), UnsupportedInput); // bad reduction
    CHECK_THROWS_AS(ec_count_points(e, Int(4)), ConfigError);
    CHECK_THROWS_AS(ec_count_points(e, Int(101), Int(100)), UnsupportedInput);
}

TEST_CASE("reduction is a homomorphism at good primes") {
    EllipticCurve e = curve5077();
    ECPoint P = pt(-2, 3), Q = pt(-1, 3), R = pt(0, 2);
    Lcg rng(0xabcdef);
    int primes_checked = 0;
    for (Int p = 2; primes_checked < 20; p = Int(p + 1)) {
        if (!exact::is_prime(p) || Int(e.disc % p) == 0) continue;
        ++primes_checked;
        FpCurve c = reduce_curve(e, p);
        for (int trial = 0; trial < 5; ++trial) {
            ECPoint a = ec_add(e, ec_mul(e, Int(rng.next(-6, 6)), P), ec_mul(e, Int(rng.next(-6, 6)), Q));
            ECPoint b = ec_add(e, ec_mul(e, Int(rng.next(-6, 6)), R), ec_mul(e, Int(rng.next(-6, 6)), P));
            auto ra = ec_reduce_mod_p(e, a, p);
            auto rb = ec_reduce_mod_p(e, b, p);
            auto rsum = ec_reduce_mod_p(e, ec_add(e, a, b), p);
            REQUIRE(ra.point);
            REQUIRE(rb.point);
            REQUIRE(rsum.point);
            FpPoint s = fp_add(c, *ra.point, *rb.point);
            CHECK(s.infinity == rsum.point->infinity);
            if (!s.infinity) {
                CHECK(s.x == rsum.point->x);
                CHECK(s.y == rsum.point->y);
            }
        }
    }
}

TEST_CASE("points with p in the denominator reduce to the identity") {
    EllipticCurve e = curve37();
    ECPoint P5 = ec_mul(e, Int(5), pt(0, 0)); // (1/4, -5/8)
    auto red = ec_reduce_mod_p(e, P5, Int(2));
    REQUIRE(red.point);
    CHECK(red.point->infinity);

    // consistent with reducing first: |E(F_2)| = 5 annihilates the image
    auto redP = ec_reduce_mod_p(e, pt(0, 0), Int(2));
    FpCurve c = reduce_curve(e, Int(2));
    CHECK(fp_mul(c, Int(5), *redP.point).infinity);

    auto bad = ec_reduce_mod_p(e, pt(0, 0), Int(37));
    CHECK(!bad.point);
    CHECK(bad.refusal == "bad reduction: prime divides the discriminant");
}

TEST_CASE("orders of reduced points") {
    EllipticCurve e = curve37();
    Int p(5);
    FpCurve c = reduce_curve(e, p);
    Int size = ec_count_points(e, p);
    auto red = ec_reduce_mod_p(e, pt(0, 0), p);
    CHECK(fp_point_order(c, *red.point, size) == 8);
    CHECK(fp_mul(c, Int(8), *red.point).infinity);
    CHECK(!fp_mul(c, Int(4), *red.point).infinity);
    CHECK(fp_point_order(c, FpPoint{}, size) == 1);
}

TEST_CASE("spec validation checks membership") {
    EllipticSpec s;
    s.a = {Int(0), Int(0), Int(1), Int(-1), Int(0)};
    s.copies = 1;
    s.gens = {{pt(0, 0)}, {pt(1, 0)}};
    EllipticGroup g = validate_elliptic(s);
    CHECK(g.copies == 1);
    CHECK(g.gens.size() == 2);

    EllipticSpec off = s;
    off.gens = {{pt(1, 1)}};
    CHECK_THROWS_AS(validate_elliptic(off), ConfigError);

    EllipticSpec arity = s;
    arity.copies = 2;
    CHECK_THROWS_AS(validate_elliptic(arity), ConfigError);
}

TEST_CASE("dependence search recovers planted relations") {
    EllipticCurve e = curve37();
    ECPoint P = pt(0, 0);

    EllipticGroup dep{e, 1, {{P}, {ec_mul(e, Int(2), P)}}};
    auto rel = dependence_search(dep, 3);
    REQUIRE(rel);
    CHECK((*rel)[0] == 2);
    CHECK((*rel)[1] == -1);

    // torsion point of order 6 on y^2 = x^3 + 1
    EllipticCurve t6({Int(0), Int(0), Int(0), Int(0), Int(1)});
    EllipticGroup tor{t6, 1, {{pt(2, 3)}}};
    auto rel6 = dependence_search(tor, 6);
    REQUIRE(rel6);
    CHECK((*rel6)[0] == 6);
    CHECK(!dependence_search(tor, 5));

    EllipticCurve e3 = curve5077();
    ECPoint A = pt(-2, 3), B = pt(-1, 3);
    EllipticGroup indep{e3, 1, {{A}, {B}}};
    CHECK(!dependence_search(indep, 4));

    EllipticGroup planted{e3, 1, {{A}, {B}, {ec_add(e3, A, B)}}};
    auto rel3 = dependence_search(planted, 4);
    REQUIRE(rel3);
    CHECK((*rel3)[0] == 1);
    CHECK((*rel3)[1] == 1);
    CHECK((*rel3)[2] == -1);

    CHECK_THROWS_AS(dependence_search(indep, 0), ConfigError);
}
