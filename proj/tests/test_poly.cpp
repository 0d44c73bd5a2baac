#include <doctest.h>

#include "fgc/poly.hpp"

using namespace fgc;
using namespace fgc::exact;

namespace {

RatPoly p(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rat> c;
    for (long v : coeffs_low_to_high) c.emplace_back(v);
    return RatPoly(std::move(c));
}

} // namespace

TEST_CASE("arithmetic and evaluation") {
    RatPoly f = p({-2, 0, 1}); // x^2 - 2
    RatPoly g = p({3, 1});     // x + 3
    CHECK((f * g) == p({-6, -2, 3, 1}));
    CHECK((f + g) == p({1, 1, 1}));
    CHECK((f - f).is_zero());
    CHECK(f.eval(Rat(3)) == 7);
    CHECK(f.derivative() == p({0, 2}));
    CHECK(f.deg() == 2);
    CHECK(RatPoly().deg() == -1);
}

TEST_CASE("division identity") {
    uint64_t s = 7;
    auto rnd = [&](long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + long((s >> 33) % uint64_t(hi - lo + 1));
    };
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Rat> ac, bc;
        int da = int(rnd(0, 5)), db = int(rnd(0, 3));
        for (int i = 0; i <= da; ++i) ac.emplace_back(rnd(-5, 5));
        for (int i = 0; i <= db; ++i) bc.emplace_back(rnd(-5, 5));
        RatPoly a(ac), b(bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK((q * b + r) == a);
        CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("gcd of polynomials with a planted common factor") {
    RatPoly common = p({1, 1});            // x + 1
    RatPoly a = common * p({-2, 0, 1});    // (x+1)(x^2-2)
    RatPoly b = common * p({3, 1});        // (x+1)(x+3)
    CHECK(poly_gcd(a, b) == common.monic());
    CHECK(poly_gcd(p({-2, 0, 1}), p({3, 1})).deg() == 0); // coprime -> 1
}

TEST_CASE("resultant against the product-of-evaluations identity") {
    // res(x - a, f) = f(a)
    std::vector<Int> f{Int(-2), Int(0), Int(0), Int(1)}; // x^3 - 2
    CHECK(resultant({Int(-3), Int(1)}, f) == RatPoly::from_int(f).eval(Rat(3)).get_num());
    // res(x^3-2, x+3) = prod over roots a of (a+3) = -f(-3) = 29
    CHECK(resultant(f, {Int(3), Int(1)}) == 29);
    // multiplicativity: res(fg, h) = res(f,h) res(g,h)
    std::vector<Int> g{Int(1), Int(0), Int(1)}; // x^2 + 1
    std::vector<Int> h{Int(5), Int(2), Int(1)}; // x^2 + 2x + 5
    RatPoly fg = RatPoly::from_int(f) * RatPoly::from_int(g);
    std::vector<Int> fgi;
    for (auto& c : fg.coeffs()) fgi.push_back(c.get_num());
    CHECK(resultant(fgi, h) == resultant(f, h) * resultant(g, h));
    // common root -> 0
    CHECK(resultant({Int(-1), Int(1)}, {Int(-1), Int(0), Int(1)}) == 0);
}

TEST_CASE("discriminants of named polynomials") {
    CHECK(discriminant({Int(-2), Int(0), Int(1)}) == 8);        // x^2 - 2
    CHECK(discriminant({Int(-1), Int(-1), Int(1)}) == 5);       // x^2 - x - 1
    CHECK(discriminant({Int(-2), Int(0), Int(0), Int(1)}) == -108); // x^3 - 2
    // b^2 - 4ac for quadratics
    CHECK(discriminant({Int(3), Int(7), Int(2)}) == 49 - 24);
}

TEST_CASE("irreducibility verdicts") {
    CHECK(irreducible_monic({Int(-2), Int(0), Int(1)}));  // x^2 - 2
    CHECK(irreducible_monic({Int(-2), Int(0), Int(0), Int(1)})); // x^3 - 2
    CHECK(irreducible_monic({Int(1), Int(1)}));           // x + 1, degree 1
    CHECK(irreducible_monic({Int(1), Int(0), Int(0), Int(0), Int(1)})); // x^4 + 1
    CHECK(irreducible_monic({Int(-1), Int(-1), Int(0), Int(0), Int(0), Int(1)})); // x^5 - x - 1
    CHECK(irreducible_monic({Int(1), Int(0), Int(0), Int(1), Int(0), Int(0), Int(1)})); // x^6 + x^3 + 1

    CHECK(!irreducible_monic({Int(-1), Int(0), Int(1)})); // x^2 - 1
    CHECK(!irreducible_monic({Int(4), Int(0), Int(0), Int(0), Int(1)})); // x^4 + 4
    CHECK(!irreducible_monic({Int(-6), Int(1), Int(1)})); // (x-2)(x+3)
    CHECK(!irreducible_monic({Int(0), Int(0), Int(1)}));  // x^2, not squarefree
    // product of two irreducible cubics, no rational root
    RatPoly prod = p({-2, 0, 0, 1}) * p({-3, 0, 0, 1}); // (x^3-2)(x^3-3)
    std::vector<Int> pi;
    for (auto& c : prod.coeffs()) pi.push_back(c.get_num());
    CHECK(!irreducible_monic(pi));
}

TEST_CASE("factor degree patterns over small fields") {
    std::vector<Int> f{Int(-2), Int(0), Int(1)}; // x^2 - 2
    auto d7 = factor_degrees_mod_p(f, 7);        // 2 is a square mod 7
    REQUIRE(d7.has_value());
    CHECK(*d7 == std::vector<int>{1, 1});
    auto d3 = factor_degrees_mod_p(f, 3);        // 2 is not a square mod 3
    REQUIRE(d3.has_value());
    CHECK(*d3 == std::vector<int>{2});
    auto d2 = factor_degrees_mod_p(f, 2);        // x^2 mod 2, not squarefree
    CHECK(!d2.has_value());
    // x^4 + 1 splits into quadratics mod 3
    auto q = factor_degrees_mod_p({Int(1), Int(0), Int(0), Int(0), Int(1)}, 3);
    REQUIRE(q.has_value());
    CHECK(*q == std::vector<int>{2, 2});
}

TEST_CASE("roots over F_p") {
    std::vector<Int> f{Int(-2), Int(0), Int(1)}; // x^2 - 2
    CHECK(roots_mod_p(f, Int(7)) == std::vector<Int>{Int(3), Int(4)});
    CHECK(roots_mod_p(f, Int(3)).empty());
    CHECK(roots_mod_p({Int(0), Int(1)}, Int(5)) == std::vector<Int>{Int(0)});
}

TEST_CASE("polynomial parsing") {
    CHECK(parse_poly("x^2 - 2") == p({-2, 0, 1}));
    CHECK(parse_poly("x^2-2") == p({-2, 0, 1}));
    CHECK(parse_poly("-x + 1") == p({1, -1}));
    CHECK(parse_poly("3/2*x + 1") == RatPoly({Rat(1), Rat(3, 2)}));
    CHECK(parse_poly("x^3 + 2*x^2 - x - 7") == p({-7, -1, 2, 1}));
    CHECK(parse_poly("5") == RatPoly::constant(Rat(5)));
    CHECK(parse_poly("t^2 - 2", "t") == p({-2, 0, 1}));
    CHECK(parse_poly("x + x") == p({0, 2})); // repeated terms accumulate
    CHECK_THROWS_AS(parse_poly(""), ConfigError);
    CHECK_THROWS_AS(parse_poly("x^2 + y"), ConfigError);
    CHECK_THROWS_AS(parse_poly("x^"), ConfigError);
    CHECK_THROWS_AS(parse_poly("2x"), ConfigError);
    CHECK_THROWS_AS(parse_poly("x^999"), ConfigError);
}

TEST_CASE("monic integer extraction") {
    auto a = as_monic_int(p({-2, 0, 1}));
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<Int>{Int(-2), Int(0), Int(1)});
    CHECK(!as_monic_int(RatPoly({Rat(1), Rat(2)})).has_value());       // lead 2
    CHECK(!as_monic_int(RatPoly({Rat(1, 2), Rat(1)})).has_value());    // non-integral
    CHECK(as_monic_int(parse_poly("x - 1/1")).has_value());
}

TEST_CASE("to_string round trips through the parser") {
    std::vector<RatPoly> cases{p({-2, 0, 1}), p({1, -1}), p({0, 0, 0, 5}),
                               RatPoly({Rat(1, 2), Rat(-3, 4), Rat(1)}), p({7})};
    for (auto& f : cases) CHECK(parse_poly(f.to_string()) == f);
}
