#include <memory>

#include "doctest.h"
#include "fgc/errors.hpp"
#include "fgc/real_closure.hpp"

using namespace fgc;
using namespace fgc::real;
using exact::NfElement;
using exact::NumberField;

namespace {

TorusSpec torus(int dim, std::vector<std::vector<Rat>> gens) {
    TorusSpec s;
    s.dim = dim;
    s.gens = std::move(gens);
    return s;
}

exact::FieldPtr sqrt2_field() { return std::make_shared<NumberField>(std::vector<Int>{-2, 0, 1}); }

NfElement elt(const exact::FieldPtr& k, Rat a, Rat b) { return NfElement(k, {a, b}); }

} // namespace

TEST_CASE("single multiplicative generator is discrete") {
    auto rep = real_closure_verdict(torus(1, {{Rat(2)}}));
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 1);
    CHECK(rep.discrete_rank == 1);
    CHECK(rep.identity_component_dim == 0);
    CHECK(rep.subtorus_dim == 1);
}

TEST_CASE("two independent generators are dense in the line") {
    auto rep = real_closure_verdict(torus(1, {{Rat(2)}, {Rat(3)}}));
    CHECK(rep.verdict == ClosureVerdict::dense);
    CHECK(rep.exact); // one-dimensional density needs only the rank, which is exact
    CHECK(rep.generator_rank == 2);
    CHECK(rep.identity_component_dim == 1);
    CHECK(rep.discrete_rank == 0);
}

TEST_CASE("torsion generators give the trivial closure") {
    auto rep = real_closure_verdict(torus(1, {{Rat(-1)}}));
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 0);
    CHECK(rep.discrete_rank == 0);
}

TEST_CASE("diagonal generators fill their subtorus") {
    auto rep = real_closure_verdict(torus(2, {{Rat(2), Rat(2)}, {Rat(3), Rat(3)}}));
    CHECK(rep.verdict == ClosureVerdict::dense_in_subtorus);
    CHECK(rep.exact);
    CHECK(rep.subtorus_dim == 1);
    CHECK(rep.identity_component_dim == 1);
    CHECK(rep.discrete_rank == 0);
    CHECK(rep.generator_rank == 2);
}

TEST_CASE("full-rank log matrix certifies a lattice") {
    auto rep = real_closure_verdict(torus(2, {{Rat(2), Rat(2)}, {Rat(3), Rat(5)}}));
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 2);
    CHECK(rep.discrete_rank == 2);
    CHECK(rep.log_rank.certified_lower == 2);
}

TEST_CASE("rank-two skew configuration on the three-torus stays undecided") {
    TorusSpec s = torus(3, {{Rat(1), Rat(2), Rat(3)},
                            {Rat(1, 2), Rat(1), Rat(5)},
                            {Rat(1, 3), Rat(1, 5), Rat(1)}});
    auto rep = real_closure_verdict(s, 256);
    CHECK(rep.generator_rank == 3);
    CHECK(rep.subtorus_dim == 3); // no character kills the group
    CHECK(rep.log_rank.certified_lower == 2);
    CHECK(rep.log_rank.conjectural == 2);
    CHECK(rep.identity_component_dim == 2);
    CHECK(rep.discrete_rank == 0);
    CHECK(rep.verdict == ClosureVerdict::undecided);
    CHECK(!rep.exact);
    CHECK(rep.precision_bits == 256);
}

TEST_CASE("mixed closure with a lattice factor is reported undecided") {
    auto rep = real_closure_verdict(torus(2, {{Rat(2), Rat(1)}, {Rat(3), Rat(3)}, {Rat(5), Rat(5)}}));
    CHECK(rep.verdict == ClosureVerdict::undecided);
    CHECK(rep.generator_rank == 3);
    CHECK(rep.identity_component_dim == 1);
    CHECK(rep.discrete_rank == 1);
    CHECK(rep.subtorus_dim == 2);
}

TEST_CASE("one generator inside a proper subtorus") {
    auto rep = real_closure_verdict(torus(2, {{Rat(4), Rat(8)}}));
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 1);
    CHECK(rep.subtorus_dim == 1); // killed by the character (3, -2)
}

TEST_CASE("torus validation rejects malformed groups") {
    CHECK_THROWS_AS(real_closure_verdict(torus(2, {})), ConfigError);
    CHECK_THROWS_AS(real_closure_verdict(torus(2, {{Rat(2)}})), ConfigError);
    CHECK_THROWS_AS(real_closure_verdict(torus(1, {{Rat(0)}})), ConfigError);
}

TEST_CASE("fundamental unit of a real quadratic field is discrete") {
    auto k = sqrt2_field();
    WeilSpec s;
    s.field = k;
    s.gens = {elt(k, 1, 1)};
    auto rep = real_closure_verdict(s);
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 1);
    CHECK(rep.ambient_dim == 2);
    CHECK(rep.subtorus_dim == 1); // the unit lies in the norm-one subtorus
}

TEST_CASE("unit and a non-unit of independent logs form a lattice") {
    auto k = sqrt2_field();
    WeilSpec s;
    s.field = k;
    s.gens = {elt(k, 1, 1), elt(k, 3, 1)};
    auto rep = real_closure_verdict(s);
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
    CHECK(rep.generator_rank == 2);
    CHECK(rep.discrete_rank == 2);
}

TEST_CASE("a power relation between field generators is detected exactly") {
    auto k = sqrt2_field();
    WeilSpec s;
    s.field = k;
    s.gens = {elt(k, 1, 1), elt(k, 7, 5)}; // second generator is the cube of the first
    auto rep = real_closure_verdict(s);
    CHECK(rep.generator_rank == 1);
    CHECK(rep.verdict == ClosureVerdict::discrete);
    CHECK(rep.exact);
}

TEST_CASE("three field generators spanning the plane of logs") {
    auto k = sqrt2_field();
    WeilSpec s;
    s.field = k;
    s.gens = {elt(k, 1, 1), elt(k, 2, 0), elt(k, 3, 0)};
    auto rep = real_closure_verdict(s);
    CHECK(rep.generator_rank == 3);
    CHECK(rep.identity_component_dim == 2);
    CHECK(rep.verdict == ClosureVerdict::dense);
    CHECK(!rep.exact); // density rests on the conjectural rank of the log matrix
}

TEST_CASE("norm-one generators fill the norm-one subtorus conjecturally") {
    auto k = sqrt2_field();
    // (3 + sqrt2)/(3 - sqrt2) has norm one but is not a unit
    NfElement x = elt(k, 3, 1) * elt(k, 3, -1).inverse();
    WeilSpec s;
    s.field = k;
    s.gens = {x, elt(k, 1, 1)};
    auto rep = real_closure_verdict(s);
    CHECK(rep.generator_rank == 2);
    CHECK(rep.subtorus_dim == 1);
    CHECK(rep.identity_component_dim == 1);
    CHECK(rep.discrete_rank == 0);
    CHECK(rep.verdict == ClosureVerdict::dense_in_subtorus);
    CHECK(!rep.exact);
}

TEST_CASE("fields with complex places are refused") {
    auto k = std::make_shared<NumberField>(std::vector<Int>{-2, 0, 0, 1}); // x^3 - 2
    WeilSpec s;
    s.field = k;
    s.gens = {NfElement(k, {Rat(1), Rat(1), Rat(0)})};
    CHECK_THROWS_AS(real_closure_verdict(s), UnsupportedInput);
}

TEST_CASE("verdict names") {
    CHECK(to_string(ClosureVerdict::discrete) == "discrete");
    CHECK(to_string(ClosureVerdict::dense_in_subtorus) == "dense_in_subtorus");
    CHECK(to_string(ClosureVerdict::dense) == "dense");
    CHECK(to_string(ClosureVerdict::undecided) == "undecided");
}
