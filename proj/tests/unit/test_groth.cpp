#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/groth.hpp"

using namespace schubreg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
MultiPoly X(int n, const char* s) { return MultiPoly::parse(make_x_ring(n), s); }
}  // namespace

TEST_CASE("small Grothendieck polynomials") {
  CHECK(grothendieck(P("21")) == X(2, "x1"));
  CHECK(grothendieck(P("123")) == X(3, "1"));
  CHECK(grothendieck(P("132")) == X(3, "x1 + x2 - x1*x2"));
  CHECK(grothendieck(P("321")) == X(3, "x1^2*x2"));
  CHECK(grothendieck(P("231")) == X(3, "x1*x2"));
  CHECK(grothendieck(P("312")) == X(3, "x1^2"));
  CHECK(grothendieck(P("213")) == X(3, "x1"));
}

TEST_CASE("degrees and specializations") {
  CHECK(groth_degree(P("132")) == 2);
  CHECK(groth_min_degree(P("132")) == 1);
  for (int n = 2; n <= 5; ++n) CHECK(groth_degree(Permutation::longest(n)) == n * (n - 1) / 2);
  CHECK(groth_degree(P("5416327")) == 12);
  CHECK(groth_spec_1mq(P("1234")) == UniPoly{1});
  CHECK(groth_spec_1mq(P("132")) == UniPoly{1, 0, -1});
  CHECK(groth_spec_1mq(P("321")) == UniPoly::one_minus_q_pow(3));
}

TEST_CASE("vexillary degree formula examples") {
  CHECK(vexillary_degree_formula(P("5416327")) == 12);
  CHECK(vexillary_degree_formula(Permutation::longest(6)) == 15);
  CHECK(vexillary_degree_formula(Permutation::identity(6)) == 0);
  CHECK_THROWS_AS(vexillary_degree_formula(P("2143")), InvalidArgument);
}

TEST_CASE("descent chains from w0 agree") {
  for (const auto& u : Permutation::all(5))
    REQUIRE(grothendieck_along_chain(u, AscentChoice::First) == grothendieck_along_chain(u, AscentChoice::Last));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> word{1, 2, 3, 4, 5, 6};
    std::shuffle(word.begin(), word.end(), rng);
    Permutation u(word);
    REQUIRE(grothendieck_along_chain(u, AscentChoice::First) == grothendieck_along_chain(u, AscentChoice::Last));
  }
}

TEST_CASE("the lowest form has degree l(u)") {
  for (const auto& u : Permutation::all(4)) REQUIRE(groth_min_degree(u) == oracle::inversions(u));
}

TEST_CASE("cached table matches direct computation") {
  GrothendieckTable table(4);
  for (const auto& u : Permutation::all(4)) REQUIRE(table.get(u) == grothendieck(u));
  CHECK(table.cached() >= 24);
  for (const auto& u : Permutation::all(4)) REQUIRE(table.get(u) == grothendieck(u));
}

TEST_CASE("vexillary degree formula over S5") {
  for (const auto& u : Permutation::all(5)) {
    if (oracle::contains_pattern_brute(u, P("2143"))) continue;
    REQUIRE(vexillary_degree_formula(u) == groth_degree(u));
  }
}
