#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/perm.hpp"

using namespace schubreg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("parse accepts compact and separated forms") {
  CHECK(P("3472561") == Permutation({3, 4, 7, 2, 5, 6, 1}));
  CHECK(P("3,4,7,2,5,6,1") == P("3472561"));
  CHECK_THROWS_AS(P("1224"), InvalidArgument);
  CHECK_THROWS_AS(P("0123"), InvalidArgument);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidArgument);
}

TEST_CASE("length counts inversions") {
  CHECK(length(P("1423576")) == 3);
  CHECK(length(P("7314562")) == 11);
  CHECK(length(P("3472561")) == 11);
  CHECK(length(Permutation::longest(7)) == 21);
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : Permutation::all(n)) REQUIRE(length(w) == oracle::inversions(w));
}

TEST_CASE("rank matrix counts large values in a prefix") {
  const auto w = P("7314562");
  CHECK(sw_rank(w, 6, 5) == 1);
  CHECK(sw_rank(w, 3, 3) == 2);
  RankMatrix r(w);
  for (const auto& u : Permutation::all(5)) {
    RankMatrix ru(u);
    for (int a = 1; a <= 5; ++a)
      for (int j = 1; j <= 5; ++j) {
        int direct = 0;
        for (int h = 1; h <= j; ++h) direct += u(h) >= a;
        REQUIRE(ru.at(a, j) == direct);
        REQUIRE(ru.bottom_up(5 - a + 1, j) == direct);
      }
  }
  CHECK(r.bottom_up(2, 5) == sw_rank(w, 6, 5));
}

TEST_CASE("inverse, simple transpositions, w0 composition") {
  const auto w = P("3472561");
  CHECK(w.inverse() == P("7412563"));
  CHECK(w.compose(w.inverse()) == Permutation::identity(7));
  CHECK(w.times_simple(1) == P("4372561"));
  CHECK(w.simple_times(1) == P("3471562"));
  CHECK(w0_compose(w) == P("5416327"));
  for (const auto& u : Permutation::all(5)) REQUIRE(w0_compose(w0_compose(u)) == u);
}

TEST_CASE("bruhat order agrees with tableau criterion and cover closure") {
  for (int n = 1; n <= 4; ++n) {
    auto all = Permutation::all(n);
    for (const auto& v : all)
      for (const auto& w : all) {
        const bool expected = oracle::bruhat_tableau_leq(v, w);
        REQUIRE(bruhat_leq(v, w) == expected);
        REQUIRE(oracle::bruhat_by_covers(v, w) == expected);
      }
  }
  auto all5 = Permutation::all(5);
  for (const auto& v : all5)
    for (const auto& w : all5) REQUIRE(bruhat_leq(v, w) == oracle::bruhat_tableau_leq(v, w));
}

TEST_CASE("bruhat intervals and lower covers") {
  CHECK(bruhat_interval(Permutation::identity(4), Permutation::longest(4)).size() == 24);
  CHECK(bruhat_interval(Permutation::identity(4), P("2143")).size() == 4);
  CHECK_THROWS_AS(bruhat_interval(P("2143"), P("1234")), NotBruhatComparable);
  auto all = Permutation::all(5);
  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    auto v = all[pick(rng)], w = all[pick(rng)];
    if (!oracle::bruhat_tableau_leq(v, w)) continue;
    auto iv = bruhat_interval(v, w);
    size_t count = static_cast<size_t>(std::count_if(all.begin(), all.end(), [&](const Permutation& u) {
      return oracle::bruhat_tableau_leq(v, u) && oracle::bruhat_tableau_leq(u, w);
    }));
    REQUIRE(iv.size() == count);
  }
  for (const auto& w : all) {
    auto covers = bruhat_lower_covers(w);
    size_t expected = 0;
    for (const auto& u : all)
      if (oracle::bruhat_tableau_leq(u, w) && oracle::inversions(u) + 1 == oracle::inversions(w)) ++expected;
    REQUIRE(covers.size() == expected);
    for (const auto& u : covers) REQUIRE(length(u) + 1 == length(w));
  }
}

TEST_CASE("pattern containment matches brute force") {
  const std::vector<Permutation> patterns{P("3412"), P("2143"), P("1324"), P("321")};
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : Permutation::all(n))
      for (const auto& p : patterns) REQUIRE(contains_pattern(w, p) == oracle::contains_pattern_brute(w, p));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> word{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(word.begin(), word.end(), rng);
    Permutation w(word);
    for (const auto& p : patterns) REQUIRE(contains_pattern(w, p) == oracle::contains_pattern_brute(w, p));
    REQUIRE(is_covexillary(w) == !oracle::contains_pattern_brute(w, P("3412")));
    REQUIRE(is_vexillary(w) == !oracle::contains_pattern_brute(w, P("2143")));
  }
  CHECK(is_covexillary(P("7314562")));
  CHECK(is_covexillary(P("3472561")));
  CHECK_FALSE(is_covexillary(P("3412")));
  CHECK_FALSE(is_covexillary(P("6734512")));
}

TEST_CASE("diagram, essential set, code and shape of 3472561") {
  const auto w = P("3472561");
  const auto d = diagram(w);
  const std::vector<Box> boxes{{4, 1}, {5, 1}, {5, 2}, {5, 4}, {6, 1}, {6, 2}, {6, 4}, {6, 5}, {7, 1}, {7, 2}};
  CHECK(d.boxes == boxes);
  const std::vector<Box> ess{{4, 1}, {5, 2}, {5, 4}, {6, 5}};
  CHECK(essential_set(w) == ess);
  const auto cl = code_and_lambda(w);
  CHECK(cl.code == std::vector<int>{2, 4, 3, 1, 0, 0, 0});
  CHECK(cl.lambda.parts == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("diagram size is the number of non-inversions") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : Permutation::all(n)) {
      const auto d = diagram(w);
      REQUIRE(static_cast<int>(d.size()) == n * (n - 1) / 2 - oracle::inversions(w));
      REQUIRE(code_and_lambda(w).lambda.size() == static_cast<int>(d.size()));
      for (const auto& b : essential_set(w)) REQUIRE(d.contains(b));
    }
  CHECK(diagram(Permutation::longest(5)).size() == 0);
  CHECK(diagram(Permutation::identity(5)).size() == 10);
}

TEST_CASE("row code reconstruction inverts the diagram code") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : Permutation::all(n)) REQUIRE(oracle::from_row_code(code_and_lambda(w).code) == w);
}
