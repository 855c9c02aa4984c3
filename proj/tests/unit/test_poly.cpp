#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/poly.hpp"

using namespace schubreg;

namespace {

MultiPoly X(const RingPtr& r, const char* s) { return MultiPoly::parse(r, s); }

// random polynomial small enough that products stay cheap
MultiPoly rnd(const RingPtr& r, std::mt19937& rng) { return oracle::random_poly(r, rng, 4, 3, false); }

}  // namespace

TEST_CASE("integers promote to arbitrary precision") {
  Integer a(int64_t{1} << 62);
  Integer b = a * a * a;
  CHECK_FALSE(b.fits_int64());
  CHECK(divexact(b, a) == a * a);
  CHECK(b - b == Integer(0));
  CHECK((b - b).fits_int64());
  CHECK(Integer::parse(b.to_string()) == b);
  CHECK(Integer::parse("-12") == Integer(-12));
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
  Integer m(std::numeric_limits<int64_t>::min());
  CHECK((-m).to_string() == "9223372036854775808");
  CHECK(m.abs() > Integer(0));
}

TEST_CASE("multivariate arithmetic") {
  auto r = make_x_ring(3);
  CHECK((X(r, "x1 + x2") * X(r, "x1 - x2")) == X(r, "x1^2 - x2^2"));
  auto f = X(r, "3*x1*x2^2 - x3 + 7");
  CHECK((f + (-f)).is_zero());
  CHECK(f.degree() == 3);
  CHECK(f.min_degree() == 0);
  CHECK(f.content() == Integer(1));
  CHECK(X(r, "4*x1 - 6*x2").primitive_part() == X(r, "2*x1 - 3*x2"));
  CHECK(X(r, "x1 + x2 - x1*x2").lowest_degree_form() == X(r, "x1 + x2"));
  CHECK(X(r, "x1 + x2 - x1*x2").homogeneous_component(2) == X(r, "-x1*x2"));
  std::vector<Integer> pt{Integer(2), Integer(3), Integer(5)};
  CHECK(f.evaluate(pt) == Integer(3 * 2 * 9 - 5 + 7));
}

TEST_CASE("univariate arithmetic and division") {
  CHECK(UniPoly{1, 1} * UniPoly{1, -1} == UniPoly{1, 0, -1});
  CHECK(exact_divide(UniPoly{1, 0, -1}, UniPoly{1, -1}) == UniPoly{1, 1});
  const UniPoly k{1, -3, 2, 5};
  CHECK(exact_divide(k, UniPoly::one_minus_q_pow(0)) == k);
  const UniPoly h{1, 4, 9, 9, 4, 1};
  CHECK(exact_divide(h * UniPoly::one_minus_q_pow(10), UniPoly::one_minus_q_pow(10)) == h);
  CHECK_THROWS_AS(exact_divide(UniPoly{1, 1}, UniPoly{1, -1}), InternalError);
  CHECK(one_minus_q_multiplicity(h * UniPoly::one_minus_q_pow(4)) == 4);
  CHECK(one_minus_q_multiplicity(h) == 0);
  CHECK(UniPoly().degree() == kMinusInfinity);
  CHECK(UniPoly{1, -1}.to_string() == "1 - q");
  CHECK(h.evaluate(Integer(1)) == Integer(28));
  const auto s = UniPoly{1, 1}.series_over_one_minus_q(1, 5);
  CHECK(s == std::vector<Integer>{1, 2, 2, 2, 2});
}

TEST_CASE("isobaric divided differences") {
  auto r = make_x_ring(3);
  CHECK(divided_difference_pi(X(r, "x1^2*x2"), 1) == X(r, "x1*x2"));
  CHECK(divided_difference_pi(X(r, "x1^2*x2"), 2) == X(r, "x1^2"));
  CHECK(divided_difference_pi(X(r, "x1*x2"), 1) == X(r, "x1*x2"));
  CHECK(divided_difference_pi(divided_difference_pi(X(r, "x1^2*x2"), 2), 1) == X(r, "x1 + x2 - x1*x2"));
  CHECK_THROWS_AS(divided_difference_pi(X(r, "x1"), 3), InvalidArgument);
}

TEST_CASE("divided difference identities on random inputs") {
  auto r = make_x_ring(4);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = rnd(r, rng);
    for (int i = 1; i <= 3; ++i) {
      auto p = divided_difference_pi(f, i);
      REQUIRE(divided_difference_pi(p, i) == p);
      // the image is symmetric in x_i, x_{i+1}
      REQUIRE(p.swap_variables(i - 1, i) == p);
    }
    REQUIRE(divided_difference_pi(divided_difference_pi(f, 1), 3) ==
            divided_difference_pi(divided_difference_pi(f, 3), 1));
    for (int i = 1; i <= 2; ++i) {
      auto lhs = divided_difference_pi(divided_difference_pi(divided_difference_pi(f, i), i + 1), i);
      auto rhs = divided_difference_pi(divided_difference_pi(divided_difference_pi(f, i + 1), i), i + 1);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = make_x_ring(3);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = rnd(r, rng), b = rnd(r, rng), c = rnd(r, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("substituting 1 - q for every variable") {
  auto r = make_x_ring(3);
  CHECK(substitute_all_1mq(X(r, "x1 + x2 - x1*x2")) == UniPoly{1, 0, -1});
  CHECK(substitute_all_1mq(X(r, "1")) == UniPoly{1});
  CHECK(substitute_all_1mq(X(r, "x1^2*x2")) == UniPoly::one_minus_q_pow(3));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = rnd(r, rng), g = rnd(r, rng);
    REQUIRE(substitute_all_1mq(f * g) == substitute_all_1mq(f) * substitute_all_1mq(g));
  }
}

TEST_CASE("degree of the inhomogeneous cubic generator") {
  auto r = make_ring({"z_5_1", "z_5_3", "z_4_1", "z_3_1", "z_3_2", "z_3_3"});
  auto f = X(r, "z_5_1*z_3_3 + z_5_3*z_4_1*z_3_2 - z_5_3*z_3_1");
  CHECK(f.degree() == 3);
  CHECK(f.min_degree() == 2);
  CHECK(f.lowest_degree_form() == X(r, "z_5_1*z_3_3 - z_5_3*z_3_1"));
  CHECK_FALSE(f.is_homogeneous());
}

TEST_CASE("printing and parsing round-trip") {
  auto r = make_ring({"z_5_1", "z_3_3", "z_5_3", "z_3_1"});
  auto f = X(r, "z_5_1*z_3_3 - z_5_3*z_3_1");
  CHECK(MultiPoly::parse(r, f.to_string()) == f);
  CHECK_THROWS_AS(X(r, "z_9_9 + 1"), InvalidArgument);
  CHECK_THROWS_AS(X(r, "z_5_1 +"), InvalidArgument);
  auto rx = make_x_ring(4);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_poly(rx, rng, 5, 4, false);
    REQUIRE(MultiPoly::parse(rx, g.to_string()) == g);
  }
}
