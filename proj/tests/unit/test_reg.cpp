#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/gb.hpp"
#include "schubreg/groth.hpp"
#include "schubreg/reg.hpp"
#include "schubreg/shapes.hpp"

using namespace schubreg;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<long> to_longs(const UniPoly& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_int64());
  return out;
}

bool covexillary(const Permutation& w) { return !oracle::contains_pattern_brute(w, P("3412")); }

}  // namespace

TEST_CASE("Kazhdan-Lusztig polynomials, small cases") {
  for (const auto& w : Permutation::all(3))
    for (const auto& x : Permutation::all(3))
      if (oracle::bruhat_tableau_leq(x, w)) REQUIRE(kl_polynomial(x, w) == UniPoly{1});
  CHECK(kl_polynomial(P("1234"), P("3412")) == UniPoly{1, 1});
  CHECK(kl_polynomial(P("1234"), P("4231")) == UniPoly{1, 1});
  CHECK(kl_polynomial(P("2143"), P("4231")) == UniPoly{1, 1});
  CHECK(kl_polynomial(P("4231"), P("4231")) == UniPoly{1});
  CHECK(kl_polynomial(P("1423576"), P("7314562")).degree() == 2);
  CHECK_THROWS_AS(kl_polynomial(P("3412"), P("1234")), NotBruhatComparable);
}

TEST_CASE("Kazhdan-Lusztig recursion agrees with the R-polynomial oracle") {
  KlTable table;
  for (const auto& w : Permutation::all(4))
    for (const auto& x : Permutation::all(4)) {
      if (!oracle::bruhat_tableau_leq(x, w)) continue;
      const auto p = table.get(x, w);
      REQUIRE(to_longs(p) == oracle::kl_via_r_polynomials(x, w));
      REQUIRE(p == kl_polynomial(x, w));
    }
  auto all = Permutation::all(5);
  std::mt19937 rng(8);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  int compared = 0;
  while (compared < 40) {
    const auto& x = all[pick(rng)];
    const auto& w = all[pick(rng)];
    if (!oracle::bruhat_tableau_leq(x, w)) continue;
    REQUIRE(to_longs(table.get(x, w)) == oracle::kl_via_r_polynomials(x, w));
    ++compared;
  }
  CHECK(table.mu(P("1234"), P("3412")) == Integer(0));
  CHECK(table.mu(P("1324"), P("3412")) == Integer(1));
}

TEST_CASE("regularity reports") {
  const auto both = regularity(P("1423576"), P("7314562"), Method::Both, {false, true, {}});
  CHECK(both.reg == 2);
  CHECK(both.formula_reg == 2);
  CHECK(both.groebner_reg == 2);
  CHECK_FALSE(both.discrepant);
  CHECK(both.dim == 8);
  CHECK(both.height == 10);
  CHECK(both.n_vars == 18);
  CHECK(both.cm_status == CmStatus::Proven);
  CHECK(both.homogeneous_ideal == false);
  CHECK(both.kl_degree == 2);
  REQUIRE(both.H);
  CHECK(*both.H == UniPoly{1, 3, 1});

  const auto f = regularity(Permutation::identity(7), P("7314562"), Method::Formula);
  CHECK(f.reg == 3);
  CHECK_FALSE(f.H);
  CHECK(f.covexillary);

  const auto g = regularity(P("1234"), P("3412"));
  CHECK(g.method == Method::Groebner);
  CHECK(g.reg == 1);
  CHECK(g.cm_status == CmStatus::Conjectural);
  CHECK(*g.H == UniPoly{1, 1});
  CHECK_THROWS_AS(regularity(P("1234"), P("3412"), Method::Formula), FormulaInapplicable);
  CHECK_THROWS_AS(regularity(P("3412"), P("1234")), NotBruhatComparable);

  const auto verified = regularity(P("1234"), P("4231"), Method::Auto, {true, false, {}});
  CHECK(verified.method == Method::Both);
  CHECK(verified.formula_reg == verified.groebner_reg);
}

TEST_CASE("Poincare series") {
  const auto pt = ps_series(P("4231"), P("4231"), 4);
  CHECK(pt.coeffs == std::vector<Integer>{1, 0, 0, 0});
  CHECK(pt.multiplicity == Integer(1));

  const auto v = P("1423576"), w = P("7314562");
  const auto ps = ps_series(v, w, 7);
  const auto cone = tangent_cone(kl_generators(v, w));
  const auto gb = buchberger(cone.ideal, MonomialOrder::grevlex());
  const auto counts = oracle::standard_monomial_counts(gb.leading_monomials(), cone.ideal.ring->num_vars(), 6);
  REQUIRE(ps.coeffs.size() == 7);
  for (size_t k = 0; k < 7; ++k) CHECK(ps.coeffs[k] == Integer(counts[k]));
  CHECK(ps.multiplicity == Integer(5));
  CHECK(ps.dim == 8);
}

TEST_CASE("Grothendieck specialization reproduces the Poincare series") {
  const auto golden = finalps_check(P("1423576"), P("7314562"));
  CHECK(golden.holds);
  CHECK(golden.exponent == 10);
  const auto pt = finalps_check(P("4231"), P("4231"));
  CHECK(pt.holds);
  CHECK(pt.G == UniPoly::one_minus_q_pow(6 - 5));
  for (const auto& w : Permutation::all(4)) {
    if (!covexillary(w)) continue;
    for (const auto& v : Permutation::all(4))
      if (oracle::bruhat_tableau_leq(v, w)) REQUIRE(finalps_check(v, w).holds);
  }
}

// Top degree survives x -> 1 - q for every w0*kappa reached from S5.
TEST_CASE("no top-degree cancellation in the specialization, covexillary S5") {
  size_t checked = 0;
  for (const auto& w : Permutation::all(5)) {
    if (!covexillary(w)) continue;
    for (const auto& v : Permutation::all(5)) {
      if (!oracle::bruhat_tableau_leq(v, w)) continue;
      const auto u = w0_compose(kappa(v, w).kappa);
      INFO(v.to_string() << " <= " << w.to_string());
      REQUIRE(groth_spec_1mq(u).degree() == groth_degree(u));
      ++checked;
    }
  }
  CHECK(checked == 2967);
}

TEST_CASE("formula, Groebner and KL degrees agree on covexillary S4") {
  KlTable table;
  for (const auto& w : Permutation::all(4)) {
    if (!covexillary(w)) continue;
    for (const auto& v : Permutation::all(4)) {
      if (!oracle::bruhat_tableau_leq(v, w)) continue;
      const int formula = regularity_formula(v, w);
      REQUIRE(formula == hilbert_data(v, w).H.degree());
      REQUIRE(formula == table.get(v, w).degree());
    }
  }
}

TEST_CASE("conjecture checks") {
  CHECK(check_h_nonnegative(UniPoly{1, 2}).status == FlagStatus::Pass);
  CHECK(check_h_nonnegative(UniPoly{1, -1, 1}).status == FlagStatus::Fail);
  CHECK(check_degree_bound(P("1234"), P("3412"), UniPoly{1, 1}).status == FlagStatus::Pass);
  CHECK(check_degree_bound(P("1234"), P("3412"), UniPoly{1, 1, 1}).status == FlagStatus::Fail);
  CHECK(check_semicontinuity(UniPoly{1, 3, 1}, UniPoly{1, 2}).status == FlagStatus::Pass);
  CHECK(check_semicontinuity(UniPoly{1, 1}, UniPoly{1, 2}).status == FlagStatus::Fail);

  const auto golden = check_conjectures(P("1423576"), P("7314562"));
  for (const auto& [name, flag] : golden) CHECK_MESSAGE(flag.status == FlagStatus::Pass, name << ": " << flag.detail);
  CHECK(golden.count(kFlagKlDegree) == 1);
  CHECK(golden.count(kFlagSemicontinuity) == 1);

  const auto pt = check_conjectures(P("4231"), P("4231"));
  for (const auto& [name, flag] : pt) CHECK(flag.status != FlagStatus::Fail);

  ConjectureInputs with_u;
  with_u.u = P("1234");
  const auto flags = check_conjectures(P("1324"), P("3412"), with_u);
  CHECK(flags.at(kFlagSemicontinuity).status == FlagStatus::Pass);
  CHECK(flags.at(kFlagNonnegative).status == FlagStatus::Pass);
}

TEST_CASE("Bruhat pair enumeration") {
  size_t comparable = 0, covex = 0;
  for (const auto& w : Permutation::all(4))
    for (const auto& v : Permutation::all(4))
      if (oracle::bruhat_tableau_leq(v, w)) {
        ++comparable;
        covex += covexillary(w);
      }
  const auto pairs = bruhat_pairs(4, ScanRestrict::All);
  CHECK(pairs.size() == comparable);
  CHECK(bruhat_pairs(4, ScanRestrict::CovexillaryOnly).size() == covex);
  for (size_t k = 1; k < pairs.size(); ++k) {
    const int a = oracle::inversions(pairs[k - 1].second) - oracle::inversions(pairs[k - 1].first);
    const int b = oracle::inversions(pairs[k].second) - oracle::inversions(pairs[k].first);
    REQUIRE(a <= b);
  }
}

TEST_CASE("maxReg scans for small n") {
  ScanOptions all;
  all.checks = {kFlagNonnegative, kFlagDegreeBound, kFlagSemicontinuity, kFlagKlDegree};
  const auto s4 = max_reg_scan(4, all);
  CHECK(s4.max_reg == 1);
  CHECK_FALSE(s4.partial);
  CHECK(s4.failures.empty());
  for (const auto& [name, c] : s4.check_counts) {
    CHECK_MESSAGE(c.second == 0, name);
    CHECK(c.first > 0);
  }
  ScanOptions covex;
  covex.restrict = ScanRestrict::CovexillaryOnly;
  const auto c5 = max_reg_scan(5, covex);
  CHECK(c5.groebner_calls == 0);
  CHECK(c5.max_reg == 2);

  ScanOptions resume;
  resume.known = s4.records;
  const auto again = max_reg_scan(4, resume);
  CHECK(again.reused == s4.records.size());
  CHECK(again.groebner_calls == 0);
  CHECK(again.max_reg == 1);
  CHECK(again.maximizers == s4.maximizers);
  CHECK_THROWS_AS(max_reg_scan(1, ScanOptions{}), InvalidArgument);
}
