// Acceptance run: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
// Each criterion has a wall-clock limit; exceeding it fails the criterion.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "schubreg/cli.hpp"
#include "schubreg/gb.hpp"
#include "schubreg/groth.hpp"
#include "schubreg/reg.hpp"
#include "schubreg/shapes.hpp"

using namespace schubreg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Permutation P(const char* s) { return Permutation::parse(s); }

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "schubreg");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::vector<std::pair<Permutation, Permutation>> covexillary_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& w : Permutation::all(n)) {
    if (oracle::contains_pattern_brute(w, P("3412"))) continue;
    for (const auto& v : Permutation::all(n))
      if (oracle::bruhat_tableau_leq(v, w)) out.emplace_back(v, w);
  }
  return out;
}

std::string pair_string(const Permutation& v, const Permutation& w) { return v.to_string() + "<" + w.to_string(); }

Outcome golden_pair() {
  auto r = cli({"analyze", "--v", "1423576", "--w", "7314562", "--method", "both", "--json"});
  if (r.code != kExitOk) return {false, "exit code " + std::to_string(r.code)};
  auto j = nlohmann::json::parse(r.out);
  const bool ok = j["reg"] == 2 && j["formula_reg"] == 2 && j["groebner_reg"] == 2 && j["discrepant"] == false;
  return {ok, "reg " + j["reg"].dump() + ", formula " + j["formula_reg"].dump() + ", deg H " + j["groebner_reg"].dump()};
}

Outcome identity_pair() {
  auto r = cli({"analyze", "--v", "1234567", "--w", "7314562", "--method", "formula", "--json"});
  if (r.code != kExitOk) return {false, "exit code " + std::to_string(r.code)};
  auto j = nlohmann::json::parse(r.out);
  return {j["reg"] == 3, "reg " + j["reg"].dump()};
}

Outcome kappa_and_rrw() {
  const auto k = kappa(P("1423576"), P("7314562")).kappa;
  const auto rows = rrw_filling(P("1423576"), P("7314562")).rows_bottom_up();
  const std::vector<std::vector<int>> expected{{0, 0, 1, 1}, {0, 0, 1}, {0, 0}, {0}};
  std::ostringstream d;
  d << "kappa " << k.to_string() << ", RRW rows top-first ";
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    d << '(';
    for (size_t c = 0; c < it->size(); ++c) d << (c ? "," : "") << (*it)[c];
    d << ')';
  }
  return {k == P("3472561") && rows == expected, d.str()};
}

Outcome h_of_6734512() {
  const auto r = regularity(Permutation::identity(7), P("6734512"), Method::Groebner);
  const bool ok = r.H && *r.H == UniPoly{1, 4, 9, 9, 4, 1} && r.cm_status == CmStatus::Conjectural;
  return {ok, "H = " + (r.H ? r.H->to_string() : std::string("-"))};
}

Outcome max_reg(int n, int expected) {
  ScanOptions opts;
  const auto res = max_reg_scan(n, opts);
  const bool ok = !res.partial && res.max_reg == expected;
  return {ok, "maxReg(" + std::to_string(n) + ") = " + (res.max_reg ? std::to_string(*res.max_reg) : "none") + " over " +
                  std::to_string(res.records.size()) + " pairs"};
}

Outcome dual_path(int n) {
  size_t checked = 0;
  for (const auto& [v, w] : covexillary_pairs(n)) {
    const int formula = regularity_formula(v, w);
    const int degH = hilbert_data(v, w).H.degree();
    if (formula != degH)
      return {false, pair_string(v, w) + ": formula " + std::to_string(formula) + " vs deg H " + std::to_string(degH)};
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " covexillary pairs in S" + std::to_string(n)};
}

Outcome finalps() {
  size_t checked = 0;
  for (const auto& [v, w] : covexillary_pairs(4)) {
    const auto c = finalps_check(v, w);
    if (!c.holds) return {false, pair_string(v, w) + ": G = " + c.G.to_string() + " vs " + c.rhs.to_string()};
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " covexillary pairs in S4"};
}

Outcome vexillary_formula() {
  size_t checked = 0;
  for (const auto& u : Permutation::all(5)) {
    if (oracle::contains_pattern_brute(u, P("2143"))) continue;
    const int f = vexillary_degree_formula(u), d = groth_degree(u);
    if (f != d) return {false, u.to_string() + ": formula " + std::to_string(f) + " vs degree " + std::to_string(d)};
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " vexillary permutations in S5"};
}

Outcome staircase() {
  std::ostringstream d;
  bool ok = true;
  for (int j = 2; j <= 5; ++j) {
    std::vector<int> code;
    for (int k = 1; k <= j; ++k) code.push_back(k);
    code.resize(static_cast<size_t>(3 * j - 1), 0);
    const auto w = oracle::from_row_code(code);
    const auto start = std::chrono::steady_clock::now();
    const int r = regularity_formula(Permutation::identity(w.size()), w);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && r == j * (j - 1) / 2 && secs < 1.0;
    d << (j > 2 ? ", " : "") << "j=" << j << ":" << r;
  }
  return {ok, d.str()};
}

Outcome conjecture_suite() {
  auto r = cli({"scan", "--n", "4", "--checks", "all"});
  std::smatch m;
  bool ok = r.code == kExitOk;
  size_t total = 0;
  for (const char* name : {kFlagNonnegative, kFlagDegreeBound, kFlagSemicontinuity}) {
    std::regex re(std::string("check ") + name + " pass ([0-9]+) fail ([0-9]+)");
    if (!std::regex_search(r.out, m, re)) return {false, std::string("missing ") + name};
    ok = ok && m[2] == "0";
    total += std::stoul(m[1]);
  }
  return {ok, std::to_string(total) + " checks passed over S4, exit " + std::to_string(r.code)};
}

Outcome kernel_oracles() {
  std::mt19937 rng(1729);
  int ideals = 0, reverse_checked = 0;
  for (; ideals < 120; ++ideals) {
    const int n = 1 + ideals % 4;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
    auto ring = make_ring(names);
    Ideal I{ring, {}, IdealProvenance::Adhoc};
    for (int k = 0; k <= ideals % 3; ++k) I.generators.push_back(oracle::random_poly(ring, rng, 3, 3, true));
    const auto cone = tangent_cone(I);
    const auto gb = buchberger(cone.ideal, MonomialOrder::grevlex());
    const auto forms = oracle::macaulay_lowest_forms(I.generators, 6);
    for (const auto& f : forms)
      if (!normal_form(f, gb).is_zero()) return {false, "lowest form " + f.to_string() + " missing from the cone"};
    for (size_t k = 0; k < cone.ideal.generators.size(); ++k) {
      if (cone.witness_degrees[k] > 6) continue;
      if (!oracle::in_linear_span(cone.ideal.generators[k], forms))
        return {false, "cone generator " + cone.ideal.generators[k].to_string() + " not in the truncated span"};
      ++reverse_checked;
    }
  }
  int monomial_ideals = 0;
  for (; monomial_ideals < 120; ++monomial_ideals) {
    const int n = 1 + monomial_ideals % 5;
    const auto gens = oracle::random_monomials(rng, n, 1 + monomial_ideals % 6, 5);
    const auto K = hilbert_numerator(gens);
    std::vector<long> k;
    for (const auto& c : K.coeffs()) k.push_back(c.to_int64());
    if (oracle::series_from_numerator(k, n, 10) != oracle::standard_monomial_counts(gens, n, 10))
      return {false, "Hilbert numerator mismatch on monomial ideal #" + std::to_string(monomial_ideals)};
  }
  return {true, std::to_string(ideals) + " tangent cones (" + std::to_string(reverse_checked) +
                    " generators traced back), " + std::to_string(monomial_ideals) + " monomial ideals"};
}

Outcome kl_degree() {
  KlTable table;
  size_t checked = 0;
  for (const auto& [v, w] : covexillary_pairs(4)) {
    const int deg = table.get(v, w).degree(), f = regularity_formula(v, w);
    if (deg != f) return {false, pair_string(v, w) + ": deg P " + std::to_string(deg) + " vs " + std::to_string(f)};
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " covexillary pairs in S4"};
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  struct Criterion {
    const char* id;
    const char* what;
    double limit_s;
    bool slow;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"C1", "golden pair (1423576, 7314562), both methods", 300, false, golden_pair},
      {"C2", "(1234567, 7314562) by formula", 1, false, identity_pair},
      {"C3", "kappa and RRW tableau of the running example", 1, false, kappa_and_rrw},
      {"C4", "H(id, 6734512) by Groebner", 3600, true, h_of_6734512},
      {"C5a", "maxReg(4) = 1", 60, false, [] { return max_reg(4, 1); }},
      {"C5b", "maxReg(5) = 2", 1800, false, [] { return max_reg(5, 2); }},
      {"C5c", "maxReg(6) = 3", 3600, true, [] { return max_reg(6, 3); }},
      {"C6a", "formula = deg H on covexillary S4", 600, false, [] { return dual_path(4); }},
      {"C6b", "formula = deg H on covexillary S5", 3600, true, [] { return dual_path(5); }},
      {"C7", "Grothendieck specialization identity on covexillary S4", 600, false, finalps},
      {"C8", "vexillary degree formula on S5", 300, false, vexillary_formula},
      {"C9", "staircase family j = 2..5", 4, false, staircase},
      {"C10", "conjecture suite on S4", 600, false, conjecture_suite},
      {"C11", "kernel oracles (tangent cone, Hilbert numerator)", 300, false, kernel_oracles},
      {"C12", "deg P = formula on covexillary S4", 600, false, kl_degree},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (quick && c.slow) {
      std::cout << "[SKIP] " << c.id << ' ' << c.what << " (slow tier)\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.what << ": " << o.detail << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n"
              << std::flush;
  }
  return failed == 0 ? 0 : 1;
}
