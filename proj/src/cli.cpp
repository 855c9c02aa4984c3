#include "schubreg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/groth.hpp"
#include "schubreg/ideal.hpp"
#include "schubreg/json_io.hpp"
#include "schubreg/reg.hpp"
#include "schubreg/shapes.hpp"

namespace schubreg {

namespace {

// A usage error tied to one flag.
struct FlagError : Error {
  FlagError(const std::string& flag, const std::string& what) : Error(flag + ": " + what) {}
};

Permutation parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const InvalidArgument& e) {
    throw FlagError(flag, e.what());
  }
}

int64_t default_budget_ms() {
  const char* env = std::getenv("SCHUBREG_BUDGET_MS");
  if (!env || !*env) return 0;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    throw FlagError("SCHUBREG_BUDGET_MS", std::string("not an integer: ") + env);
  }
}

std::string join_coeffs(const std::vector<Integer>& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s;
}

std::string repro(const Permutation& v, const Permutation& w) {
  return "schubreg verify --v " + v.to_string() + " --w " + w.to_string();
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string v, w, method = "auto";
  bool json = false, verify = false, kl = false;
  int ps_order = -1;
  int64_t budget_ms = -1;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Permutation v = parse_flag("--v", a.v), w = parse_flag("--w", a.w);
  if (v.size() != w.size()) throw FlagError("--w", "size differs from --v");
  Method method;
  try {
    method = parse_method(a.method);
  } catch (const InvalidArgument& e) {
    throw FlagError("--method", e.what());
  }
  if (!bruhat_leq(v, w))
    throw FlagError("--v/--w", v.to_string() + " and " + w.to_string() +
                                   " are not Bruhat-comparable in the required direction (need v <= w)");
  if ((method == Method::Formula || method == Method::Both) && !is_covexillary(w))
    throw FlagError("--method", "the combinatorial rule needs covexillary w; " + w.to_string() + " contains 3412");

  RegularityOptions opts;
  opts.verify = a.verify;
  opts.with_kl = a.kl;
  opts.budget.max_ms = a.budget_ms >= 0 ? a.budget_ms : default_budget_ms();
  RegularityReport r = regularity(v, w, method, opts);
  std::optional<PsSeries> ps;
  if (a.ps_order >= 0) ps = ps_series(v, w, a.ps_order, opts.budget);

  if (a.json) {
    auto j = report_to_json(r);
    if (ps) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : ps->coeffs) arr.push_back(integer_to_json(c));
      j["ps_series"] = arr;
      j["multiplicity"] = integer_to_json(ps->multiplicity);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "v            " << r.v.to_string() << '\n';
    out << "w            " << r.w.to_string() << '\n';
    out << "method       " << to_string(r.method) << '\n';
    out << "reg          " << (r.reg ? std::to_string(*r.reg) : "-") << '\n';
    out << "cm_status    " << to_string(r.cm_status) << '\n';
    if (r.formula_reg) out << "formula      " << *r.formula_reg << '\n';
    if (r.groebner_reg) out << "deg H        " << *r.groebner_reg << '\n';
    if (r.H) out << "H            " << r.H->to_string() << '\n';
    out << "dim          " << r.dim << '\n';
    out << "height       " << r.height << '\n';
    out << "n_vars       " << r.n_vars << '\n';
    out << "covexillary  " << (r.covexillary ? "yes" : "no") << '\n';
    if (r.homogeneous_ideal) out << "homogeneous  " << (*r.homogeneous_ideal ? "yes" : "no") << '\n';
    if (r.kl_degree) out << "kl_degree    " << *r.kl_degree << '\n';
    if (ps) {
      out << "ps_series    " << join_coeffs(ps->coeffs) << '\n';
      out << "multiplicity " << ps->multiplicity.to_string() << '\n';
    }
    if (r.formula_reg) {
      KappaData kd = kappa(v, w);
      out << "kappa        " << kd.kappa.to_string() << '\n';
      out << "RRW tableau (top row first):\n" << format_tableau(rrw_filling(v, w));
    }
    for (const auto& [name, f] : r.conjecture_flags)
      out << "check " << name << ": " << to_string(f.status) << (f.detail.empty() ? "" : " (" + f.detail + ")") << '\n';
    if (r.discrepant) out << "DISCREPANT: formula and Groebner values disagree\n";
  }
  return r.discrepant ? kExitDiscrepancy : kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  int n = 0;
  bool covexillary_only = false;
  std::string checks;
  std::string cache;
  int64_t budget_ms = -1;
  int threads = 1;
};

std::vector<ScanRecord> load_cache(const std::string& path, std::ostream& err) {
  std::vector<ScanRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_jsonl(line));
    } catch (const Error& e) {
      err << "warning: " << path << ":" << lineno << ": skipping corrupt cache line (" << e.what() << ")\n";
    }
  }
  return records;
}

int scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 2 || a.n > 8) throw FlagError("--n", "must satisfy 2 <= n <= 8");
  if (a.threads < 1) throw FlagError("--threads", "must be positive");
  ScanOptions opts;
  opts.restrict = a.covexillary_only ? ScanRestrict::CovexillaryOnly : ScanRestrict::All;
  opts.budget_ms = a.budget_ms >= 0 ? a.budget_ms : default_budget_ms();
  opts.threads = a.threads;
  if (!a.checks.empty()) {
    std::stringstream ss(a.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "all") {
        opts.checks = {kFlagNonnegative, kFlagDegreeBound, kFlagSemicontinuity, kFlagKlDegree};
        continue;
      }
      std::replace(item.begin(), item.end(), '-', '_');
      if (item != kFlagNonnegative && item != kFlagDegreeBound && item != kFlagSemicontinuity && item != kFlagKlDegree)
        throw FlagError("--checks", "unknown check '" + item + "'");
      opts.checks.push_back(item);
    }
  }
  std::ofstream cache_out;
  if (!a.cache.empty()) {
    opts.known = load_cache(a.cache, err);
    cache_out.open(a.cache, std::ios::app);
    if (!cache_out) throw FlagError("--cache", "cannot open " + a.cache + " for appending");
    opts.on_record = [&](const ScanRecord& r) { cache_out << record_to_jsonl(r) << '\n' << std::flush; };
  }
  ScanResult res = max_reg_scan(a.n, opts);

  out << "n " << res.n << '\n';
  out << "restrict " << (a.covexillary_only ? "covexillary-only" : "all") << '\n';
  out << "pairs " << res.records.size() << '\n';
  if (!res.max_reg) out << "maxReg none\n";
  else if (res.partial) out << "maxReg >= " << *res.max_reg << " (partial: budget exhausted on some pairs)\n";
  else out << "maxReg " << *res.max_reg << '\n';
  out << "maximizers";
  for (const auto& [v, w] : res.maximizers) out << ' ' << v.to_string() << '<' << w.to_string();
  out << '\n';
  for (const auto& [name, c] : res.check_counts) out << "check " << name << " pass " << c.first << " fail " << c.second << '\n';
  err << "computed " << res.records.size() - res.reused << " pairs, reused " << res.reused << " from cache, "
      << res.groebner_calls << " Groebner calls\n";

  bool discrepancy = false;
  for (const auto& f : res.failures) {
    out << "FAIL " << f.check << " v=" << f.v.to_string() << " w=" << f.w.to_string();
    if (f.u) out << " u=" << f.u->to_string();
    out << " " << f.detail << '\n';
    out << "  repro: " << repro(f.v, f.w)
        << (f.u ? " --u " + f.u->to_string() : "") << '\n';
    if (f.check == "dual_path") discrepancy = true;
  }
  if (discrepancy) return kExitDiscrepancy;
  if (!res.failures.empty()) return kExitConjectureFailure;
  return kExitOk;
}

// ---------------------------------------------------------------- groth

int groth(const std::string& text, std::ostream& out) {
  const Permutation u = parse_flag("--u", text);
  MultiPoly g = grothendieck(u);
  out << "G_" << u.to_string() << " = " << g.to_string() << '\n';
  out << "degree " << g.degree() << '\n';
  out << "min_degree " << g.min_degree() << '\n';
  out << "G(1-q) = " << groth_spec_1mq(u).to_string() << '\n';
  if (is_vexillary(u)) out << "vexillary_degree_formula " << vexillary_degree_formula(u) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string v, w, u;
  int n = 0;
  int64_t budget_ms = -1;
};

int verify_pair(const Permutation& v, const Permutation& w, const std::optional<Permutation>& u, const GbBudget& budget,
                std::ostream& out) {
  int code = kExitOk;
  if (is_covexillary(w)) {
    const int formula = regularity_formula(v, w);
    HilbertData hd = hilbert_data(v, w, budget);
    out << "dual_path formula " << formula << " deg H " << hd.H.degree() << ' '
        << (formula == hd.H.degree() ? "agree" : "DISCREPANT") << '\n';
    if (formula != hd.H.degree()) code = kExitDiscrepancy;
    FinalPsCheck fp = finalps_check(v, w, budget);
    out << "finalps " << (fp.holds ? "holds" : "FAILS") << " (exponent " << fp.exponent << ")\n";
    if (!fp.holds) code = kExitDiscrepancy;
  }
  ConjectureInputs in;
  in.u = u;
  in.budget = budget;
  for (const auto& [name, f] : check_conjectures(v, w, in)) {
    out << "check " << name << ": " << to_string(f.status) << (f.detail.empty() ? "" : " (" + f.detail + ")") << '\n';
    if (f.status == FlagStatus::Fail && code == kExitOk) code = kExitConjectureFailure;
  }
  return code;
}

int verify(const VerifyArgs& a, std::ostream& out) {
  GbBudget budget{0, a.budget_ms >= 0 ? a.budget_ms : default_budget_ms()};
  if (a.n > 0) {
    if (a.n < 2 || a.n > 6) throw FlagError("--n", "must satisfy 2 <= n <= 6");
    size_t pairs = 0, bad = 0;
    KlTable kl;
    for (const auto& [v, w] : bruhat_pairs(a.n, ScanRestrict::CovexillaryOnly)) {
      ++pairs;
      const int formula = regularity_formula(v, w);
      FinalPsCheck fp = finalps_check(v, w, budget);
      const int degH = exact_divide(fp.rhs, UniPoly::one_minus_q_pow(fp.exponent)).degree();
      const int degP = kl.get(v, w).degree();
      if (formula != degH || !fp.holds || degP != formula) {
        ++bad;
        out << "MISMATCH v=" << v.to_string() << " w=" << w.to_string() << " formula " << formula << " deg H " << degH
            << " deg P " << degP << " finalps " << (fp.holds ? "holds" : "fails") << '\n';
      }
    }
    out << "covexillary pairs " << pairs << " mismatches " << bad << '\n';
    return bad ? kExitDiscrepancy : kExitOk;
  }
  if (a.v.empty() || a.w.empty()) throw FlagError("--v/--w", "give both --v and --w, or --n");
  const Permutation v = parse_flag("--v", a.v), w = parse_flag("--w", a.w);
  if (!bruhat_leq(v, w))
    throw FlagError("--v/--w", v.to_string() + " and " + w.to_string() +
                                   " are not Bruhat-comparable in the required direction (need v <= w)");
  std::optional<Permutation> u;
  if (!a.u.empty()) u = parse_flag("--u", a.u);
  return verify_pair(v, w, u, budget, out);
}

// ---------------------------------------------------------------- export-m2

std::string m2_name(const std::string& text) {
  static const std::regex var(R"(z_(\d+)_(\d+))");
  return std::regex_replace(text, var, "z_($1,$2)");
}

}  // namespace

std::string m2_script(const Permutation& v, const Permutation& w) {
  Ideal ideal = kl_generators(v, w);
  std::ostringstream os;
  os << "-- Kazhdan-Lusztig chart at e_v of X_w\n";
  os << "-- v = " << v.to_string() << ", w = " << w.to_string() << ", " << kKernelVersion << "\n";
  os << "-- variable z_(i,j) is the tool's z_i_j (row i from the bottom, column j)\n";
  os << "R = QQ[";
  const auto& names = ideal.ring->names();
  for (size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << m2_name(names[i]);
  if (names.empty()) os << "dummy";
  os << "];\n";
  os << "I = ideal(";
  if (ideal.generators.empty()) os << "0_R";
  for (size_t i = 0; i < ideal.generators.size(); ++i)
    os << (i ? ",\n  " : "\n  ") << m2_name(ideal.generators[i].to_string());
  os << ");\n";
  os << "C = tangentCone I;\n";
  os << "M = comodule C;\n";
  os << "F = res M;\n";
  os << "print(\"reg=\" | toString regularity M);\n";
  os << "print(\"dim=\" | toString dim M);\n";
  os << "print(\"codim=\" | toString codim M);\n";
  os << "print(\"hilbert_numerator=\" | toString numerator reduceHilbert hilbertSeries M);\n";
  os << "print(\"hilbert_numerator_unreduced=\" | toString numerator hilbertSeries M);\n";
  os << "print(\"betti=\" | toString betti F);\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity of tangent cones of Schubert varieties"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "regularity report for one pair v <= w");
  an->add_option("--v", aa.v, "permutation v (one-line notation)")->required();
  an->add_option("--w", aa.w, "permutation w")->required();
  an->add_option("--method", aa.method, "auto | formula | groebner | both");
  an->add_flag("--verify", aa.verify, "with --method auto, also run the Groebner path for covexillary w");
  an->add_flag("--kl", aa.kl, "also compute deg P_{v,w}");
  an->add_flag("--json", aa.json, "print the report as JSON");
  an->add_option("--ps-order", aa.ps_order, "print this many Poincare series coefficients")->check(CLI::NonNegativeNumber);
  an->add_option("--budget-ms", aa.budget_ms, "time budget per Groebner computation (0 = unlimited)");

  ScanArgs sa;
  auto* sc = app.add_subcommand("scan", "maxReg(n) over all Bruhat pairs of S_n");
  sc->add_option("--n", sa.n, "permutation size")->required();
  sc->add_flag("--covexillary-only", sa.covexillary_only, "only covexillary w, formula path only");
  sc->add_option("--checks", sa.checks, "comma list: h_nonnegative,degree_bound,semicontinuity,kl_degree or all");
  sc->add_option("--cache", sa.cache, "JSON-lines cache file (resumable)");
  sc->add_option("--budget-ms", sa.budget_ms, "time budget per pair (0 = unlimited)");
  sc->add_option("--threads", sa.threads, "worker threads");

  std::string gu;
  auto* gr = app.add_subcommand("groth", "Grothendieck polynomial of u");
  gr->add_option("--u", gu, "permutation u")->required();

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "cross-check formula, Groebner, Grothendieck and KL paths");
  ve->add_option("--v", va.v, "permutation v");
  ve->add_option("--w", va.w, "permutation w");
  ve->add_option("--u", va.u, "compare semicontinuity against this u only");
  ve->add_option("--n", va.n, "check every covexillary pair of S_n");
  ve->add_option("--budget-ms", va.budget_ms, "time budget per Groebner computation");

  std::string ev, ew, eo;
  auto* ex = app.add_subcommand("export-m2", "write a Macaulay2 script for external cross-checks");
  ex->add_option("--v", ev, "permutation v")->required();
  ex->add_option("--w", ew, "permutation w")->required();
  ex->add_option("-o,--output", eo, "output file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*an) return analyze(aa, out);
    if (*sc) return scan(sa, out, err);
    if (*gr) return groth(gu, out);
    if (*ve) return verify(va, out);
    if (*ex) {
      const Permutation v = parse_flag("--v", ev), w = parse_flag("--w", ew);
      if (!bruhat_leq(v, w))
        throw FlagError("--v/--w", v.to_string() + " and " + w.to_string() +
                                       " are not Bruhat-comparable in the required direction (need v <= w)");
      std::ofstream f(eo);
      if (!f) throw FlagError("-o", "cannot write " + eo);
      f << m2_script(v, w);
      if (!f) throw FlagError("-o", "write failed for " + eo);
      out << "wrote " << eo << '\n';
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDiscrepancy;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace schubreg
