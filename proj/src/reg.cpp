#include "schubreg/reg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "schubreg/errors.hpp"
#include "schubreg/groth.hpp"
#include "schubreg/shapes.hpp"

namespace schubreg {

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Formula: return "formula";
    case Method::Groebner: return "groebner";
    case Method::Both: return "both";
  }
  return "auto";
}

std::string to_string(CmStatus s) { return s == CmStatus::Proven ? "proven" : "conjectural"; }

std::string to_string(FlagStatus s) {
  switch (s) {
    case FlagStatus::Pass: return "pass";
    case FlagStatus::Fail: return "fail";
    case FlagStatus::NotCheckable: return "not-checkable";
  }
  return "not-checkable";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::Auto;
  if (text == "formula") return Method::Formula;
  if (text == "groebner") return Method::Groebner;
  if (text == "both") return Method::Both;
  throw InvalidArgument("unknown method '" + std::string(text) + "' (expected auto, formula, groebner or both)");
}

CmStatus parse_cm_status(std::string_view text) {
  if (text == "proven") return CmStatus::Proven;
  if (text == "conjectural") return CmStatus::Conjectural;
  throw InvalidArgument("unknown cm_status '" + std::string(text) + "'");
}

FlagStatus parse_flag_status(std::string_view text) {
  if (text == "pass") return FlagStatus::Pass;
  if (text == "fail") return FlagStatus::Fail;
  if (text == "not-checkable") return FlagStatus::NotCheckable;
  throw InvalidArgument("unknown flag status '" + std::string(text) + "'");
}

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

void require_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw InvalidArgument("permutations have different sizes");
  if (!bruhat_leq(v, w))
    throw NotBruhatComparable(v.to_string() + " and " + w.to_string() +
                              " are not Bruhat-comparable in the required direction (need v <= w)");
}

UniPoly q_power(int k) {
  std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
  c.back() = Integer(1);
  return UniPoly(std::move(c));
}

}  // namespace

// ---------------------------------------------------------------- regularity

RegularityReport regularity(const Permutation& v, const Permutation& w, Method method,
                            const RegularityOptions& options) {
  require_leq(v, w);
  RegularityReport r;
  r.v = v;
  r.w = w;
  r.covexillary = is_covexillary(w);
  const int n = w.size();
  r.n_vars = choose2(n) - length(v);
  r.dim = length(w) - length(v);
  r.height = choose2(n) - length(w);

  if (method == Method::Auto) method = r.covexillary ? (options.verify ? Method::Both : Method::Formula) : Method::Groebner;
  r.method = method;
  if ((method == Method::Formula || method == Method::Both) && !r.covexillary)
    throw FormulaInapplicable("the combinatorial rule needs covexillary w; " + w.to_string() + " contains 3412");

  if (method == Method::Formula || method == Method::Both) r.formula_reg = regularity_formula(v, w);
  if (method == Method::Groebner || method == Method::Both) {
    HilbertData hd = hilbert_data(v, w, options.budget);
    r.H = hd.H;
    r.K = hd.K;
    r.homogeneous_ideal = hd.homogeneous;
    r.groebner_reg = regularity_from_K(hd.K, hd.height);
    if (*r.groebner_reg != hd.H.degree()) throw InternalError("deg K - height differs from deg H");
    r.conjecture_flags[kFlagNonnegative] = check_h_nonnegative(hd.H);
    r.conjecture_flags[kFlagDegreeBound] = check_degree_bound(v, w, hd.H);
  }
  r.cm_status = r.covexillary ? CmStatus::Proven : CmStatus::Conjectural;
  r.reg = r.formula_reg ? r.formula_reg : r.groebner_reg;
  if (r.formula_reg && r.groebner_reg) {
    r.discrepant = *r.formula_reg != *r.groebner_reg;
    r.conjecture_flags[kFlagRegEqualsDegH] = {
        r.discrepant ? FlagStatus::Fail : FlagStatus::Pass,
        "formula " + std::to_string(*r.formula_reg) + ", deg H " + std::to_string(*r.groebner_reg)};
  }
  if (options.with_kl) {
    r.kl_degree = kl_polynomial(v, w).degree();
    if (r.covexillary && r.reg)
      r.conjecture_flags[kFlagKlDegree] = {*r.kl_degree == *r.reg ? FlagStatus::Pass : FlagStatus::Fail,
                                           "deg P " + std::to_string(*r.kl_degree) + ", reg " + std::to_string(*r.reg)};
  }
  return r;
}

PsSeries ps_series(const Permutation& v, const Permutation& w, int order, const GbBudget& budget) {
  require_leq(v, w);
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  HilbertData hd = hilbert_data(v, w, budget);
  PsSeries out;
  out.coeffs = hd.H.series_over_one_minus_q(hd.dim, order);
  out.multiplicity = hd.H.evaluate(Integer(1));
  out.dim = hd.dim;
  return out;
}

FinalPsCheck finalps_check(const Permutation& v, const Permutation& w, const GbBudget& budget) {
  require_leq(v, w);
  if (!is_covexillary(w)) throw FormulaInapplicable(w.to_string() + " is not covexillary");
  FinalPsCheck out;
  out.G = groth_spec_1mq(w0_compose(kappa(v, w).kappa));
  HilbertData hd = hilbert_data(v, w, budget);
  out.exponent = choose2(w.size()) - length(w);
  out.rhs = hd.H * UniPoly::one_minus_q_pow(out.exponent);
  out.holds = out.G == out.rhs;
  return out;
}

// ---------------------------------------------------------------- KL polynomials

const std::vector<Permutation>& KlTable::interval(const Permutation& x, const Permutation& w) {
  auto key = std::make_pair(x.key(), w.key());
  auto it = intervals_.find(key);
  if (it == intervals_.end()) it = intervals_.emplace(key, bruhat_interval(x, w)).first;
  return it->second;
}

Integer KlTable::mu(const Permutation& x, const Permutation& w) {
  const int gap = length(w) - length(x);
  if (gap <= 0 || gap % 2 == 0) return Integer(0);
  return get(x, w).coeff((gap - 1) / 2);
}

UniPoly KlTable::get(const Permutation& x, const Permutation& w) {
  if (x == w) return UniPoly::constant(Integer(1));
  if (!bruhat_leq(x, w)) return UniPoly();
  auto key = std::make_pair(x.key(), w.key());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Permutation winv = w.inverse();
  int s = 0;
  for (int i = 1; i < w.size(); ++i)
    if (winv(i) > winv(i + 1)) {
      s = i;
      break;
    }
  const Permutation v = w.simple_times(s);
  const Permutation xinv = x.inverse();
  const int c = xinv(s) > xinv(s + 1) ? 1 : 0;
  const Permutation sx = x.simple_times(s);

  UniPoly p = q_power(1 - c) * get(sx, v) + q_power(c) * get(x, v);
  const int lw = length(w);
  static const std::vector<Permutation> kNone;
  for (const Permutation& z : bruhat_leq(x, v) ? interval(x, v) : kNone) {
    if (z == v) continue;
    const Permutation zinv = z.inverse();
    if (zinv(s) < zinv(s + 1)) continue;  // need s z < z
    Integer m = mu(z, v);
    if (m.is_zero()) continue;
    p -= UniPoly::constant(m) * q_power((lw - length(z)) / 2) * get(x, z);
  }
  if (p.degree() > (lw - length(x) - 1) / 2 && x != w)
    throw InternalError("KL polynomial P_{" + x.to_string() + "," + w.to_string() + "} exceeds the degree bound");
  memo_.emplace(key, p);
  return p;
}

UniPoly kl_polynomial(const Permutation& v, const Permutation& w) {
  require_leq(v, w);
  KlTable table;
  return table.get(v, w);
}

// ---------------------------------------------------------------- conjectures

ConjectureFlag check_h_nonnegative(const UniPoly& H) {
  if (H.has_nonnegative_coeffs()) return {FlagStatus::Pass, "H = " + H.to_string()};
  return {FlagStatus::Fail, "negative coefficient in H = " + H.to_string()};
}

namespace {

ConjectureFlag degree_bound_flag(const Permutation& v, const Permutation& w, int degree, const char* what) {
  const int gap = length(w) - length(v);
  if (gap == 0) return {FlagStatus::Pass, "v = w"};
  const std::string detail = std::string(what) + " " + std::to_string(degree) + ", bound (" + std::to_string(gap) + " - 1)/2";
  return {2 * degree <= gap - 1 ? FlagStatus::Pass : FlagStatus::Fail, detail};
}

}  // namespace

ConjectureFlag check_degree_bound(const Permutation& v, const Permutation& w, const UniPoly& H) {
  return degree_bound_flag(v, w, H.degree(), "deg H");
}

ConjectureFlag check_semicontinuity(const UniPoly& H_u, const UniPoly& H_v) {
  const int top = std::max(H_u.degree(), H_v.degree());
  for (int t = 0; t <= top; ++t)
    if (H_u.coeff(t) < H_v.coeff(t))
      return {FlagStatus::Fail, "coefficient of q^" + std::to_string(t) + ": " + H_u.to_string() + " vs " +
                                    H_v.to_string()};
  return {FlagStatus::Pass, ""};
}

ConjectureFlags check_conjectures(const Permutation& v, const Permutation& w, const ConjectureInputs& inputs) {
  require_leq(v, w);
  ConjectureFlags flags;
  HilbertData hv = hilbert_data(v, w, inputs.budget);
  flags[kFlagNonnegative] = check_h_nonnegative(hv.H);
  flags[kFlagDegreeBound] = check_degree_bound(v, w, hv.H);

  std::vector<Permutation> us;
  if (inputs.u) {
    if (!bruhat_leq(*inputs.u, v)) throw NotBruhatComparable(inputs.u->to_string() + " is not <= " + v.to_string());
    us.push_back(*inputs.u);
  } else {
    us = bruhat_lower_covers(v);
  }
  ConjectureFlag semi{FlagStatus::Pass, us.empty() ? "v has no lower covers" : ""};
  for (const auto& u : us) {
    HilbertData hu = hilbert_data(u, w, inputs.budget);
    ConjectureFlag f = check_semicontinuity(hu.H, hv.H);
    if (f.status == FlagStatus::Fail) {
      semi = {FlagStatus::Fail, "u = " + u.to_string() + ": " + f.detail};
      break;
    }
  }
  flags[kFlagSemicontinuity] = semi;

  const bool covex = is_covexillary(w);
  if (covex) {
    const int formula = regularity_formula(v, w);
    flags[kFlagRegEqualsDegH] = {formula == hv.H.degree() ? FlagStatus::Pass : FlagStatus::Fail,
                                 "formula " + std::to_string(formula) + ", deg H " + std::to_string(hv.H.degree())};
    if (inputs.with_kl) {
      const int kl = kl_polynomial(v, w).degree();
      flags[kFlagKlDegree] = {kl == formula && kl == hv.H.degree() ? FlagStatus::Pass : FlagStatus::Fail,
                              "deg P " + std::to_string(kl) + ", formula " + std::to_string(formula)};
    }
  } else {
    flags[kFlagRegEqualsDegH] = {FlagStatus::NotCheckable,
                                 "needs a minimal free resolution for non-covexillary w; see export-m2"};
    if (inputs.with_kl)
      flags[kFlagKlDegree] = {FlagStatus::NotCheckable,
                              "deg P " + std::to_string(kl_polynomial(v, w).degree()) + ", deg H " +
                                  std::to_string(hv.H.degree()) + " (informational for non-covexillary w)"};
  }
  return flags;
}

// ---------------------------------------------------------------- scans

std::vector<std::pair<Permutation, Permutation>> bruhat_pairs(int n, ScanRestrict restrict) {
  std::vector<std::pair<Permutation, Permutation>> pairs;
  const Permutation id = Permutation::identity(n);
  for (const auto& w : Permutation::all(n)) {
    if (restrict == ScanRestrict::CovexillaryOnly && !is_covexillary(w)) continue;
    for (const auto& v : bruhat_interval(id, w)) pairs.emplace_back(v, w);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    const int ga = length(a.second) - length(a.first), gb = length(b.second) - length(b.first);
    if (ga != gb) return ga < gb;
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return pairs;
}

namespace {

bool wants(const ScanOptions& o, std::string_view check) {
  return std::find(o.checks.begin(), o.checks.end(), check) != o.checks.end();
}

ScanRecord compute_record(const Permutation& v, const Permutation& w, const ScanOptions& options, bool need_h,
                          std::atomic<size_t>& groebner_calls) {
  auto start = std::chrono::steady_clock::now();
  ScanRecord rec;
  rec.n = w.size();
  rec.v = v;
  rec.w = w;
  rec.covexillary = is_covexillary(w);
  rec.dim = length(w) - length(v);
  rec.height = choose2(w.size()) - length(w);
  rec.cm_status = rec.covexillary ? CmStatus::Proven : CmStatus::Conjectural;
  const bool groebner = !rec.covexillary || (need_h && options.restrict == ScanRestrict::All);
  if (rec.covexillary) {
    rec.method = groebner ? Method::Both : Method::Formula;
    rec.reg = regularity_formula(v, w);
  } else {
    rec.method = Method::Groebner;
  }
  if (groebner) {
    ++groebner_calls;
    try {
      HilbertData hd = hilbert_data(v, w, GbBudget{0, options.budget_ms});
      rec.h_coeffs = hd.H.coeffs();
      if (!rec.covexillary) rec.reg = hd.H.degree();
    } catch (const BudgetExceeded&) {
      rec.budget_exceeded = true;
      rec.reg.reset();
    }
  }
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

ScanResult max_reg_scan(int n, const ScanOptions& options) {
  if (n < 2 || n > 8) throw InvalidArgument("scan size n must satisfy 2 <= n <= 8");
  static const std::set<std::string> known_checks{kFlagNonnegative, kFlagDegreeBound, kFlagSemicontinuity,
                                                  kFlagKlDegree};
  for (const auto& c : options.checks)
    if (!known_checks.count(c)) throw InvalidArgument("unknown check '" + c + "'");
  const bool need_h = wants(options, kFlagNonnegative) || wants(options, kFlagDegreeBound) ||
                      wants(options, kFlagSemicontinuity);

  ScanResult result;
  result.n = n;
  const auto pairs = bruhat_pairs(n, options.restrict);
  std::map<std::pair<uint64_t, uint64_t>, ScanRecord> known;
  for (const auto& r : options.known) {
    if (r.n != n || r.kernel_version != kKernelVersion || r.budget_exceeded) continue;
    if (need_h && r.covexillary && options.restrict == ScanRestrict::All && r.h_coeffs.empty()) continue;
    known.emplace(std::make_pair(r.v.key(), r.w.key()), r);
  }

  std::vector<std::optional<ScanRecord>> slots(pairs.size());
  std::vector<size_t> todo;
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto it = known.find({pairs[k].first.key(), pairs[k].second.key()});
    if (it != known.end()) {
      slots[k] = it->second;
      ++result.reused;
    } else {
      todo.push_back(k);
    }
  }

  std::atomic<size_t> next{0}, groebner_calls{0};
  std::mutex emit;
  std::exception_ptr error;
  auto worker = [&] {
    for (size_t t = next++; t < todo.size(); t = next++) {
      const size_t k = todo[t];
      try {
        ScanRecord rec = compute_record(pairs[k].first, pairs[k].second, options, need_h, groebner_calls);
        std::lock_guard lock(emit);
        if (options.on_record) options.on_record(rec);
        slots[k] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(emit);
        if (!error) error = std::current_exception();
        next = todo.size();
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  result.groebner_calls = groebner_calls;

  std::unordered_map<uint64_t, std::unordered_map<uint64_t, size_t>> index;  // w -> v -> slot
  for (size_t k = 0; k < pairs.size(); ++k) index[pairs[k].second.key()][pairs[k].first.key()] = k;

  KlTable kl;
  auto tally = [&](const std::string& check, bool ok, const ScanRecord& rec, std::optional<Permutation> u,
                   const std::string& detail) {
    auto& counts = result.check_counts[check];
    if (ok) {
      ++counts.first;
    } else {
      ++counts.second;
      result.failures.push_back(ScanFailure{check, rec.v, rec.w, std::move(u), detail});
    }
  };

  for (size_t k = 0; k < pairs.size(); ++k) {
    ScanRecord& rec = *slots[k];
    if (rec.budget_exceeded) {
      result.partial = true;
      continue;
    }
    const bool has_h = !rec.h_coeffs.empty();
    const UniPoly H(rec.h_coeffs);
    if (rec.method == Method::Both && rec.reg && *rec.reg != H.degree())
      tally("dual_path", false, rec, std::nullopt,
            "formula " + std::to_string(*rec.reg) + ", deg H " + std::to_string(H.degree()));
    if (wants(options, kFlagNonnegative) && has_h) {
      auto f = check_h_nonnegative(H);
      tally(kFlagNonnegative, f.status == FlagStatus::Pass, rec, std::nullopt, f.detail);
    }
    if (wants(options, kFlagDegreeBound) && rec.reg) {
      auto f = degree_bound_flag(rec.v, rec.w, has_h ? H.degree() : *rec.reg, has_h ? "deg H" : "reg");
      tally(kFlagDegreeBound, f.status == FlagStatus::Pass, rec, std::nullopt, f.detail);
    }
    if (wants(options, kFlagSemicontinuity)) {
      const auto& row = index[rec.w.key()];
      for (const auto& u : bruhat_lower_covers(rec.v)) {
        auto it = row.find(u.key());
        if (it == row.end()) continue;
        const ScanRecord& ru = *slots[it->second];
        if (ru.budget_exceeded) continue;
        if (has_h && !ru.h_coeffs.empty()) {
          auto f = check_semicontinuity(UniPoly(ru.h_coeffs), H);
          tally(kFlagSemicontinuity, f.status == FlagStatus::Pass, rec, u, f.detail);
        } else if (rec.reg && ru.reg) {
          tally(kFlagSemicontinuity, *ru.reg >= *rec.reg, rec, u,
                "reg " + std::to_string(*ru.reg) + " at u vs " + std::to_string(*rec.reg) + " at v");
        }
      }
    }
    if (wants(options, kFlagKlDegree)) {
      rec.kl_degree = kl.get(rec.v, rec.w).degree();
      if (rec.covexillary && rec.reg)
        tally(kFlagKlDegree, *rec.kl_degree == *rec.reg, rec, std::nullopt,
              "deg P " + std::to_string(*rec.kl_degree) + ", reg " + std::to_string(*rec.reg));
    }
  }

  for (size_t k = 0; k < pairs.size(); ++k) {
    const ScanRecord& rec = *slots[k];
    if (!rec.reg) continue;
    if (!result.max_reg || *rec.reg > *result.max_reg) {
      result.max_reg = rec.reg;
      result.maximizers.clear();
    }
    if (*rec.reg == *result.max_reg) result.maximizers.emplace_back(rec.v, rec.w);
  }
  for (auto& s : slots) result.records.push_back(std::move(*s));
  return result;
}

}  // namespace schubreg
