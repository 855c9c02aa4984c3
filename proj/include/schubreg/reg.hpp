#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubreg/gb.hpp"
#include "schubreg/perm.hpp"
#include "schubreg/poly.hpp"

namespace schubreg {

inline constexpr const char* kKernelVersion = "schubreg-kernel-1";

enum class Method { Auto, Formula, Groebner, Both };
enum class CmStatus { Proven, Conjectural };
enum class FlagStatus { Pass, Fail, NotCheckable };

std::string to_string(Method m);
std::string to_string(CmStatus s);
std::string to_string(FlagStatus s);
Method parse_method(std::string_view text);
CmStatus parse_cm_status(std::string_view text);
FlagStatus parse_flag_status(std::string_view text);

struct ConjectureFlag {
  FlagStatus status = FlagStatus::NotCheckable;
  std::string detail;
  friend bool operator==(const ConjectureFlag&, const ConjectureFlag&) = default;
};

using ConjectureFlags = std::map<std::string, ConjectureFlag>;

struct RegularityReport {
  Permutation v = Permutation::identity(1);
  Permutation w = Permutation::identity(1);
  /// The method actually run (Auto is resolved to Formula or Groebner).
  Method method = Method::Formula;
  std::optional<int> reg;
  std::optional<int> formula_reg;
  /// deg H from the Groebner path.
  std::optional<int> groebner_reg;
  std::optional<UniPoly> H;
  std::optional<UniPoly> K;
  int dim = 0;
  int height = 0;
  int n_vars = 0;
  bool covexillary = false;
  CmStatus cm_status = CmStatus::Conjectural;
  /// Set when the Groebner path ran (I_{v,w} homogeneous, so I' = I).
  std::optional<bool> homogeneous_ideal;
  std::optional<int> kl_degree;
  ConjectureFlags conjecture_flags;
  /// Both methods ran and disagree.
  bool discrepant = false;

  friend bool operator==(const RegularityReport&, const RegularityReport&) = default;
};

struct RegularityOptions {
  /// Auto also runs the Groebner path for covexillary w.
  bool verify = false;
  bool with_kl = false;
  GbBudget budget;
};

/// Regularity of the tangent cone at e_v of X_w. Formula needs covexillary w
/// (FormulaInapplicable otherwise); Groebner reports deg H, labeled proven
/// only for covexillary w.
RegularityReport regularity(const Permutation& v, const Permutation& w, Method method = Method::Auto,
                            const RegularityOptions& options = {});

struct PsSeries {
  std::vector<Integer> coeffs;
  /// H(1), the Hilbert-Samuel multiplicity.
  Integer multiplicity;
  int dim = 0;
};

/// First `order` coefficients of H / (1 - q)^dim.
PsSeries ps_series(const Permutation& v, const Permutation& w, int order, const GbBudget& budget = {});

struct FinalPsCheck {
  bool holds = false;
  UniPoly G;    ///< G_{w0 kappa}(1 - q, ..., 1 - q)
  UniPoly rhs;  ///< H * (1 - q)^{C(n,2) - l(w)}
  int exponent = 0;
};

/// Compares the specialized Grothendieck polynomial of w0*kappa(v,w) with
/// H_{v,w} (1 - q)^{C(n,2) - l(w)} exactly. Requires covexillary w.
FinalPsCheck finalps_check(const Permutation& v, const Permutation& w, const GbBudget& budget = {});

/// Kazhdan-Lusztig polynomial P_{v,w}. Throws NotBruhatComparable unless v <= w.
UniPoly kl_polynomial(const Permutation& v, const Permutation& w);

/// Memoizing KL table, reusable across many pairs of one S_n.
class KlTable {
 public:
  UniPoly get(const Permutation& x, const Permutation& w);
  /// mu(x, w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, 0 if the gap is even.
  Integer mu(const Permutation& x, const Permutation& w);
  size_t cached() const { return memo_.size(); }

 private:
  const std::vector<Permutation>& interval(const Permutation& x, const Permutation& w);

  std::map<std::pair<uint64_t, uint64_t>, UniPoly> memo_;
  std::map<std::pair<uint64_t, uint64_t>, std::vector<Permutation>> intervals_;
};

/// Flag names used by check_conjectures.
inline constexpr const char* kFlagNonnegative = "h_nonnegative";
inline constexpr const char* kFlagDegreeBound = "degree_bound";
inline constexpr const char* kFlagSemicontinuity = "semicontinuity";
inline constexpr const char* kFlagRegEqualsDegH = "reg_equals_deg_h";
inline constexpr const char* kFlagKlDegree = "kl_degree";

struct ConjectureInputs {
  /// Compare against this u only instead of every lower cover of v.
  std::optional<Permutation> u;
  bool with_kl = true;
  GbBudget budget;
};

/// Evaluates every checkable conjecture instance for (v, w).
ConjectureFlags check_conjectures(const Permutation& v, const Permutation& w, const ConjectureInputs& inputs = {});

/// Flags computable from H alone.
ConjectureFlag check_h_nonnegative(const UniPoly& H);
ConjectureFlag check_degree_bound(const Permutation& v, const Permutation& w, const UniPoly& H);
/// [q^t] H_{u,w} >= [q^t] H_{v,w} for all t.
ConjectureFlag check_semicontinuity(const UniPoly& H_u, const UniPoly& H_v);

enum class ScanRestrict { All, CovexillaryOnly };

struct ScanRecord {
  int n = 0;
  Permutation v = Permutation::identity(1);
  Permutation w = Permutation::identity(1);
  Method method = Method::Formula;
  std::optional<int> reg;
  std::vector<Integer> h_coeffs;
  int dim = 0;
  int height = 0;
  bool covexillary = false;
  CmStatus cm_status = CmStatus::Conjectural;
  std::optional<int> kl_degree;
  std::string kernel_version = kKernelVersion;
  int64_t elapsed_ms = 0;
  /// The pair hit its budget; reg is absent.
  bool budget_exceeded = false;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanFailure {
  std::string check;
  Permutation v = Permutation::identity(1);
  Permutation w = Permutation::identity(1);
  std::optional<Permutation> u;
  std::string detail;
};

struct ScanOptions {
  ScanRestrict restrict = ScanRestrict::All;
  /// Subset of: h_nonnegative, degree_bound, semicontinuity, kl_degree.
  std::vector<std::string> checks;
  int64_t budget_ms = 0;
  int threads = 1;
  /// Records already known (from a cache); their pairs are not recomputed.
  std::vector<ScanRecord> known;
  /// Called once per newly computed record, serialized.
  std::function<void(const ScanRecord&)> on_record;
};

struct ScanResult {
  int n = 0;
  std::optional<int> max_reg;
  std::vector<std::pair<Permutation, Permutation>> maximizers;
  std::vector<ScanRecord> records;
  /// Some pairs ran out of budget: max_reg is only a lower bound.
  bool partial = false;
  size_t groebner_calls = 0;
  size_t reused = 0;
  std::map<std::string, std::pair<size_t, size_t>> check_counts;  ///< name -> (pass, fail)
  std::vector<ScanFailure> failures;
};

/// All Bruhat pairs v <= w in S_n ordered by l(w) - l(v), then w, then v.
std::vector<std::pair<Permutation, Permutation>> bruhat_pairs(int n, ScanRestrict restrict);

/// maxReg(n) over Bruhat pairs; covexillary pairs use the formula, others
/// deg H from the Groebner path.
ScanResult max_reg_scan(int n, const ScanOptions& options);

}  // namespace schubreg
