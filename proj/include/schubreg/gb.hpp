#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubreg/ideal.hpp"
#include "schubreg/perm.hpp"
#include "schubreg/poly.hpp"

namespace schubreg {

/// Global monomial order on a ring's variables.
///
/// `priority` lists variables from largest to smallest; empty means the
/// ring's own order (variable 0 largest). GradedWeight compares total degree,
/// then the weight dot product (larger wins), then grevlex.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, GradedWeight };

  static MonomialOrder grevlex(std::vector<int> priority = {});
  static MonomialOrder lex(std::vector<int> priority = {});
  static MonomialOrder graded_weight(std::vector<int> weights, std::vector<int> priority = {});

  Kind kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<int>& weights() const { return weights_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, std::vector<int> priority, std::vector<int> weights);
  int grevlex_tiebreak(const Monomial& a, const Monomial& b) const;

  Kind kind_;
  std::vector<int> priority_;
  std::vector<int> weights_;
};

/// Leading monomial / coefficient of a nonzero f under `ord`.
const Term& leading_term(const MultiPoly& f, const MonomialOrder& ord);

/// Limits for one Groebner computation; zero means unlimited.
struct GbBudget {
  uint64_t max_pairs = 0;
  int64_t max_ms = 0;
};

struct GbStats {
  uint64_t pairs_considered = 0;
  uint64_t pairs_reduced = 0;
  uint64_t zero_reductions = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<MultiPoly> elements, GbStats stats = {});

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  /// Reduced basis, primitive with positive leading coefficients, sorted by
  /// increasing leading monomial.
  const std::vector<MultiPoly>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  const GbStats& stats() const { return stats_; }
  bool is_unit_ideal() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
  std::vector<Monomial> leads_;
  GbStats stats_;
};

/// Reduced Groebner basis by Buchberger's algorithm with the sugar strategy
/// and the Gebauer-Moeller criteria. Throws BudgetExceeded when a limit is hit.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const GbBudget& budget = {});

/// Full remainder of f modulo G, scaled to be primitive (an integer multiple
/// of the rational remainder). Zero iff f lies in the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

/// Checks that every S-pair of the basis reduces to zero.
bool spair_certificate(const GroebnerBasis& gb);

/// The monomial ideal of leading monomials.
Ideal initial_ideal(const GroebnerBasis& gb);

/// Tangent cone generators with, for each one, the degree of the
/// homogenized basis element it came from (0 when no homogenization ran).
struct TangentCone {
  Ideal ideal;
  std::vector<int> witness_degrees;
  bool input_homogeneous = false;
};

/// <LD(f) : f in I> by Lazard homogenization: a homogeneous Groebner basis of
/// the homogenized generators, dehomogenized, gives a standard basis for the
/// local degree order whose lowest forms generate the tangent cone ideal.
TangentCone tangent_cone(const Ideal& ideal, const GbBudget& budget = {});
Ideal lowest_degree_forms_ideal(const Ideal& ideal, const GbBudget& budget = {});

/// K(q) with PS(S/M) = K / (1 - q)^N for a monomial ideal M in N variables.
/// Throws InvalidArgument on non-monomial generators.
UniPoly hilbert_numerator(const Ideal& monomial_ideal, int num_vars);
UniPoly hilbert_numerator(const std::vector<Monomial>& generators);

struct HilbertData {
  UniPoly K;
  int N = 0;
  int dim = 0;
  int height = 0;
  UniPoly H;
  /// Whether I_{v,w} was homogeneous, so I' = I.
  bool homogeneous = false;
  size_t tangent_cone_generators = 0;
  size_t gb_size = 0;
};

/// Hilbert data of S / J for a homogeneous ideal J (H = K / (1 - q)^height).
HilbertData hilbert_data_of_homogeneous(const Ideal& ideal, const GbBudget& budget = {});

/// The full chart pipeline for R'_{v,w}: minors, tangent cone, grevlex basis,
/// initial ideal, K. Throws InternalError unless dim = l(w) - l(v) and
/// height = l(w0 w).
HilbertData hilbert_data(const Permutation& v, const Permutation& w, const GbBudget& budget = {});

/// deg K - height, the regularity of a Cohen-Macaulay quotient. Throws
/// InternalError if negative.
int regularity_from_K(const UniPoly& K, int height);

struct Postulation {
  /// Largest n >= 0 with h(n) != p(n); kMinusInfinity if none.
  int value = kMinusInfinity;
  /// deg K - dim, reported alongside for comparison.
  int deg_k_minus_dim = 0;
  int dim = 0;
};

Postulation postulation_number(const UniPoly& K, int num_vars);

}  // namespace schubreg
