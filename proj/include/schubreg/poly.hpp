#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubreg/integer.hpp"

namespace schubreg {

inline constexpr int kMaxVars = 64;
inline constexpr int kMaxExponent = 255;
/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

/// Exponent vector over a fixed-capacity variable universe.
///
/// Exponents are stored densely but every operation walks only the support
/// bitmask, so cost scales with the number of variables actually present.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  /// Builds x_0^e_0 * x_1^e_1 * ... from a dense exponent list.
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(int var, int power = 1);

  int exponent(int var) const { return exps_[static_cast<size_t>(var)]; }
  void set_exponent(int var, int e);
  int degree() const { return degree_; }
  uint64_t support() const { return mask_; }
  bool is_one() const { return mask_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }
  /// this / other; other must divide this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// (variable, exponent) pairs in increasing variable order.
  std::vector<std::pair<int, int>> sparse() const;
  size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mask_ == b.mask_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<uint8_t, kMaxVars> exps_;
  uint16_t degree_ = 0;
  uint64_t mask_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison with variable 0 largest.
/// Returns <0, 0, >0. This is the canonical term order of MultiPoly.
int grevlex_compare(const Monomial& a, const Monomial& b);
/// Pure lexicographic comparison with variable 0 largest.
int lex_compare(const Monomial& a, const Monomial& b);

/// Named, ordered variable universe shared by polynomials of one ring.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int var) const { return names_.at(static_cast<size_t>(var)); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);
/// Ring on x1, ..., xn.
RingPtr make_x_ring(int n);

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Sparse multivariate polynomial with exact integer coefficients.
///
/// Terms are kept in canonical form: sorted by decreasing grevlex order,
/// monomials distinct, coefficients nonzero. Ideals over Q are represented by
/// primitive integer generators, so integer coefficients lose nothing.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Integer& c);
  static MultiPoly variable(RingPtr ring, int var);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Integer& c = Integer(1));
  /// Parses the grammar produced by to_string(): integers, variable names,
  /// '+', '-', '*', '^' and parentheses.
  static MultiPoly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Maximum total degree; kMinusInfinity for zero.
  int degree() const;
  /// Minimum total degree; throws InvalidArgument for zero.
  int min_degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_component(int d) const;
  /// LD(f): the lowest-degree homogeneous component.
  MultiPoly lowest_degree_form() const;

  /// Gcd of the coefficients (positive), 0 for the zero polynomial.
  Integer content() const;
  /// Divides by the content and makes the grevlex-leading coefficient positive.
  MultiPoly primitive_part() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Integer& c) const;
  MultiPoly times_monomial(const Monomial& m) const;

  /// f with x_i and x_j exchanged.
  MultiPoly swap_variables(int i, int j) const;
  /// Evaluates at an integer point (one value per ring variable).
  Integer evaluate(std::span<const Integer> point) const;
  /// Moves the polynomial into another ring with the same or more variables
  /// (variable k stays variable k).
  MultiPoly rebased(RingPtr ring) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_same_ring(const MultiPoly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Dense univariate polynomial in q with exact integer coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long long> coeffs);

  static UniPoly constant(const Integer& c);
  /// (1 - q)^k.
  static UniPoly one_minus_q_pow(int k);

  /// Highest nonzero power; kMinusInfinity for zero.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of q^k (0 outside the stored range).
  Integer coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer evaluate(const Integer& q) const;
  bool has_nonnegative_coeffs() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// First `count` coefficients of the power series this / (1 - q)^k.
  std::vector<Integer> series_over_one_minus_q(int k, int count) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// num / den with zero remainder; throws InternalError on inexact division
/// and InvalidArgument on a zero denominator.
UniPoly exact_divide(const UniPoly& num, const UniPoly& den);
/// Multiplicity of q = 1 as a root (number of (1 - q) factors); num != 0.
int one_minus_q_multiplicity(const UniPoly& p);

/// Exact quotient f / (x_i - x_j) (0-based variable indices). Throws
/// InternalError when the remainder is nonzero.
MultiPoly divide_by_variable_difference(const MultiPoly& f, int i, int j);

/// Isobaric divided difference pi_i on x_1..x_n (1-based i, 1 <= i < n):
/// ((1 - x_{i+1}) f - (1 - x_i) f^{s_i}) / (x_i - x_{i+1}).
MultiPoly divided_difference_pi(const MultiPoly& f, int i);

/// f(1 - q, 1 - q, ..., 1 - q).
UniPoly substitute_all_1mq(const MultiPoly& f);

}  // namespace schubreg
