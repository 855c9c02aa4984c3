#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schubreg {

/// A permutation of [n] in one-line notation: w(i) = word[i - 1].
class Permutation {
 public:
  /// Validates that `word` is a bijection on [n]; throws InvalidArgument.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w0 = n (n-1) ... 1.
  static Permutation longest(int n);
  /// Digit string for n <= 9 ("7314562"); comma-separated values otherwise.
  static Permutation parse(std::string_view text);
  /// Every permutation of [n] in lexicographic order.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }
  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// w * s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const;
  /// s_i * w: swaps values i and i+1.
  Permutation simple_times(int i) const;

  std::string to_string() const;
  /// Compact key for hashing (base-16 digits, valid for n <= 16).
  uint64_t key() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const;
};

/// A grid box in top-down coordinates: row 1 is the top row (the row of value
/// 1 in the permutation graph), column j is position j.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A set of boxes inside the n x n grid, kept sorted.
struct Diagram {
  int n = 0;
  std::vector<Box> boxes;

  bool contains(const Box& b) const;
  size_t size() const { return boxes.size(); }
};

/// A weakly decreasing sequence of positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Inversion count #{i < j : w(i) > w(j)}.
int length(const Permutation& w);

/// R_u(a, j) = #{h <= j : u(h) >= a}: the rank of the southwest block of the
/// permutation matrix below row a - 1 and left of column j (top-down rows).
/// This equals r^u_{n-a+1, j} in bottom-up indexing. 1 <= a, j <= n.
int sw_rank(const Permutation& u, int a, int j);

/// All n^2 values R_u(a, j), row-major with a, j from 1.
class RankMatrix {
 public:
  explicit RankMatrix(const Permutation& u);
  int n() const { return n_; }
  int at(int a, int j) const { return data_[static_cast<size_t>((a - 1) * n_ + (j - 1))]; }
  /// Bottom-up rank r_{s,t} = R(n - s + 1, t).
  int bottom_up(int s, int t) const { return at(n_ - s + 1, t); }
  bool dominated_by(const RankMatrix& other) const;

 private:
  int n_;
  std::vector<uint8_t> data_;
};

/// Bruhat order via rank-matrix domination. Throws InvalidArgument on size mismatch.
bool bruhat_leq(const Permutation& v, const Permutation& w);
/// {u : v <= u <= w}, sorted by length then lexicographically.
/// Throws NotBruhatComparable if v is not <= w.
std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w);
/// Permutations covered by w: u <= w with l(u) = l(w) - 1.
std::vector<Permutation> bruhat_lower_covers(const Permutation& w);

/// True iff some subsequence of w is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);
/// Avoids 3412.
bool is_covexillary(const Permutation& w);
/// Avoids 2143.
bool is_vexillary(const Permutation& w);

/// D(w) = {(i, j) : i > w(j), j < w^{-1}(i)}. Note |D(w)| = C(n,2) - l(w):
/// this is the diagram of w0*w turned upside down, not the usual Rothe diagram.
Diagram diagram(const Permutation& w);
/// E(w) = {(i, j) in D(w) : (i-1, j), (i, j+1) not in D(w)}.
std::vector<Box> essential_set(const Permutation& w);

struct CodeAndShape {
  /// (c_n, ..., c_1) where c_i is the number of boxes of D(w) in row i.
  std::vector<int> code;
  /// code sorted decreasingly with zeros dropped.
  Partition lambda;
};
CodeAndShape code_and_lambda(const Permutation& w);

/// w0 * u: i -> n + 1 - u(i).
Permutation w0_compose(const Permutation& u);

/// ASCII picture of the permutation graph ('*') and a diagram ('#').
std::string format_diagram(const Permutation& w, const Diagram& d);

}  // namespace schubreg
