#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubreg/perm.hpp"
#include "schubreg/poly.hpp"

namespace schubreg {

enum class CellKind { Zero, One, Var };

/// The patterned matrix Z^(v) of the opposite Schubert cell.
///
/// Indices follow the bottom-up convention: cell (i, j) is the i-th row from
/// the bottom and j-th column. Free variables are named z_i_j and ordered by
/// (i, j) lexicographically; variable k of ring() is free_vars()[k].
class GenericMatrix {
 public:
  /// Z^(v) for the Kazhdan-Lusztig chart at e_v.
  static GenericMatrix for_permutation(const Permutation& v);
  /// The fully generic n x n matrix Z = (z_ij).
  static GenericMatrix generic(int n);

  int n() const { return n_; }
  CellKind kind(int i, int j) const { return kinds_[index(i, j)]; }
  /// Ring variable index of a Var cell, -1 otherwise.
  int var(int i, int j) const { return vars_[index(i, j)]; }
  const std::vector<std::pair<int, int>>& free_vars() const { return free_vars_; }
  const RingPtr& ring() const { return ring_; }

  /// Rows printed top to bottom, e.g. "z_6_1 0 1 0 ...".
  std::string to_string() const;

 private:
  GenericMatrix(int n, std::vector<CellKind> kinds);
  size_t index(int i, int j) const { return static_cast<size_t>((i - 1) * n_ + (j - 1)); }

  int n_;
  std::vector<CellKind> kinds_;
  std::vector<int> vars_;
  std::vector<std::pair<int, int>> free_vars_;
  RingPtr ring_;
};

enum class IdealProvenance { KazhdanLusztig, SchubertDeterminantal, TangentCone, Adhoc };

std::string to_string(IdealProvenance p);

struct Ideal {
  RingPtr ring;
  std::vector<MultiPoly> generators;
  IdealProvenance provenance = IdealProvenance::Adhoc;

  /// Drops zeros, makes generators primitive with positive leading
  /// coefficient, removes duplicates and sorts them deterministically.
  void normalize();
};

/// Which (s, t) blocks contribute minors.
enum class MinorMode {
  Full,       ///< every 1 <= s, t <= n
  Essential,  ///< only the blocks of the essential boxes of w
};

/// I_{v,w}: all (r^w_{st} + 1)-minors of the southwest s x t block of Z^(v).
/// Throws NotBruhatComparable unless v <= w.
Ideal kl_generators(const Permutation& v, const Permutation& w, MinorMode mode = MinorMode::Full);

/// I_w: the same minor recipe on the fully generic n x n matrix.
Ideal schubert_determinantal_generators(const Permutation& w, MinorMode mode = MinorMode::Full);

/// Ideal-level homogeneity: every element of the reduced grevlex Groebner
/// basis is homogeneous. Computes a Groebner basis of the ideal itself.
bool is_homogeneous_ideal(const Ideal& ideal);

}  // namespace schubreg
