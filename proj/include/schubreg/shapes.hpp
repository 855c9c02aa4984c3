#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubreg/perm.hpp"

namespace schubreg {

/// A set of boxes (top-down coordinates), sorted.
struct CellSet {
  std::vector<Box> cells;
  size_t size() const { return cells.size(); }
  bool empty() const { return cells.empty(); }
};

/// A French-orientation Young diagram anchored at the bottom-left corner of
/// the n x n grid (its bottom row is grid row n) with an integer per cell.
struct Filling {
  int n = 0;
  Partition shape;
  std::map<Box, int> entries;

  /// Rows from the bottom up, each listed left to right.
  std::vector<std::vector<int>> rows_bottom_up() const;
  int max_entry() const;
};

/// Result of pushing a diagram to the southwest along antidiagonals.
struct PushedDiagram {
  Partition shape;
  /// phi: pushed cell -> original box.
  std::map<Box, Box> phi;
};

/// Slides the boxes on every antidiagonal {row + col = d} to the
/// southwest-most positions on that antidiagonal, keeping their order.
/// Throws InvalidArgument when the result is not a Young diagram anchored at
/// the bottom-left (which happens exactly for non-covexillary inputs).
PushedDiagram push_to_partition(const Diagram& d);

struct MovedBox {
  Box source;     ///< essential box of w
  int shift = 0;  ///< R_v(source)
  Box target;     ///< source moved `shift` steps southwest
  int imposed = 0;  ///< R_w(source) - shift
};

struct KappaData {
  std::vector<MovedBox> moved_boxes;
  Permutation kappa;
};

/// kappa(v, w) for covexillary w and v <= w.
///
/// The essential boxes of w are slid southwest by the rank of v and carry the
/// reduced rank; kappa is the Bruhat-largest permutation meeting those rank
/// bounds. The result is checked (covexillary, same shape and length as w,
/// exact ranks at the moved boxes) and InternalError is thrown otherwise.
KappaData kappa(const Permutation& v, const Permutation& w);

/// Reference search: every covexillary u in S_n with lambda(u) = lambda(w),
/// l(u) = l(w) and R_u equal to the imposed value at each moved box. Exhaustive
/// over S_n, so only practical for n <= 8.
std::vector<Permutation> kappa_candidates_by_search(const Permutation& v, const Permutation& w);

/// Fills lambda(p) (cells from push_to_partition(D(p))) with R_p(phi(b)).
Filling rank_filling(const Permutation& p);

/// RRW(v, w): rank_filling(kappa(v, w)).
Filling rrw_filling(const Permutation& v, const Permutation& w);

/// Longest run of cells on one northwest-southeast diagonal (row - col constant).
int maxdiag(const CellSet& cells);

/// Edge-connected components of the cells holding entries >= k.
std::vector<CellSet> level_components(const Filling& f, int k);

/// sum over k >= 1 and components alpha of level k of maxdiag(alpha).
int level_diagonal_sum(const Filling& f);

/// The combinatorial regularity rule for covexillary w. Throws
/// FormulaInapplicable for non-covexillary w, NotBruhatComparable if v is not <= w.
int regularity_formula(const Permutation& v, const Permutation& w);

/// ASCII tableau in French orientation (shortest row on top).
std::string format_tableau(const Filling& f);

}  // namespace schubreg
