#include "schubreg/shapes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "schubreg/errors.hpp"

namespace schubreg {

std::vector<std::vector<int>> Filling::rows_bottom_up() const {
  std::vector<std::vector<int>> rows;
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    std::vector<int> row;
    const int grid_row = n - static_cast<int>(r);
    for (int c = 1; c <= shape.parts[r]; ++c) row.push_back(entries.at(Box{grid_row, c}));
    rows.push_back(std::move(row));
  }
  return rows;
}

int Filling::max_entry() const {
  int m = 0;
  for (const auto& [b, v] : entries) m = std::max(m, v);
  return m;
}

PushedDiagram push_to_partition(const Diagram& d) {
  const int n = d.n;
  std::map<int, std::vector<Box>> by_antidiagonal;
  for (const Box& b : d.boxes) by_antidiagonal[b.row + b.col].push_back(b);

  PushedDiagram out;
  std::vector<int> row_length(static_cast<size_t>(n) + 1, 0);
  for (auto& [sum, boxes] : by_antidiagonal) {
    // southwest-most first
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.row > b.row; });
    const int start_row = std::min(n, sum - 1);
    for (size_t k = 0; k < boxes.size(); ++k) {
      Box cell{start_row - static_cast<int>(k), sum - (start_row - static_cast<int>(k))};
      if (cell.row < 1 || cell.col > n) throw InvalidArgument("antidiagonal overflows the grid while pushing");
      out.phi.emplace(cell, boxes[k]);
      ++row_length[static_cast<size_t>(cell.row)];
    }
  }
  // Young diagram anchored at (n, 1): row r holds columns 1..len(r) and the
  // lengths weakly decrease going up.
  int prev = n + 1;
  for (int r = n; r >= 1; --r) {
    const int len = row_length[static_cast<size_t>(r)];
    if (len > prev) throw InvalidArgument("pushed diagram is not a Young diagram (input not covexillary?)");
    for (int c = 1; c <= len; ++c)
      if (!out.phi.count(Box{r, c})) throw InvalidArgument("pushed diagram has a gap (input not covexillary?)");
    if (len > 0) out.shape.parts.push_back(len);
    prev = len;
  }
  return out;
}

namespace {

void require_pair(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw NotBruhatComparable(v.to_string() + " is not <= " + w.to_string() + " in Bruhat order");
}

std::vector<MovedBox> move_essential_boxes(const Permutation& v, const Permutation& w) {
  const int n = w.size();
  RankMatrix rv(v), rw(w);
  std::vector<MovedBox> moved;
  for (const Box& e : essential_set(w)) {
    MovedBox m;
    m.source = e;
    m.shift = rv.at(e.row, e.col);
    m.target = Box{e.row + m.shift, e.col - m.shift};
    m.imposed = rw.at(e.row, e.col) - m.shift;
    if (m.target.row > n || m.target.col < 1) throw InternalError("moved essential box leaves the grid");
    if (m.imposed < 0) throw InternalError("negative imposed rank at a moved essential box");
    moved.push_back(m);
  }
  return moved;
}

bool rank_constraints_hold(const RankMatrix& r, const std::vector<MovedBox>& moved) {
  return std::all_of(moved.begin(), moved.end(),
                     [&](const MovedBox& m) { return r.at(m.target.row, m.target.col) == m.imposed; });
}

// Largest rank function below the imposed bounds; nullopt if it is not the
// rank function of a permutation.
std::optional<Permutation> max_rank_permutation(int n, const std::vector<MovedBox>& moved) {
  std::vector<int> bound(static_cast<size_t>((n + 2) * (n + 2)), 0);
  auto at = [&](int a, int j) -> int& { return bound[static_cast<size_t>(a * (n + 2) + j)]; };
  for (int a = 1; a <= n; ++a) {
    for (int j = 1; j <= n; ++j) {
      int b = std::min(n - a + 1, j);
      for (const auto& m : moved)
        b = std::min(b, m.imposed + std::max(0, m.target.row - a) + std::max(0, j - m.target.col));
      at(a, j) = b;
    }
  }
  std::vector<int> word(static_cast<size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    for (int a = 1; a <= n; ++a) {
      const int dots = at(a, j) - at(a, j - 1) - at(a + 1, j) + at(a + 1, j - 1);
      if (dots == 0) continue;
      if (dots != 1 || word[static_cast<size_t>(j - 1)] != 0) return std::nullopt;
      word[static_cast<size_t>(j - 1)] = a;
    }
  }
  try {
    Permutation p(word);
    RankMatrix r(p);
    for (int a = 1; a <= n; ++a)
      for (int j = 1; j <= n; ++j)
        if (r.at(a, j) != at(a, j)) return std::nullopt;
    return p;
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

}  // namespace

KappaData kappa(const Permutation& v, const Permutation& w) {
  require_pair(v, w);
  if (!is_covexillary(w)) throw FormulaInapplicable(w.to_string() + " is not covexillary");
  KappaData data{move_essential_boxes(v, w), w};
  auto candidate = max_rank_permutation(w.size(), data.moved_boxes);
  if (!candidate) throw InternalError("no permutation realizes the moved rank conditions");
  const Permutation& k = *candidate;
  if (!is_covexillary(k) || length(k) != length(w) || code_and_lambda(k).lambda != code_and_lambda(w).lambda ||
      !rank_constraints_hold(RankMatrix(k), data.moved_boxes))
    throw InternalError("kappa(" + v.to_string() + ", " + w.to_string() + ") = " + k.to_string() +
                        " violates its defining constraints");
  data.kappa = k;
  return data;
}

std::vector<Permutation> kappa_candidates_by_search(const Permutation& v, const Permutation& w) {
  require_pair(v, w);
  const auto moved = move_essential_boxes(v, w);
  const int len = length(w);
  const Partition shape = code_and_lambda(w).lambda;
  std::vector<Permutation> out;
  for (const auto& u : Permutation::all(w.size())) {
    if (length(u) != len || !rank_constraints_hold(RankMatrix(u), moved)) continue;
    if (code_and_lambda(u).lambda != shape || !is_covexillary(u)) continue;
    out.push_back(u);
  }
  return out;
}

Filling rank_filling(const Permutation& p) {
  PushedDiagram pushed = push_to_partition(diagram(p));
  RankMatrix r(p);
  Filling f;
  f.n = p.size();
  f.shape = pushed.shape;
  for (const auto& [cell, source] : pushed.phi) f.entries[cell] = r.at(source.row, source.col);
  return f;
}

Filling rrw_filling(const Permutation& v, const Permutation& w) { return rank_filling(kappa(v, w).kappa); }

int maxdiag(const CellSet& cells) {
  std::map<int, int> counts;
  int best = 0;
  for (const Box& b : cells.cells) best = std::max(best, ++counts[b.row - b.col]);
  return best;
}

std::vector<CellSet> level_components(const Filling& f, int k) {
  std::set<Box> remaining;
  for (const auto& [b, v] : f.entries)
    if (v >= k) remaining.insert(b);
  std::vector<CellSet> comps;
  while (!remaining.empty()) {
    CellSet comp;
    std::vector<Box> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      Box b = stack.back();
      stack.pop_back();
      comp.cells.push_back(b);
      for (Box nb : {Box{b.row + 1, b.col}, Box{b.row - 1, b.col}, Box{b.row, b.col + 1}, Box{b.row, b.col - 1}}) {
        if (auto it = remaining.find(nb); it != remaining.end()) {
          remaining.erase(it);
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.cells.begin(), comp.cells.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int level_diagonal_sum(const Filling& f) {
  int total = 0;
  const int top = f.max_entry();
  for (int k = 1; k <= top; ++k)
    for (const auto& comp : level_components(f, k)) total += maxdiag(comp);
  return total;
}

int regularity_formula(const Permutation& v, const Permutation& w) {
  require_pair(v, w);
  if (!is_covexillary(w)) throw FormulaInapplicable("regularity rule needs covexillary w; " + w.to_string() + " contains 3412");
  return level_diagonal_sum(rrw_filling(v, w));
}

std::string format_tableau(const Filling& f) {
  auto rows = f.rows_bottom_up();
  std::ostringstream os;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (size_t c = 0; c < it->size(); ++c) os << (c ? " " : "") << (*it)[c];
    os << '\n';
  }
  return os.str();
}

}  // namespace schubreg
