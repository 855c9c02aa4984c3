#include "schubreg/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "schubreg/errors.hpp"
#include "schubreg/gb.hpp"

namespace schubreg {

GenericMatrix::GenericMatrix(int n, std::vector<CellKind> kinds)
    : n_(n), kinds_(std::move(kinds)), vars_(kinds_.size(), -1) {
  std::vector<std::string> names;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (kinds_[index(i, j)] != CellKind::Var) continue;
      vars_[index(i, j)] = static_cast<int>(free_vars_.size());
      free_vars_.emplace_back(i, j);
      names.push_back("z_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  ring_ = make_ring(std::move(names));
}

GenericMatrix GenericMatrix::for_permutation(const Permutation& v) {
  const int n = v.size();
  std::vector<CellKind> kinds(static_cast<size_t>(n * n), CellKind::Var);
  auto at = [&](int i, int j) -> CellKind& { return kinds[static_cast<size_t>((i - 1) * n + (j - 1))]; };
  for (int c = 1; c <= n; ++c) {
    const int one_row = n - v(c) + 1;
    at(one_row, c) = CellKind::One;
    for (int s = c + 1; s <= n; ++s) at(one_row, s) = CellKind::Zero;
    for (int t = one_row + 1; t <= n; ++t) at(t, c) = CellKind::Zero;
  }
  return GenericMatrix(n, std::move(kinds));
}

GenericMatrix GenericMatrix::generic(int n) {
  return GenericMatrix(n, std::vector<CellKind>(static_cast<size_t>(n * n), CellKind::Var));
}

std::string GenericMatrix::to_string() const {
  std::ostringstream os;
  for (int i = n_; i >= 1; --i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) os << ' ';
      switch (kind(i, j)) {
        case CellKind::Zero: os << '0'; break;
        case CellKind::One: os << '1'; break;
        case CellKind::Var: os << ring_->name(var(i, j)); break;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(IdealProvenance p) {
  switch (p) {
    case IdealProvenance::KazhdanLusztig: return "kazhdan-lusztig";
    case IdealProvenance::SchubertDeterminantal: return "schubert-determinantal";
    case IdealProvenance::TangentCone: return "tangent-cone";
    case IdealProvenance::Adhoc: return "adhoc";
  }
  return "adhoc";
}

void Ideal::normalize() {
  std::map<std::string, MultiPoly> unique;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    MultiPoly p = g.primitive_part();
    unique.emplace(p.to_string(), std::move(p));
  }
  generators.clear();
  for (auto& [key, p] : unique) generators.push_back(std::move(p));
  std::stable_sort(generators.begin(), generators.end(), [](const MultiPoly& a, const MultiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.size() < b.size();
  });
}

namespace {

// Minors of a GenericMatrix indexed by (row mask, column mask) over
// bottom-up rows and columns, memoized across all blocks.
class MinorTable {
 public:
  explicit MinorTable(const GenericMatrix& m) : m_(m) {}

  MultiPoly det(uint32_t rows, uint32_t cols) {
    if (rows == 0) return MultiPoly::constant(m_.ring(), Integer(1));
    const uint64_t key = (static_cast<uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MultiPoly result = expand(rows, cols);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool nonzero(int i, int j) const { return m_.kind(i, j) != CellKind::Zero; }

  MultiPoly entry(int i, int j) const {
    if (m_.kind(i, j) == CellKind::One) return MultiPoly::constant(m_.ring(), Integer(1));
    return MultiPoly::variable(m_.ring(), m_.var(i, j));
  }

  static std::vector<int> bits(uint32_t mask) {
    std::vector<int> out;
    for (uint32_t m = mask; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
    return out;
  }

  // Cofactor expansion along the sparsest row or column.
  MultiPoly expand(uint32_t rows, uint32_t cols) {
    const auto rs = bits(rows), cs = bits(cols);
    int best_count = static_cast<int>(cs.size()) + 1;
    bool along_row = true;
    size_t best = 0;
    for (size_t a = 0; a < rs.size(); ++a) {
      int cnt = 0;
      for (int c : cs) cnt += nonzero(rs[a], c);
      if (cnt < best_count) best_count = cnt, best = a, along_row = true;
    }
    for (size_t b = 0; b < cs.size(); ++b) {
      int cnt = 0;
      for (int r : rs) cnt += nonzero(r, cs[b]);
      if (cnt < best_count) best_count = cnt, best = b, along_row = false;
    }
    MultiPoly total(m_.ring());
    if (best_count == 0) return total;
    if (along_row) {
      const int r = rs[best];
      for (size_t b = 0; b < cs.size(); ++b) {
        if (!nonzero(r, cs[b])) continue;
        MultiPoly term = entry(r, cs[b]) * det(rows & ~(1u << (r - 1)), cols & ~(1u << (cs[b] - 1)));
        if ((best + b) % 2) total -= term;
        else total += term;
      }
    } else {
      const int c = cs[best];
      for (size_t a = 0; a < rs.size(); ++a) {
        if (!nonzero(rs[a], c)) continue;
        MultiPoly term = entry(rs[a], c) * det(rows & ~(1u << (rs[a] - 1)), cols & ~(1u << (c - 1)));
        if ((best + a) % 2) total -= term;
        else total += term;
      }
    }
    return total;
  }

  const GenericMatrix& m_;
  std::unordered_map<uint64_t, MultiPoly> memo_;
};

// All k-element submasks of the low `width` bits.
std::vector<uint32_t> subsets(int width, int k) {
  std::vector<uint32_t> out;
  if (k > width) return out;
  if (k == 0) return {0u};
  uint32_t s = (1u << k) - 1;
  const uint32_t limit = 1u << width;
  while (s < limit) {
    out.push_back(s);
    uint32_t c = s & -s, r = s + c;  // Gosper's hack
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

Ideal minor_ideal(const GenericMatrix& z, const Permutation& w, MinorMode mode, IdealProvenance provenance) {
  const int n = w.size();
  if (n > 16) throw InvalidArgument("minor ideals are limited to n <= 16");
  RankMatrix rw(w);
  std::vector<std::pair<int, int>> blocks;  // (s, t) bottom-up
  if (mode == MinorMode::Full) {
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t) blocks.emplace_back(s, t);
  } else {
    for (const Box& e : essential_set(w)) blocks.emplace_back(n - e.row + 1, e.col);
  }
  MinorTable table(z);
  std::vector<std::pair<uint32_t, uint32_t>> wanted;
  for (auto [s, t] : blocks) {
    const int k = rw.bottom_up(s, t) + 1;
    if (k > std::min(s, t)) continue;
    for (uint32_t rows : subsets(s, k))
      for (uint32_t cols : subsets(t, k)) wanted.emplace_back(rows, cols);
  }
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  Ideal ideal{z.ring(), {}, provenance};
  for (auto [rows, cols] : wanted) {
    MultiPoly d = table.det(rows, cols);
    if (!d.is_zero()) ideal.generators.push_back(std::move(d));
  }
  ideal.normalize();
  return ideal;
}

}  // namespace

Ideal kl_generators(const Permutation& v, const Permutation& w, MinorMode mode) {
  if (!bruhat_leq(v, w)) throw NotBruhatComparable(v.to_string() + " is not <= " + w.to_string() + " in Bruhat order");
  return minor_ideal(GenericMatrix::for_permutation(v), w, mode, IdealProvenance::KazhdanLusztig);
}

Ideal schubert_determinantal_generators(const Permutation& w, MinorMode mode) {
  return minor_ideal(GenericMatrix::generic(w.size()), w, mode, IdealProvenance::SchubertDeterminantal);
}

bool is_homogeneous_ideal(const Ideal& ideal) {
  if (std::all_of(ideal.generators.begin(), ideal.generators.end(),
                  [](const MultiPoly& g) { return g.is_homogeneous(); }))
    return true;
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
  return std::all_of(gb.elements().begin(), gb.elements().end(),
                     [](const MultiPoly& g) { return g.is_homogeneous(); });
}

}  // namespace schubreg
