#include "schubreg/groth.hpp"

#include <memory>
#include <vector>

#include "schubreg/errors.hpp"
#include "schubreg/shapes.hpp"

namespace schubreg {

namespace {

MultiPoly staircase(const RingPtr& ring, int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set_exponent(i - 1, n - i);
  return MultiPoly::monomial(ring, m);
}

// i with u(i) < u(i+1), i.e. l(u s_i) > l(u); 0 if u = w0.
int pick_ascent(const Permutation& u, AscentChoice choice) {
  const int n = u.size();
  if (choice == AscentChoice::First) {
    for (int i = 1; i < n; ++i)
      if (u(i) < u(i + 1)) return i;
  } else {
    for (int i = n - 1; i >= 1; --i)
      if (u(i) < u(i + 1)) return i;
  }
  return 0;
}

}  // namespace

GrothendieckTable::GrothendieckTable(int n) : n_(n), ring_(make_x_ring(n)) {
  cache_.emplace(Permutation::longest(n), staircase(ring_, n));
}

MultiPoly GrothendieckTable::get(const Permutation& u) {
  if (u.size() != n_) throw InvalidArgument("permutation size does not match the table");
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(u); it != cache_.end()) return it->second;
  }
  // Walk up through first ascents until a cached ancestor, then come back down.
  std::vector<std::pair<Permutation, int>> path;
  Permutation cur = u;
  MultiPoly poly(ring_);
  while (true) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(cur); it != cache_.end()) {
        poly = it->second;
        break;
      }
    }
    int i = pick_ascent(cur, AscentChoice::First);
    path.emplace_back(cur, i);
    cur = cur.times_simple(i);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    poly = divided_difference_pi(poly, it->second);
    std::lock_guard lock(mutex_);
    cache_.emplace(it->first, poly);
  }
  return poly;
}

size_t GrothendieckTable::cached() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

MultiPoly grothendieck(const Permutation& u) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<GrothendieckTable>> tables;
  GrothendieckTable* table;
  {
    std::lock_guard lock(registry_mutex);
    auto& slot = tables[u.size()];
    if (!slot) slot = std::make_unique<GrothendieckTable>(u.size());
    table = slot.get();
  }
  return table->get(u);
}

MultiPoly grothendieck_along_chain(const Permutation& u, AscentChoice choice) {
  const int n = u.size();
  RingPtr ring = make_x_ring(n);
  std::vector<int> steps;
  Permutation cur = u;
  for (int i = pick_ascent(cur, choice); i != 0; i = pick_ascent(cur, choice)) {
    steps.push_back(i);
    cur = cur.times_simple(i);
  }
  MultiPoly poly = staircase(ring, n);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) poly = divided_difference_pi(poly, *it);
  return poly;
}

int groth_degree(const Permutation& u) { return grothendieck(u).degree(); }

int groth_min_degree(const Permutation& u) { return grothendieck(u).min_degree(); }

UniPoly groth_spec_1mq(const Permutation& u) { return substitute_all_1mq(grothendieck(u)); }

int vexillary_degree_formula(const Permutation& u) {
  if (!is_vexillary(u)) throw InvalidArgument(u.to_string() + " is not vexillary (contains 2143)");
  return length(u) + level_diagonal_sum(rank_filling(w0_compose(u)));
}

}  // namespace schubreg
