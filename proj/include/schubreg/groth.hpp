#pragma once

#include <map>
#include <mutex>
#include <unordered_map>

#include "schubreg/perm.hpp"
#include "schubreg/poly.hpp"

namespace schubreg {

/// Which ascent to descend through when deriving G_u from G_{u s_i}.
enum class AscentChoice { First, Last };

/// Memo table of Grothendieck polynomials for one S_n, computed by isobaric
/// divided differences from G_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1}.
///
/// Lookups and inserts are guarded by a mutex; concurrent callers that race
/// on the same permutation both compute it, and the results are identical.
class GrothendieckTable {
 public:
  explicit GrothendieckTable(int n);

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  MultiPoly get(const Permutation& u);
  size_t cached() const;

 private:
  int n_;
  RingPtr ring_;
  mutable std::mutex mutex_;
  std::unordered_map<Permutation, MultiPoly, PermutationHash> cache_;
};

/// G_u using a process-wide table for S_n (first ascent at every step).
MultiPoly grothendieck(const Permutation& u);
/// G_u recomputed along the chain picked by `choice`, without memoization.
MultiPoly grothendieck_along_chain(const Permutation& u, AscentChoice choice);

int groth_degree(const Permutation& u);
/// Lowest degree of G_u; equals l(u).
int groth_min_degree(const Permutation& u);
/// G_u(1 - q, ..., 1 - q).
UniPoly groth_spec_1mq(const Permutation& u);

/// deg G_u for vexillary u as l(u) plus the level-diagonal sum of the rank
/// filling of w0*u. Throws InvalidArgument if u contains 2143.
int vexillary_degree_formula(const Permutation& u);

}  // namespace schubreg
