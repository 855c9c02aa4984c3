#include "schubreg/gb.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "schubreg/errors.hpp"

namespace schubreg {

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> priority, std::vector<int> weights)
    : kind_(kind), priority_(std::move(priority)), weights_(std::move(weights)) {
  std::vector<int> seen(priority_.size(), 0);
  for (int v : priority_) {
    if (v < 0 || v >= static_cast<int>(priority_.size()) || seen[static_cast<size_t>(v)]++)
      throw InvalidArgument("variable priority must be a permutation of 0..N-1");
  }
  if (weights_.size() > static_cast<size_t>(kMaxVars)) throw InvalidArgument("too many weights");
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> priority) {
  return MonomialOrder(Kind::Grevlex, std::move(priority), {});
}

MonomialOrder MonomialOrder::lex(std::vector<int> priority) { return MonomialOrder(Kind::Lex, std::move(priority), {}); }

MonomialOrder MonomialOrder::graded_weight(std::vector<int> weights, std::vector<int> priority) {
  return MonomialOrder(Kind::GradedWeight, std::move(priority), std::move(weights));
}

int MonomialOrder::grevlex_tiebreak(const Monomial& a, const Monomial& b) const {
  if (priority_.empty()) return grevlex_compare(a, b);
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    int ea = a.exponent(*it), eb = b.exponent(*it);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_tiebreak(a, b);
    case Kind::Lex:
      if (priority_.empty()) return lex_compare(a, b);
      for (int v : priority_) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case Kind::GradedWeight: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      long wa = 0, wb = 0;
      for (size_t v = 0; v < weights_.size(); ++v) {
        if (weights_[v] == 0) continue;
        wa += static_cast<long>(weights_[v]) * a.exponent(static_cast<int>(v));
        wb += static_cast<long>(weights_[v]) * b.exponent(static_cast<int>(v));
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grevlex_tiebreak(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Grevlex: os << "grevlex"; break;
    case Kind::Lex: os << "lex"; break;
    case Kind::GradedWeight:
      os << "graded-weight(";
      for (size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
      os << ")";
      break;
  }
  return os.str();
}

const Term& leading_term(const MultiPoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw InvalidArgument("zero polynomial has no leading term");
  const auto& t = f.terms();
  if (ord.kind() == MonomialOrder::Kind::Grevlex && ord.priority().empty()) return t.front();
  size_t best = 0;
  for (size_t i = 1; i < t.size(); ++i)
    if (ord.compare(t[i].mono, t[best].mono) > 0) best = i;
  return t[best];
}

// ---------------------------------------------------------------- kernel

namespace {

using Clock = std::chrono::steady_clock;

// Term list sorted decreasing under one order; the working representation of
// the Buchberger loop.
using Terms = std::vector<Term>;

Terms sorted_terms(const MultiPoly& f, const MonomialOrder& ord) {
  Terms t = f.terms();
  if (!(ord.kind() == MonomialOrder::Kind::Grevlex && ord.priority().empty()))
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

void make_primitive(Terms& f) {
  if (f.empty()) return;
  Integer g(0);
  for (const auto& t : f) {
    g = gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  if (f.front().coeff.sign() < 0) g = -g;
  if (g.is_one()) return;
  for (auto& t : f) t.coeff = divexact(t.coeff, g);
}

// a*f - b*m*g where f and g are sorted; the result is sorted.
Terms combine(const Terms& f, size_t f_from, const Integer& a, const Integer& b, const Monomial& m, const Terms& g,
              size_t g_from, const MonomialOrder& ord) {
  Terms out;
  out.reserve(f.size() - f_from + g.size() - g_from);
  size_t i = f_from, j = g_from;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(Term{f[i].mono, a * f[i].coeff});
      ++i;
      continue;
    }
    Monomial gm = m * g[j].mono;
    int c = i == f.size() ? -1 : ord.compare(f[i].mono, gm);
    if (c > 0) {
      out.push_back(Term{f[i].mono, a * f[i].coeff});
      ++i;
    } else if (c < 0) {
      out.push_back(Term{gm, -(b * g[j].coeff)});
      ++j;
    } else {
      Integer coeff = a * f[i].coeff - b * g[j].coeff;
      if (!coeff.is_zero()) out.push_back(Term{gm, std::move(coeff)});
      ++i, ++j;
    }
  }
  return out;
}

struct Reducers {
  const std::vector<Terms>* polys;
  std::vector<size_t> active;

  const Terms* find(const Monomial& m) const {
    for (size_t k : active) {
      const Terms& g = (*polys)[k];
      if (g.front().mono.divides(m)) return &g;
    }
    return nullptr;
  }
};

// Full reduction: the result has no term divisible by a reducer's lead.
Terms reduce(Terms f, const Reducers& reducers, const MonomialOrder& ord) {
  Terms done;
  size_t pos = 0;
  int steps = 0;
  while (pos < f.size()) {
    const Terms* g = reducers.find(f[pos].mono);
    if (!g) {
      done.push_back(f[pos]);
      ++pos;
      continue;
    }
    const Integer& lf = f[pos].coeff;
    const Integer& lg = g->front().coeff;
    Integer d = gcd(lf, lg);
    Integer a = divexact(lg, d), b = divexact(lf, d);
    Monomial m = f[pos].mono.quotient(g->front().mono);
    f = combine(f, pos + 1, a, b, m, *g, 1, ord);
    pos = 0;
    if (!a.is_one())
      for (auto& t : done) t.coeff *= a;
    if (++steps % 16 == 0 || (!f.empty() && f.front().coeff.bit_size() > 512)) {
      // Keep coefficients small: divide both parts by their joint content.
      Integer c(0);
      for (const auto& t : done) c = gcd(c, t.coeff);
      for (const auto& t : f) c = gcd(c, t.coeff);
      if (!c.is_zero() && !c.is_one()) {
        for (auto& t : done) t.coeff = divexact(t.coeff, c);
        for (auto& t : f) t.coeff = divexact(t.coeff, c);
      }
    }
  }
  make_primitive(done);
  return done;
}

Terms spoly(const Terms& f, const Terms& g, const MonomialOrder& ord) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  const Integer& lf = f.front().coeff;
  const Integer& lg = g.front().coeff;
  Integer d = gcd(lf, lg);
  // lg/d * (l/lf) f - lf/d * (l/lg) g
  Monomial mf = l.quotient(f.front().mono), mg = l.quotient(g.front().mono);
  Terms fs;
  fs.reserve(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) fs.push_back(Term{f[i].mono * mf, f[i].coeff});
  return combine(fs, 0, divexact(lg, d), divexact(lf, d), mg, g, 1, ord);
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const GbBudget& budget) : ord_(ord), budget_(budget), start_(Clock::now()) {}

  void run(const std::vector<MultiPoly>& input) {
    Reducers red{&polys_, {}};
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      Terms t = sorted_terms(f, ord_);
      make_primitive(t);
      pending_.push_back({std::move(t), f.degree()});
    }
    // Insert inputs by increasing leading monomial so early reducers are small.
    std::sort(pending_.begin(), pending_.end(),
              [&](const auto& a, const auto& b) { return ord_.less(a.first.front().mono, b.first.front().mono); });
    for (auto& [t, sugar] : pending_) {
      red.active = active_;
      Terms h = reduce(std::move(t), red, ord_);
      if (!h.empty()) add(std::move(h), sugar);
    }
    pending_.clear();
    while (!pairs_.empty()) {
      check_budget();
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& p = pairs_[k];
        const Pair& q = pairs_[best];
        if (p.sugar < q.sugar || (p.sugar == q.sugar && ord_.less(p.lcm, q.lcm))) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_considered;
      Terms s = spoly(polys_[p.i], polys_[p.j], ord_);
      red.active = active_;
      Terms h = reduce(std::move(s), red, ord_);
      ++stats_.pairs_reduced;
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.front().mono.is_one()) {
        polys_.push_back(std::move(h));
        active_ = {polys_.size() - 1};
        pairs_.clear();
        break;
      }
      add(std::move(h), p.sugar);
    }
  }

  std::vector<Terms> reduced_basis() const {
    std::vector<size_t> keep = active_;
    std::sort(keep.begin(), keep.end(),
              [&](size_t a, size_t b) { return ord_.less(polys_[a].front().mono, polys_[b].front().mono); });
    std::vector<Terms> out;
    for (size_t k = 0; k < keep.size(); ++k) {
      Reducers red{&polys_, {}};
      for (size_t o : keep)
        if (o != keep[k]) red.active.push_back(o);
      // Leads are minimal, so only the tail changes.
      out.push_back(reduce_tail_exact(polys_[keep[k]], red));
    }
    return out;
  }

  const GbStats& stats() const { return stats_; }

 private:
  // Reduces the tail of f while keeping its leading term, scaling consistently.
  Terms reduce_tail_exact(const Terms& f, const Reducers& red) const {
    Terms done{f.front()};
    Terms rest(f.begin() + 1, f.end());
    size_t pos = 0;
    while (pos < rest.size()) {
      const Terms* g = red.find(rest[pos].mono);
      if (!g) {
        done.push_back(rest[pos]);
        ++pos;
        continue;
      }
      const Integer& lf = rest[pos].coeff;
      const Integer& lg = g->front().coeff;
      Integer d = gcd(lf, lg);
      Integer a = divexact(lg, d), b = divexact(lf, d);
      Monomial m = rest[pos].mono.quotient(g->front().mono);
      rest = combine(rest, pos + 1, a, b, m, *g, 1, ord_);
      pos = 0;
      if (!a.is_one())
        for (auto& t : done) t.coeff *= a;
    }
    make_primitive(done);
    return done;
  }

  void check_budget() const {
    if (budget_.max_pairs && stats_.pairs_considered >= budget_.max_pairs)
      throw BudgetExceeded("Groebner basis exceeded the S-pair budget of " + std::to_string(budget_.max_pairs));
    if (budget_.max_ms) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
      if (ms > budget_.max_ms)
        throw BudgetExceeded("Groebner basis exceeded the time budget of " + std::to_string(budget_.max_ms) + " ms");
    }
  }

  // Gebauer-Moeller update with the new element h.
  void add(Terms h, int sugar) {
    const size_t hi = polys_.size();
    const Monomial hm = h.front().mono;
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);

    std::vector<Pair> cand;
    for (size_t g : active_) {
      const Monomial& gm = polys_[g].front().mono;
      Monomial l = hm.lcm(gm);
      int s = std::max(sugar + l.degree() - hm.degree(), sugars_[g] + l.degree() - gm.degree());
      cand.push_back(Pair{g, hi, l, s});
    }
    // Chain criterion among new pairs: drop (h,g1) if another (h,g2) has a
    // strictly dividing lcm, or an equal lcm seen earlier. Coprime pairs are
    // kept for this step so they can shadow others, then dropped.
    std::vector<bool> keep(cand.size(), true);
    for (size_t a = 0; a < cand.size(); ++a) {
      for (size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && (!(cand[b].lcm == cand[a].lcm) || b < a)) keep[a] = false;
      }
    }
    std::vector<Pair> fresh;
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (polys_[cand[a].i].front().mono.coprime(hm)) continue;
      fresh.push_back(cand[a]);
    }
    // Old pairs whose lcm is divisible by LT(h) with distinct lcms against h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (hm.divides(p.lcm)) {
        Monomial li = polys_[p.i].front().mono.lcm(hm), lj = polys_[p.j].front().mono.lcm(hm);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      old.push_back(p);
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(p);

    std::vector<size_t> next;
    for (size_t g : active_)
      if (!hm.divides(polys_[g].front().mono)) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
  }

  const MonomialOrder& ord_;
  GbBudget budget_;
  Clock::time_point start_;
  std::vector<std::pair<Terms, int>> pending_;
  std::vector<Terms> polys_;
  std::vector<int> sugars_;
  std::vector<size_t> active_;
  std::vector<Pair> pairs_;
  GbStats stats_;
};

MultiPoly to_poly(const RingPtr& ring, Terms t) { return MultiPoly(ring, std::move(t)); }

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<MultiPoly> elements, GbStats stats)
    : ring_(std::move(ring)), order_(std::move(ord)), elements_(std::move(elements)), stats_(stats) {
  for (const auto& e : elements_) leads_.push_back(leading_term(e, order_).mono);
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const GbBudget& budget) {
  for (const auto& g : ideal.generators)
    if (g.ring() != ideal.ring) throw InvalidArgument("generator ring does not match the ideal ring");
  Buchberger bb(ord, budget);
  bb.run(ideal.generators);
  std::vector<MultiPoly> elements;
  for (auto& t : bb.reduced_basis()) elements.push_back(to_poly(ideal.ring, std::move(t)));
  return GroebnerBasis(ideal.ring, ord, std::move(elements), bb.stats());
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  if (f.ring() != gb.ring()) throw InvalidArgument("normal_form: ring mismatch");
  std::vector<Terms> polys;
  for (const auto& e : gb.elements()) polys.push_back(sorted_terms(e, gb.order()));
  Reducers red{&polys, {}};
  red.active.resize(polys.size());
  std::iota(red.active.begin(), red.active.end(), size_t{0});
  return to_poly(gb.ring(), reduce(sorted_terms(f, gb.order()), red, gb.order()));
}

bool spair_certificate(const GroebnerBasis& gb) {
  std::vector<Terms> polys;
  for (const auto& e : gb.elements()) polys.push_back(sorted_terms(e, gb.order()));
  Reducers red{&polys, {}};
  red.active.resize(polys.size());
  std::iota(red.active.begin(), red.active.end(), size_t{0});
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j)
      if (!reduce(spoly(polys[i], polys[j], gb.order()), red, gb.order()).empty()) return false;
  return true;
}

Ideal initial_ideal(const GroebnerBasis& gb) {
  Ideal out{gb.ring(), {}, IdealProvenance::Adhoc};
  for (const auto& m : gb.leading_monomials()) out.generators.push_back(MultiPoly::monomial(gb.ring(), m));
  return out;
}

// ---------------------------------------------------------------- tangent cone

TangentCone tangent_cone(const Ideal& ideal, const GbBudget& budget) {
  TangentCone out;
  out.ideal = Ideal{ideal.ring, {}, IdealProvenance::TangentCone};
  const bool homogeneous = std::all_of(ideal.generators.begin(), ideal.generators.end(),
                                       [](const MultiPoly& g) { return g.is_homogeneous(); });
  if (homogeneous) {
    out.input_homogeneous = true;
    out.ideal.generators = ideal.generators;
    out.ideal.normalize();
    out.witness_degrees.assign(out.ideal.generators.size(), 0);
    return out;
  }
  const int n = ideal.ring->num_vars();
  if (n + 1 > kMaxVars) throw InvalidArgument("too many variables to homogenize");
  std::vector<std::string> names = ideal.ring->names();
  std::string t_name = "t";
  while (ideal.ring->index_of(t_name) >= 0) t_name = "_" + t_name;
  names.push_back(t_name);
  RingPtr hring = make_ring(std::move(names));

  Ideal hom{hring, {}, IdealProvenance::Adhoc};
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    const int d = g.degree();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      m.set_exponent(n, d - t.mono.degree());
      terms.push_back(Term{m, t.coeff});
    }
    hom.generators.emplace_back(hring, std::move(terms));
  }
  std::vector<int> weights(static_cast<size_t>(n + 1), 0);
  weights[static_cast<size_t>(n)] = 1;
  GroebnerBasis gb = buchberger(hom, MonomialOrder::graded_weight(std::move(weights)), budget);

  std::map<std::string, std::pair<MultiPoly, int>> unique;
  for (const auto& e : gb.elements()) {
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial m = t.mono;
      m.set_exponent(n, 0);
      terms.push_back(Term{m, t.coeff});
    }
    MultiPoly ld = MultiPoly(ideal.ring, std::move(terms)).lowest_degree_form().primitive_part();
    if (ld.is_zero()) continue;
    auto key = ld.to_string();
    auto it = unique.find(key);
    if (it == unique.end()) unique.emplace(key, std::make_pair(ld, e.degree()));
    else it->second.second = std::min(it->second.second, e.degree());
  }
  std::vector<std::pair<MultiPoly, int>> items;
  for (auto& [k, v] : unique) items.push_back(std::move(v));
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.size() < b.first.size();
  });
  for (auto& [p, d] : items) {
    out.ideal.generators.push_back(std::move(p));
    out.witness_degrees.push_back(d);
  }
  return out;
}

Ideal lowest_degree_forms_ideal(const Ideal& ideal, const GbBudget& budget) {
  return tangent_cone(ideal, budget).ideal;
}

// ---------------------------------------------------------------- Hilbert series

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_compare(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

UniPoly shift_q(const UniPoly& p, int e) {
  std::vector<Integer> c(static_cast<size_t>(e), Integer(0));
  for (const auto& x : p.coeffs()) c.push_back(x);
  return UniPoly(std::move(c));
}

UniPoly one_minus_q_to(int d) {
  std::vector<Integer> c(static_cast<size_t>(d) + 1, Integer(0));
  c[0] = Integer(1);
  c[static_cast<size_t>(d)] -= Integer(1);
  return UniPoly(std::move(c));
}

UniPoly hilbert_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UniPoly::constant(Integer(1));
  if (gens.front().is_one()) return UniPoly();
  // Pairwise coprime generators form a regular sequence.
  uint64_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    if (seen & g.support()) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    UniPoly k = UniPoly::constant(Integer(1));
    for (const auto& g : gens) k = k * one_minus_q_to(g.degree());
    return k;
  }
  // Pivot on the variable occurring in the most generators.
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens)
    for (uint64_t m = g.support(); m; m &= m - 1) ++count[static_cast<size_t>(__builtin_ctzll(m))];
  const int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g.exponent(x) > 0 && g.support() != (uint64_t{1} << x)) exps.push_back(g.exponent(x));
  std::sort(exps.begin(), exps.end());
  const int e = exps[exps.size() / 2];
  const Monomial p = Monomial::variable(x, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial h = g;
    h.set_exponent(x, std::max(0, g.exponent(x) - e));
    colon.push_back(h);
  }
  return hilbert_rec(std::move(plus)) + shift_q(hilbert_rec(std::move(colon)), e);
}

}  // namespace

UniPoly hilbert_numerator(const std::vector<Monomial>& generators) { return hilbert_rec(generators); }

UniPoly hilbert_numerator(const Ideal& monomial_ideal, int num_vars) {
  if (monomial_ideal.ring && monomial_ideal.ring->num_vars() != num_vars)
    throw InvalidArgument("variable count does not match the ideal's ring");
  std::vector<Monomial> gens;
  for (const auto& g : monomial_ideal.generators) {
    if (g.is_zero()) continue;
    if (g.size() != 1) throw InvalidArgument("hilbert_numerator needs a monomial ideal; got " + g.to_string());
    gens.push_back(g.terms().front().mono);
  }
  return hilbert_rec(std::move(gens));
}

HilbertData hilbert_data_of_homogeneous(const Ideal& ideal, const GbBudget& budget) {
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw InvalidArgument("hilbert_data_of_homogeneous needs homogeneous generators");
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), budget);
  HilbertData d;
  d.N = ideal.ring->num_vars();
  d.gb_size = gb.elements().size();
  d.tangent_cone_generators = ideal.generators.size();
  d.K = hilbert_numerator(gb.leading_monomials());
  if (d.K.is_zero()) throw InvalidArgument("the ideal is the unit ideal");
  d.height = one_minus_q_multiplicity(d.K);
  d.dim = d.N - d.height;
  d.H = exact_divide(d.K, UniPoly::one_minus_q_pow(d.height));
  return d;
}

HilbertData hilbert_data(const Permutation& v, const Permutation& w, const GbBudget& budget) {
  Ideal kl = kl_generators(v, w);
  TangentCone tc = tangent_cone(kl, budget);
  HilbertData d = hilbert_data_of_homogeneous(tc.ideal, budget);
  d.homogeneous = tc.input_homogeneous;
  const int want_dim = length(w) - length(v);
  const int want_height = length(w0_compose(w));
  if (d.dim != want_dim || d.height != want_height)
    throw InternalError("tangent cone of (" + v.to_string() + ", " + w.to_string() + ") has dim " +
                        std::to_string(d.dim) + " and height " + std::to_string(d.height) + "; expected " +
                        std::to_string(want_dim) + " and " + std::to_string(want_height));
  return d;
}

int regularity_from_K(const UniPoly& K, int height) {
  const int r = K.degree() - height;
  if (K.is_zero() || r < 0)
    throw InternalError("deg K - height is negative (deg K = " + std::to_string(K.degree()) +
                        ", height = " + std::to_string(height) + ")");
  return r;
}

Postulation postulation_number(const UniPoly& K, int num_vars) {
  if (K.is_zero()) throw InvalidArgument("postulation number of the zero module");
  Postulation out;
  const int mult = one_minus_q_multiplicity(K);
  out.dim = num_vars - mult;
  if (out.dim < 0) throw InvalidArgument("K has more (1 - q) factors than variables");
  out.deg_k_minus_dim = K.degree() - out.dim;
  const UniPoly reduced = exact_divide(K, UniPoly::one_minus_q_pow(mult));
  const int d = out.dim;
  const auto& c = reduced.coeffs();
  // P(x) = C(x + d - 1, d - 1) as a polynomial in x; h(n) = sum c_i C(n-i+d-1, d-1)
  // only over i <= n, while p(n) uses P at every i.
  auto binom_poly = [d](long x) {
    if (d == 0) return Integer(0);
    Integer num(1), den(1);
    for (int k = 1; k <= d - 1; ++k) {
      num *= Integer(x + k);
      den *= Integer(k);
    }
    return divexact(num, den);
  };
  for (int n = reduced.degree(); n >= 0; --n) {
    Integer h(0), p(0);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      const long x = n - i;
      if (d == 0) {
        if (x == 0) h += c[static_cast<size_t>(i)];
        continue;
      }
      Integer b = binom_poly(x);
      p += c[static_cast<size_t>(i)] * b;
      if (x >= 0) h += c[static_cast<size_t>(i)] * b;
    }
    if (h != p) {
      out.value = n;
      break;
    }
  }
  return out;
}

}  // namespace schubreg
