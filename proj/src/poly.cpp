#include "schubreg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "schubreg/errors.hpp"

namespace schubreg {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const int> exponents) : Monomial() {
  if (exponents.size() > kMaxVars) throw InvalidArgument("too many variables for a monomial");
  for (size_t v = 0; v < exponents.size(); ++v) set_exponent(static_cast<int>(v), exponents[v]);
}

Monomial Monomial::variable(int var, int power) {
  Monomial m;
  m.set_exponent(var, power);
  return m;
}

void Monomial::set_exponent(int var, int e) {
  if (var < 0 || var >= kMaxVars) throw InvalidArgument("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw InvalidArgument("exponent out of range");
  auto& slot = exps_[static_cast<size_t>(var)];
  degree_ = static_cast<uint16_t>(degree_ - slot + e);
  slot = static_cast<uint8_t>(e);
  if (e) mask_ |= (uint64_t{1} << var);
  else mask_ &= ~(uint64_t{1} << var);
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (uint64_t m = mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r = *this;
  for (uint64_t m = other.mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    int e = exps_[v] - other.exps_[v];
    if (e < 0) throw InternalError("monomial quotient is not exact");
    r.exps_[v] = static_cast<uint8_t>(e);
    if (e == 0) r.mask_ &= ~(uint64_t{1} << v);
  }
  r.degree_ = static_cast<uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (uint64_t m = other.mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    if (other.exps_[v] > r.exps_[v]) {
      r.degree_ = static_cast<uint16_t>(r.degree_ + other.exps_[v] - r.exps_[v]);
      r.exps_[v] = other.exps_[v];
    }
  }
  r.mask_ |= other.mask_;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (uint64_t m = mask_ & other.mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    r.set_exponent(v, std::min(exps_[v], other.exps_[v]));
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (uint64_t m = other.mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    int e = r.exps_[v] + other.exps_[v];
    if (e > kMaxExponent) throw InvalidArgument("exponent overflow");
    r.exps_[v] = static_cast<uint8_t>(e);
  }
  r.mask_ |= other.mask_;
  r.degree_ = static_cast<uint16_t>(degree_ + other.degree_);
  return r;
}

std::vector<std::pair<int, int>> Monomial::sparse() const {
  std::vector<std::pair<int, int>> out;
  for (uint64_t m = mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    out.emplace_back(v, exps_[v]);
  }
  return out;
}

size_t Monomial::hash() const {
  uint64_t h = mask_ * 0x9E3779B97F4A7C15ull;
  for (uint64_t m = mask_; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    h ^= (static_cast<uint64_t>(exps_[v]) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2)) * (v + 1);
  }
  return static_cast<size_t>(h);
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  uint64_t both = a.support() | b.support();
  while (both) {
    int v = 63 - __builtin_clzll(both);
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb ? 1 : -1;
    both &= ~(uint64_t{1} << v);
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  uint64_t both = a.support() | b.support();
  while (both) {
    int v = __builtin_ctzll(both);
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb ? -1 : 1;
    both &= both - 1;
  }
  return 0;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw InvalidArgument("too many variables in ring");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw InvalidArgument("duplicate variable name " + names_[i]);
  }
}

int PolyRing::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

RingPtr make_x_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names));
}

// ---------------------------------------------------------------- MultiPoly

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

// Merge of two canonical term lists: a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size() ? 1 : grevlex_compare(a[i].mono, b[j].mono));
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Integer s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(canonicalize(std::move(terms))) {
  for (const auto& t : terms_) {
    if (ring_->num_vars() < kMaxVars && (t.mono.support() >> ring_->num_vars()) != 0)
      throw InvalidArgument("monomial uses a variable outside the ring");
  }
}

MultiPoly MultiPoly::constant(RingPtr ring, const Integer& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(), c});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int var) {
  if (var < 0 || var >= ring->num_vars()) throw InvalidArgument("variable index out of range");
  MultiPoly p(std::move(ring));
  p.terms_.push_back(Term{Monomial::variable(var), Integer(1)});
  return p;
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Integer& c) {
  return MultiPoly(std::move(ring), std::vector<Term>{Term{m, c}});
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int MultiPoly::degree() const { return terms_.empty() ? kMinusInfinity : terms_.front().mono.degree(); }

int MultiPoly::min_degree() const {
  if (terms_.empty()) throw InvalidArgument("min_degree of the zero polynomial");
  return terms_.back().mono.degree();
}

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

MultiPoly MultiPoly::lowest_degree_form() const {
  if (terms_.empty()) return *this;
  return homogeneous_component(min_degree());
}

Integer MultiPoly::content() const {
  Integer g(0);
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Integer g = content();
  if (terms_.front().coeff.sign() < 0) g = -g;
  if (g.is_one()) return *this;
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, divexact(t.coeff, g)});
  return r;
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
  if (ring_ != other.ring_ && ring_->names() != other.ring_->names())
    throw InvalidArgument("polynomials belong to different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_same_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_same_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back(Term{m, std::move(c)});
  return MultiPoly(a.ring_, std::move(terms));
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly r = *this;  // multiplication by a monomial preserves grevlex order
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly MultiPoly::swap_variables(int i, int j) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) {
    int ei = t.mono.exponent(i), ej = t.mono.exponent(j);
    t.mono.set_exponent(i, ej);
    t.mono.set_exponent(j, ei);
  }
  return MultiPoly(ring_, std::move(terms));
}

Integer MultiPoly::evaluate(std::span<const Integer> point) const {
  if (static_cast<int>(point.size()) != ring_->num_vars())
    throw InvalidArgument("evaluation point has the wrong dimension");
  Integer total(0);
  for (const auto& t : terms_) {
    Integer v = t.coeff;
    for (auto [var, e] : t.mono.sparse())
      for (int k = 0; k < e; ++k) v *= point[static_cast<size_t>(var)];
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::rebased(RingPtr ring) const {
  if (ring->num_vars() < ring_->num_vars()) {
    uint64_t allowed = ring->num_vars() >= 64 ? ~uint64_t{0} : ((uint64_t{1} << ring->num_vars()) - 1);
    for (const auto& t : terms_)
      if (t.mono.support() & ~allowed) throw InvalidArgument("cannot rebase: variable out of range");
  }
  MultiPoly r(std::move(ring));
  r.terms_ = terms_;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Integer mag = c.abs();
    auto vars = t.mono.sparse();
    bool wrote = false;
    if (!mag.is_one() || vars.empty()) {
      os << mag.to_string();
      wrote = true;
    }
    for (auto [v, e] : vars) {
      if (wrote) os << '*';
      os << ring_->name(v);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return a.ring_->names() == b.ring_->names();
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly t = term();
    r = negate ? -t : t;
    while (true) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else break;
    }
    return r;
  }

  MultiPoly term() {
    MultiPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      MultiPoly r = MultiPoly::constant(ring_, Integer(1));
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, Integer::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(RingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).parse(); }

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(std::vector<Integer>{c}); }

UniPoly UniPoly::one_minus_q_pow(int k) {
  if (k < 0) throw InvalidArgument("negative power of (1 - q)");
  // binomial expansion sum (-1)^i C(k, i) q^i
  std::vector<Integer> c(static_cast<size_t>(k) + 1);
  Integer binom(1);
  for (int i = 0; i <= k; ++i) {
    c[static_cast<size_t>(i)] = (i % 2 == 0) ? binom : -binom;
    binom = divexact(binom * Integer(k - i), Integer(i + 1));
  }
  return UniPoly(std::move(c));
}

int UniPoly::degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }

Integer UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Integer(0);
  return coeffs_[static_cast<size_t>(k)];
}

Integer UniPoly::evaluate(const Integer& q) const {
  Integer r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

bool UniPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.sign() >= 0; });
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::vector<Integer> UniPoly::series_over_one_minus_q(int k, int count) const {
  // Dividing by (1 - q) once is a prefix sum.
  std::vector<Integer> s(static_cast<size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) s[static_cast<size_t>(i)] = coeff(i);
  for (int rep = 0; rep < k; ++rep)
    for (int i = 1; i < count; ++i) s[static_cast<size_t>(i)] += s[static_cast<size_t>(i - 1)];
  return s;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Integer mag = c.abs();
    if (k == 0) {
      os << mag.to_string();
      continue;
    }
    if (!mag.is_one()) os << mag.to_string();
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UniPoly exact_divide(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (num.is_zero()) return UniPoly();
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) throw InternalError("inexact polynomial division: " + num.to_string() + " / " + den.to_string());
  std::vector<Integer> rem = num.coeffs();
  std::vector<Integer> quo(static_cast<size_t>(dn - dd) + 1);
  const Integer& lead = den.coeffs().back();
  for (int k = dn - dd; k >= 0; --k) {
    Integer c = rem[static_cast<size_t>(k + dd)];
    if (c.is_zero()) continue;
    Integer qk;
    try {
      qk = divexact(c, lead);
    } catch (const std::domain_error&) {
      throw InternalError("inexact polynomial division (coefficient)");
    }
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= qk * den.coeffs()[static_cast<size_t>(j)];
    quo[static_cast<size_t>(k)] = std::move(qk);
  }
  for (const auto& r : rem)
    if (!r.is_zero())
      throw InternalError("inexact polynomial division: " + num.to_string() + " / " + den.to_string());
  return UniPoly(std::move(quo));
}

int one_minus_q_multiplicity(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("multiplicity of a root of the zero polynomial");
  UniPoly cur = p;
  const UniPoly factor{1, -1};
  int k = 0;
  while (cur.evaluate(Integer(1)).is_zero()) {
    cur = exact_divide(cur, factor);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------- divided differences

MultiPoly divide_by_variable_difference(const MultiPoly& f, int i, int j) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) return f;
  // f = sum_k x_i^k c_k with c_k free of x_i.
  std::map<int, std::vector<Term>> slices;
  for (const auto& t : f.terms()) {
    Term stripped = t;
    int e = t.mono.exponent(i);
    stripped.mono.set_exponent(i, 0);
    slices[e].push_back(std::move(stripped));
  }
  int top = slices.rbegin()->first;
  const MultiPoly xj = MultiPoly::variable(ring, j);
  // q_{k-1} = c_k + x_j q_k, remainder c_0 + x_j q_0.
  MultiPoly q(ring);
  std::vector<Term> quotient_terms;
  for (int k = top; k >= 1; --k) {
    MultiPoly ck(ring);
    if (auto it = slices.find(k); it != slices.end()) ck = MultiPoly(ring, it->second);
    q = ck + xj * q;
    Monomial shift = Monomial::variable(i, k - 1);
    for (const auto& t : q.terms()) quotient_terms.push_back(Term{t.mono * shift, t.coeff});
  }
  MultiPoly c0(ring);
  if (auto it = slices.find(0); it != slices.end()) c0 = MultiPoly(ring, it->second);
  MultiPoly remainder = c0 + xj * q;
  if (!remainder.is_zero()) throw InternalError("inexact division by a variable difference");
  return MultiPoly(ring, std::move(quotient_terms));
}

MultiPoly divided_difference_pi(const MultiPoly& f, int i) {
  const RingPtr& ring = f.ring();
  if (i < 1 || i >= ring->num_vars()) throw InvalidArgument("divided difference index out of range");
  const int a = i - 1, b = i;  // 0-based x_i, x_{i+1}
  MultiPoly one = MultiPoly::constant(ring, Integer(1));
  MultiPoly numerator = (one - MultiPoly::variable(ring, b)) * f -
                        (one - MultiPoly::variable(ring, a)) * f.swap_variables(a, b);
  return divide_by_variable_difference(numerator, a, b);
}

UniPoly substitute_all_1mq(const MultiPoly& f) {
  // group by total degree: sum_d c_d (1 - q)^d
  std::map<int, Integer> by_degree;
  for (const auto& t : f.terms()) by_degree[t.mono.degree()] += t.coeff;
  UniPoly r;
  for (const auto& [d, c] : by_degree) {
    if (c.is_zero()) continue;
    r += UniPoly::constant(c) * UniPoly::one_minus_q_pow(d);
  }
  return r;
}

}  // namespace schubreg
