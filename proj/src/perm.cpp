#include "schubreg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "schubreg/errors.hpp"

namespace schubreg {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n == 0) throw InvalidArgument("permutation must be nonempty");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw InvalidArgument("not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty permutation");
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
      w.push_back(std::stoi(std::string(tok)));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> r(word_.size());
  for (int i = 1; i <= size(); ++i) r[static_cast<size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(r));
}

Permutation Permutation::times_simple(int i) const {
  std::vector<int> r = word_;
  std::swap(r[static_cast<size_t>(i - 1)], r[static_cast<size_t>(i)]);
  return Permutation(std::move(r));
}

Permutation Permutation::simple_times(int i) const {
  std::vector<int> r = word_;
  for (int& x : r) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return Permutation(std::move(r));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool commas = size() > 9;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (commas && i > 0) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

uint64_t Permutation::key() const {
  uint64_t k = 0;
  for (int x : word_) k = (k << 4) | static_cast<uint64_t>(x - 1);
  return k ^ (static_cast<uint64_t>(word_.size()) << 60);
}

size_t PermutationHash::operator()(const Permutation& p) const {
  size_t h = 0;
  for (int x : p.word()) h = h * 31 + static_cast<size_t>(x);
  return h;
}

bool Diagram::contains(const Box& b) const { return std::binary_search(boxes.begin(), boxes.end(), b); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int length(const Permutation& w) {
  int inv = 0;
  const auto& a = w.word();
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

int sw_rank(const Permutation& u, int a, int j) {
  const int n = u.size();
  if (a < 1 || a > n || j < 1 || j > n) throw InvalidArgument("rank index out of range");
  int r = 0;
  for (int h = 1; h <= j; ++h)
    if (u(h) >= a) ++r;
  return r;
}

RankMatrix::RankMatrix(const Permutation& u) : n_(u.size()), data_(static_cast<size_t>(n_ * n_)) {
  // R(a, j) = R(a, j-1) + [u(j) >= a]
  for (int a = 1; a <= n_; ++a) {
    int r = 0;
    for (int j = 1; j <= n_; ++j) {
      if (u(j) >= a) ++r;
      data_[static_cast<size_t>((a - 1) * n_ + (j - 1))] = static_cast<uint8_t>(r);
    }
  }
}

bool RankMatrix::dominated_by(const RankMatrix& other) const {
  for (size_t k = 0; k < data_.size(); ++k)
    if (data_[k] > other.data_[k]) return false;
  return true;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw InvalidArgument("Bruhat comparison of permutations of different sizes");
  return RankMatrix(v).dominated_by(RankMatrix(w));
}

std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw NotBruhatComparable(v.to_string() + " is not <= " + w.to_string() + " in Bruhat order");
  // Downward closure from w through lower covers, filtered by v <= u.
  RankMatrix rv(v);
  std::vector<Permutation> out;
  std::vector<Permutation> frontier{w};
  std::unordered_set<uint64_t> seen{w.key()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& u : frontier) {
      out.push_back(u);
      for (const auto& c : bruhat_lower_covers(u)) {
        if (!rv.dominated_by(RankMatrix(c))) continue;
        uint64_t k = c.key();
        if (!seen.insert(k).second) continue;
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<Permutation> bruhat_lower_covers(const Permutation& w) {
  // w * t_{ij} covered by w iff w(i) > w(j) and no k in (i, j) with w(j) < w(k) < w(i).
  std::vector<Permutation> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) < w(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k) blocked = w(k) > w(j) && w(k) < w(i);
      if (blocked) continue;
      std::vector<int> word = w.word();
      std::swap(word[static_cast<size_t>(i - 1)], word[static_cast<size_t>(j - 1)]);
      out.emplace_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  const int n = w.size(), k = p.size();
  if (k > n) return false;
  std::vector<int> chosen;  // positions in w (1-based)
  chosen.reserve(static_cast<size_t>(k));
  // Backtracking: extend a partial embedding one pattern letter at a time,
  // checking relative order against every earlier letter.
  std::function<bool(int)> extend = [&](int start) -> bool {
    const int m = static_cast<int>(chosen.size());
    if (m == k) return true;
    for (int pos = start; pos <= n - (k - m) + 1; ++pos) {
      bool ok = true;
      for (int t = 0; t < m && ok; ++t) ok = (w(chosen[static_cast<size_t>(t)]) < w(pos)) == (p(t + 1) < p(m + 1));
      if (!ok) continue;
      chosen.push_back(pos);
      if (extend(pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(1);
}

bool is_covexillary(const Permutation& w) { return !contains_pattern(w, Permutation({3, 4, 1, 2})); }

bool is_vexillary(const Permutation& w) { return !contains_pattern(w, Permutation({2, 1, 4, 3})); }

Diagram diagram(const Permutation& w) {
  const int n = w.size();
  Permutation winv = w.inverse();
  Diagram d{n, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i > w(j) && j < winv(i)) d.boxes.push_back(Box{i, j});
  return d;  // generated in sorted order
}

std::vector<Box> essential_set(const Permutation& w) {
  Diagram d = diagram(w);
  std::vector<Box> e;
  for (const Box& b : d.boxes)
    if (!d.contains(Box{b.row - 1, b.col}) && !d.contains(Box{b.row, b.col + 1})) e.push_back(b);
  return e;
}

CodeAndShape code_and_lambda(const Permutation& w) {
  const int n = w.size();
  Diagram d = diagram(w);
  std::vector<int> rows(static_cast<size_t>(n) + 1, 0);
  for (const Box& b : d.boxes) ++rows[static_cast<size_t>(b.row)];
  CodeAndShape out;
  for (int i = n; i >= 1; --i) out.code.push_back(rows[static_cast<size_t>(i)]);
  for (int c : out.code)
    if (c > 0) out.lambda.parts.push_back(c);
  std::sort(out.lambda.parts.begin(), out.lambda.parts.end(), std::greater<>());
  return out;
}

Permutation w0_compose(const Permutation& u) {
  std::vector<int> r = u.word();
  for (int& x : r) x = u.size() + 1 - x;
  return Permutation(std::move(r));
}

std::string format_diagram(const Permutation& w, const Diagram& d) {
  const int n = w.size();
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      char c = '.';
      if (w(j) == i) c = '*';
      else if (d.contains(Box{i, j})) c = '#';
      os << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace schubreg
