#include "schubreg/integer.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schubreg {

namespace {

mpz_class make_mpz(int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Integer::Integer(const mpz_class& z) : big_(std::make_unique<mpz_class>(z)) { normalize(); }

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
  if (this != &other) {
    small_ = other.small_;
    big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
  }
  return *this;
}

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal");
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(mpz_class(digits, 10));
}

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : make_mpz(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

size_t Integer::bit_size() const {
  if (big_) return mpz_sizeinbase(big_->get_mpz_t(), 2);
  uint64_t m = small_ < 0 ? ~static_cast<uint64_t>(small_) + 1 : static_cast<uint64_t>(small_);
  return m == 0 ? 0 : 64 - static_cast<size_t>(__builtin_clzll(m));
}

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

Integer Integer::operator-() const {
  if (!big_) {
    int64_t r;
    if (!__builtin_sub_overflow(int64_t{0}, small_, &r)) return Integer(static_cast<long long>(r));
  }
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  mpz_class z = to_mpz() + rhs.to_mpz();
  big_ = std::make_unique<mpz_class>(std::move(z));
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  mpz_class z = to_mpz() - rhs.to_mpz();
  big_ = std::make_unique<mpz_class>(std::move(z));
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  mpz_class z = to_mpz() * rhs.to_mpz();
  big_ = std::make_unique<mpz_class>(std::move(z));
  normalize();
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    return Integer(static_cast<long long>(std::gcd(a.small_, b.small_)));
  }
  mpz_class g;
  mpz_class za = a.to_mpz(), zb = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  return Integer(g);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    if (a.small_ % b.small_ != 0) throw std::domain_error("inexact integer division");
    return Integer(static_cast<long long>(a.small_ / b.small_));
  }
  mpz_class za = a.to_mpz(), zb = b.to_mpz();
  if (!mpz_divisible_p(za.get_mpz_t(), zb.get_mpz_t()))
    throw std::domain_error("inexact integer division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  return Integer(q);
}

std::string to_string(const Integer& x) { return x.to_string(); }

}  // namespace schubreg
