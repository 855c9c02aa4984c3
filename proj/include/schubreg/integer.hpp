#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace schubreg {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t never touch GMP; arithmetic promotes to an
/// mpz_class on overflow and demotes back whenever the result fits again.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : small_(v) {}
  Integer(long v) : small_(v) {}
  Integer(long long v) : small_(static_cast<int64_t>(v)) {}
  explicit Integer(const mpz_class& z);

  Integer(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  bool fits_int64() const { return !big_; }
  int sign() const;
  int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;
  /// Approximate size in bits, used to decide when to strip contents.
  size_t bit_size() const;

  Integer abs() const;
  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  /// Nonnegative gcd; gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b);
  /// a / b where b is known to divide a; throws std::domain_error otherwise.
  friend Integer divexact(const Integer& a, const Integer& b);

 private:
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::string to_string(const Integer& x);

}  // namespace schubreg
