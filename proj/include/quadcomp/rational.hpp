#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace quadcomp {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is always 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with an optional leading sign on p.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  /// Throws DomainError on zero.
  Rational inverse() const;
  /// Integer power; negative exponents invert (zero base then throws).
  Rational pow(long exponent) const;

  /// Exact k-th root if one exists in Q. For even k only the non-negative root
  /// is returned.
  std::optional<Rational> exact_root(unsigned long k) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Always "p/q", integers included ("3/1").
  std::string to_fraction_string() const;

  std::size_t hash() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_bigint(const BigInt& value);

/// Positive divisors of |value| in ascending order. |value| must be non-zero.
std::vector<BigInt> positive_divisors(const BigInt& value);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace quadcomp

template <>
struct std::hash<quadcomp::Rational> {
  std::size_t operator()(const quadcomp::Rational& r) const noexcept { return r.hash(); }
};
