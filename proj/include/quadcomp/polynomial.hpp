#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "quadcomp/rational.hpp"

namespace quadcomp {

using Exponent = std::uint32_t;

/// Univariate polynomial over Q stored as exponent -> non-zero coefficient.
///
/// The zero polynomial has no terms and no degree: `degree()` returns
/// std::nullopt for it rather than a negative integer.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  SparsePoly() = default;
  SparsePoly(std::initializer_list<std::pair<const Exponent, Rational>> terms);
  explicit SparsePoly(TermMap terms);

  static SparsePoly constant(const Rational& c);
  static SparsePoly monomial(const Rational& c, Exponent e);
  static SparsePoly x() { return monomial(1, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  std::optional<Exponent> degree() const;
  /// Degree of a non-zero polynomial; throws DomainError on zero.
  Exponent deg() const;
  /// Smallest exponent with a non-zero coefficient; throws DomainError on zero.
  Exponent valuation() const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading_coefficient() const;
  Rational coefficient(Exponent e) const;
  Rational constant_term() const { return coefficient(0); }

  /// Number of terms at exponents > 0.
  std::size_t positive_term_count() const;

  void set_coefficient(Exponent e, const Rational& c);
  void add_to_coefficient(Exponent e, const Rational& c);

  Rational evaluate(const Rational& at) const;
  SparsePoly derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  SparsePoly monic() const;
  SparsePoly pow(unsigned long k) const;
  /// Divides out x^valuation().
  SparsePoly strip_x_power() const;

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

 private:
  TermMap terms_;
};

/// Total order used to sort outputs deterministically: by degree (zero first),
/// then term by term from the top exponent down, exponent before coefficient.
std::strong_ordering canonical_compare(const SparsePoly& a, const SparsePoly& b);

struct DivisionResult {
  SparsePoly quotient;
  SparsePoly remainder;
};

/// Euclidean division over Q. Throws DomainError when the divisor is zero.
DivisionResult divide(const SparsePoly& dividend, const SparsePoly& divisor);

/// Monic gcd over Q; gcd(0, 0) = 0.
SparsePoly gcd(const SparsePoly& a, const SparsePoly& b);

/// Exact quotient; throws DomainError if `divisor` does not divide `dividend`.
SparsePoly exact_divide(const SparsePoly& dividend, const SparsePoly& divisor);

/// g(h(x)).
SparsePoly compose(const SparsePoly& g, const SparsePoly& h);

/// Invertible affine map x -> u*x + v.
class LinearMap {
 public:
  /// Throws DomainError when u = 0.
  LinearMap(Rational u, Rational v);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  LinearMap inverse() const { return LinearMap(u_.inverse(), -v_ / u_); }
  SparsePoly as_poly() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Rational u_;
  Rational v_;
};

/// g(u*x + v), expanded term by term with the binomial theorem.
SparsePoly linear_substitute(const SparsePoly& g, const LinearMap& m);

/// Debug rendering, e.g. "x^3 - 1/2*x + 4". The CLI text format lives in poly_io.
std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace quadcomp
