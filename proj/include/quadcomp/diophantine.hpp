#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quadcomp/decomposition.hpp"
#include "quadcomp/polynomial.hpp"

namespace quadcomp {

/// f = A_1 x^n_1 + ... + A_l x^n_l + A_{l+1}, n_1 > ... > n_l > 0, A_1..A_l != 0.
class LacunaryProfile {
 public:
  /// `coefficients` holds A_1..A_{l+1} (the last one is the constant and may be
  /// zero); `exponents` holds n_1..n_l. Throws DomainError on bad shape.
  LacunaryProfile(std::vector<Rational> coefficients, std::vector<Exponent> exponents);

  /// Throws DomainError for constant f.
  static LacunaryProfile from_poly(const SparsePoly& f);

  std::size_t l() const { return exponents_.size(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

 private:
  std::vector<Rational> coefficients_;
  std::vector<Exponent> exponents_;
};

enum class FinitenessStatus { FiniteByTheoremA, FiniteByTheoremB, NotApplicable };

std::string status_name(FinitenessStatus status);

struct Condition {
  std::string name;
  bool ok = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Finite* iff every condition holds; the condition list is always complete.
struct FinitenessVerdict {
  FinitenessStatus status = FinitenessStatus::NotApplicable;
  std::vector<Condition> conditions;
  friend bool operator==(const FinitenessVerdict&, const FinitenessVerdict&) = default;
};

/// Hypotheses for f(x) = g(y) with two quadrinomials: both exponent gcds are 1,
/// exponent triples differ, n1 >= 9 and m1 >= 9. Constants are ignored.
FinitenessVerdict theorem_a_verdict(const Quadrinomial& f, const Quadrinomial& g);

/// Hypotheses for an l-term lacunary f against a trinomial g = E y^m1 + F y^m2 + G y^m3:
/// l >= 4, gcd(n_i) = 1, gcd(m_i) = 1, n_1 >= 4, m_1 >= 2l(l-1).
/// Throws DomainError if g is not three terms at positive powers.
FinitenessVerdict theorem_b_verdict(const LacunaryProfile& f, const SparsePoly& g);

inline constexpr std::int64_t kDefaultSearchLimit = 1'000'000;

using Solution = std::pair<std::int64_t, std::int64_t>;

/// All integer (x, y) with |x|, |y| <= bound and f(x) = g(y), sorted by (x, y).
/// g is tabulated once into a hash map keyed by exact values and f is probed
/// against it. Throws DomainError for constant inputs, bound < 1, or
/// bound > max_bound.
std::vector<Solution> search_solutions(const SparsePoly& f, const SparsePoly& g, std::int64_t bound,
                                       std::int64_t max_bound = kDefaultSearchLimit);

}  // namespace quadcomp
