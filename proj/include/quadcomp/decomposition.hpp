#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

/// f = A x^n1 + B x^n2 + C x^n3 + D with ABC != 0 and n1 > n2 > n3 > 0.
class Quadrinomial {
 public:
  /// Throws DomainError if the invariants fail.
  Quadrinomial(Rational a, Rational b, Rational c, Rational d, Exponent n1, Exponent n2, Exponent n3);

  /// Reads a polynomial with exactly three terms at positive powers plus an
  /// optional constant. Throws DomainError for any other shape.
  static Quadrinomial from_poly(const SparsePoly& f);
  /// True when from_poly would succeed.
  static bool has_shape(const SparsePoly& f);

  SparsePoly to_poly() const;

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  Exponent n1() const { return n1_; }
  Exponent n2() const { return n2_; }
  Exponent n3() const { return n3_; }

 private:
  Rational a_, b_, c_, d_;
  Exponent n1_, n2_, n3_;
};

namespace case_tag {
/// h = x^d with d | gcd(n1, n2, n3).
struct Cyclic {
  Exponent d = 0;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
/// deg g = 1 or deg h = 1.
struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
/// g = A x^2 + D, h = x^(n1/2) + B/(2A) x^(n3/2).
struct SymmetricSquare {
  friend bool operator==(const SymmetricSquare&, const SymmetricSquare&) = default;
};
/// g = A x (x - c^2) + D, h = x^(2 n3) + c x^n3.
struct CaseFour {
  Rational c;
  friend bool operator==(const CaseFour&, const CaseFour&) = default;
};
/// Decomposition of a polynomial that is not a quadrinomial.
struct Generic {
  friend bool operator==(const Generic&, const Generic&) = default;
};
}  // namespace case_tag

using CaseTag = std::variant<case_tag::Cyclic, case_tag::Trivial, case_tag::SymmetricSquare, case_tag::CaseFour,
                             case_tag::Generic>;

std::string case_name(const CaseTag& tag);

/// f = g(h(x)) with h monic and h(0) = 0.
struct Decomposition {
  SparsePoly g;
  SparsePoly h;
  CaseTag tag;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Sort key for result sets: deg h, then h, then g (see canonical_compare).
bool canonical_less(const Decomposition& a, const Decomposition& b);

/// Every decomposition f = g o h with h monic, h(0) = 0 and 1 < deg h < deg f,
/// found by solving for h from the top coefficients of f and verifying through
/// h-adic expansion. Tags follow the quadrinomial cases when f has that shape,
/// otherwise Generic. Throws DomainError when deg f < 2.
std::vector<Decomposition> decompose_oracle(const SparsePoly& f);

/// The two trivial canonical decompositions (h = x, and deg g = 1) of a
/// non-constant f. For deg f = 1 they coincide and one entry is returned.
std::vector<Decomposition> trivial_decompositions(const SparsePoly& f);

/// All non-trivial rational decompositions of q, read directly off the case
/// conditions of the quadrinomial classification.
std::vector<Decomposition> classify_quadrinomial(const Quadrinomial& q);

struct CriticalValueWitness {
  Rational beta;   ///< rational root of g'
  Rational gamma;  ///< g(beta)
  Exponent gcd_degree = 0;  ///< deg gcd(f - gamma, f') for f = g o h
};

/// For f = g o h, picks the smallest rational critical point beta of g and
/// reports gamma = g(beta) with deg gcd(f - gamma, f') (always >= deg h).
/// Returns nullopt when g' has no rational root. Throws DomainError if deg g <= 1.
std::optional<CriticalValueWitness> critical_value_witness(const SparsePoly& g, const SparsePoly& h);

struct TrinomialSquareReport {
  bool is_trinomial_square_shape = false;  ///< monic f^2 == x^n1 + A x^n2 + B, A B != 0
  std::size_t f_term_count = 0;
};

/// Squares f; if f^2 has the shape x^n1 + A x^n2 + B then f must be a binomial.
/// Throws DomainError for constant f.
TrinomialSquareReport trinomial_square_check(const SparsePoly& f);

/// Rational roots of p in ascending order, by the divisor test on the integer
/// polynomial obtained after clearing denominators.
std::vector<Rational> rational_roots(const SparsePoly& p);

}  // namespace quadcomp
