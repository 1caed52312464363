#pragma once

#include <optional>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

struct DicksonSpec {
  Exponent n = 1;  ///< degree, >= 1
  Rational a;      ///< parameter
};

/// D_n(x, a) = sum_{i=0}^{floor(n/2)} n/(n-i) * C(n-i, i) * (-a)^i * x^(n-2i).
/// Throws DomainError for n = 0.
SparsePoly dickson(const DicksonSpec& spec);

struct DicksonMatch {
  Rational u;
  Rational v;
  Rational gamma;
  /// The shifted polynomial is a pure power x^n; gamma = 0 is reported and the
  /// term-count bound does not apply.
  bool gamma_zero = false;
};

/// Finds rationals u != 0, v, gamma with D_n(x, gamma) = f(u x + v), n = deg f.
///
/// u comes from A_1 u^n = 1 (positive root tried first when n is even), v from
/// the vanishing x^(n-1) coefficient, gamma from the x^(n-2) coefficient; the
/// candidate is then checked by full comparison. For n = 1 every gamma works
/// and gamma = 1 is reported. Throws DomainError for constant f.
std::optional<DicksonMatch> dickson_match(const SparsePoly& f);

}  // namespace quadcomp
