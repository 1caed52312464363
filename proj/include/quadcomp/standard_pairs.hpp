#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

namespace pair_kind {
/// (x^m, a x^r p(x)^m); r < m, gcd(r, m) = 1, r + deg p > 0.
struct First {
  Exponent m = 1;
  Exponent r = 0;
  Rational a;
  SparsePoly p;
  friend bool operator==(const First&, const First&) = default;
};
/// (x^2, (a x^2 + b) p(x)^2).
struct Second {
  Rational a;
  Rational b;
  SparsePoly p;
  friend bool operator==(const Second&, const Second&) = default;
};
/// (D_m(x, a^n), D_n(x, a^m)); gcd(m, n) = 1.
struct Third {
  Exponent m = 1;
  Exponent n = 1;
  Rational a;
  friend bool operator==(const Third&, const Third&) = default;
};
/// (a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b)); gcd(m, n) = 2.
struct Fourth {
  Exponent m = 2;
  Exponent n = 2;
  Rational a;
  Rational b;
  friend bool operator==(const Fourth&, const Fourth&) = default;
};
/// ((a x^2 - 1)^3, 3x^4 - 4x^3).
struct Fifth {
  Rational a;
  friend bool operator==(const Fifth&, const Fifth&) = default;
};
}  // namespace pair_kind

using PairParams = std::variant<pair_kind::First, pair_kind::Second, pair_kind::Third, pair_kind::Fourth,
                                pair_kind::Fifth>;

struct StandardPair {
  PairParams params;
  bool switched = false;

  friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

/// "first" .. "fifth".
std::string kind_name(const StandardPair& pair);

/// Throws DomainError naming the first violated parameter restriction.
void validate(const StandardPair& pair);

/// Materializes (f1, g1); a switched pair returns (g1, f1).
std::pair<SparsePoly, SparsePoly> realize(const StandardPair& pair);

/// Structural inverse of realize. Kinds are tried in order first..fifth, the
/// unswitched orientation before the switched one. The returned parameters are
/// normalized: p is monic for kinds First and Second.
///
/// Kind Second is only recognized when p is coprime to a x^2 + b: p is taken to
/// be the even part of the squarefree decomposition of g1.
std::optional<StandardPair> match_standard_pair(const SparsePoly& f1, const SparsePoly& g1);

}  // namespace quadcomp
