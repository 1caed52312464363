#include "quadcomp/standard_pairs.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "quadcomp/dickson.hpp"
#include "quadcomp/errors.hpp"
#include "quadcomp/poly_core.hpp"

namespace quadcomp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool is_pure_power(const SparsePoly& p, Exponent m) { return p == SparsePoly::monomial(1, m); }

/// Monic p with p^m = q for monic q, if it exists.
std::optional<SparsePoly> monic_root(const SparsePoly& q, Exponent m) {
  const Exponent n = q.deg();
  if (n % m != 0) return std::nullopt;
  const Exponent d = n / m;
  SparsePoly p = SparsePoly::monomial(1, d);
  for (Exponent j = 1; j <= d; ++j) {
    const Rational current = p.pow(m).coefficient(n - j);
    p.set_coefficient(d - j, (q.coefficient(n - j) - current) / Rational(m));
  }
  if (p.pow(m) != q) return std::nullopt;
  return p;
}

std::optional<PairParams> verified(PairParams params, const SparsePoly& left, const SparsePoly& right) {
  StandardPair candidate{std::move(params), false};
  try {
    validate(candidate);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  auto [l, r] = realize(candidate);
  if (l != left || r != right) return std::nullopt;
  return candidate.params;
}

std::optional<PairParams> match_first(const SparsePoly& left, const SparsePoly& right) {
  if (!left.is_monomial() || left.leading_coefficient() != 1 || left.deg() == 0) return std::nullopt;
  const Exponent m = left.deg();
  const Exponent r = right.valuation() % m;
  const Rational a = right.leading_coefficient();
  SparsePoly q;
  for (const auto& [e, c] : right.terms()) q.set_coefficient(e - r, c / a);
  auto p = monic_root(q, m);
  if (!p) return std::nullopt;
  return verified(pair_kind::First{m, r, a, std::move(*p)}, left, right);
}

std::optional<PairParams> match_second(const SparsePoly& left, const SparsePoly& right) {
  if (!is_pure_power(left, 2)) return std::nullopt;
  const auto factors = squarefree_decomposition(right);
  SparsePoly p = SparsePoly::constant(1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t multiplicity = i + 1;
    if (multiplicity % 2 == 0) {
      p *= factors[i].pow(multiplicity / 2);
    } else if (multiplicity > 1 && !factors[i].is_constant()) {
      return std::nullopt;
    }
  }
  auto [s, rem] = divide(right, p * p);
  if (!rem.is_zero() || s.term_count() != 2 || s.deg() != 2 || s.valuation() != 0) return std::nullopt;
  return verified(pair_kind::Second{s.coefficient(2), s.coefficient(0), std::move(p)}, left, right);
}

/// Parameter of a monic D_m(x, alpha) read from the x^(m-2) coefficient.
std::optional<Rational> dickson_parameter(const SparsePoly& p) {
  const Exponent m = p.deg();
  if (m < 2 || p.leading_coefficient() != 1) return std::nullopt;
  return -p.coefficient(m - 2) / Rational(m);
}

std::vector<Rational> signed_roots(const Rational& value, Exponent k) {
  std::vector<Rational> out;
  if (auto r = value.abs().exact_root(k)) {
    if (k % 2 == 1) {
      out.push_back(value.sign() < 0 ? -*r : *r);
    } else if (value.sign() >= 0) {
      out.push_back(*r);
      out.push_back(-*r);
    }
  }
  return out;
}

std::optional<PairParams> match_third(const SparsePoly& left, const SparsePoly& right) {
  const Exponent m = left.deg();
  const Exponent n = right.deg();
  if (m == 0 || n == 0 || std::gcd(m, n) != 1) return std::nullopt;
  std::vector<Rational> candidates;
  if (auto alpha = dickson_parameter(left)) {
    candidates = signed_roots(*alpha, n);
  } else if (auto beta = dickson_parameter(right)) {
    candidates = signed_roots(*beta, m);
  } else {
    candidates = {Rational(1)};
  }
  for (const auto& a : candidates) {
    if (auto found = verified(pair_kind::Third{m, n, a}, left, right)) return found;
  }
  return std::nullopt;
}

std::optional<PairParams> match_fourth(const SparsePoly& left, const SparsePoly& right) {
  const Exponent m = left.deg();
  const Exponent n = right.deg();
  if (m < 2 || n < 2 || std::gcd(m, n) != 2) return std::nullopt;
  const Rational a = -left.coefficient(m - 2) / (Rational(m) * left.leading_coefficient());
  const Rational b = -right.coefficient(n - 2) / (Rational(n) * right.leading_coefficient());
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  return verified(pair_kind::Fourth{m, n, a, b}, left, right);
}

std::optional<PairParams> match_fifth(const SparsePoly& left, const SparsePoly& right) {
  if (left.deg() != 6) return std::nullopt;
  auto a = signed_roots(left.leading_coefficient(), 3);
  if (a.empty()) return std::nullopt;
  return verified(pair_kind::Fifth{a.front()}, left, right);
}

}  // namespace

std::string kind_name(const StandardPair& pair) {
  static constexpr std::array<const char*, 5> names{"first", "second", "third", "fourth", "fifth"};
  return names[pair.params.index()];
}

void validate(const StandardPair& pair) {
  std::visit(Overloaded{
                 [](const pair_kind::First& k) {
                   if (k.m == 0) throw DomainError("first kind: m must be positive");
                   if (!(k.r < k.m)) throw DomainError("first kind: r < m violated");
                   if (std::gcd(k.r, k.m) != 1) throw DomainError("first kind: gcd(r, m) = 1 violated");
                   if (k.a.is_zero()) throw DomainError("first kind: a must be non-zero");
                   if (k.p.is_zero()) throw DomainError("first kind: p must be non-zero");
                   if (k.r + k.p.deg() == 0) throw DomainError("first kind: r + deg p > 0 violated");
                 },
                 [](const pair_kind::Second& k) {
                   if (k.a.is_zero() || k.b.is_zero()) throw DomainError("second kind: a and b must be non-zero");
                   if (k.p.is_zero()) throw DomainError("second kind: p must be non-zero");
                 },
                 [](const pair_kind::Third& k) {
                   if (k.m == 0 || k.n == 0) throw DomainError("third kind: m and n must be positive");
                   if (std::gcd(k.m, k.n) != 1) throw DomainError("third kind: gcd(m, n) = 1 violated");
                   if (k.a.is_zero()) throw DomainError("third kind: a must be non-zero");
                 },
                 [](const pair_kind::Fourth& k) {
                   if (k.m == 0 || k.n == 0) throw DomainError("fourth kind: m and n must be positive");
                   if (std::gcd(k.m, k.n) != 2) throw DomainError("fourth kind: gcd(m, n) = 2 violated");
                   if (k.a.is_zero() || k.b.is_zero()) throw DomainError("fourth kind: a and b must be non-zero");
                 },
                 [](const pair_kind::Fifth& k) {
                   if (k.a.is_zero()) throw DomainError("fifth kind: a must be non-zero");
                 }},
             pair.params);
}

std::pair<SparsePoly, SparsePoly> realize(const StandardPair& pair) {
  validate(pair);
  auto out = std::visit(
      Overloaded{
          [](const pair_kind::First& k) {
            return std::pair{SparsePoly::monomial(1, k.m), SparsePoly::monomial(k.a, k.r) * k.p.pow(k.m)};
          },
          [](const pair_kind::Second& k) {
            return std::pair{SparsePoly::monomial(1, 2), SparsePoly{{2, k.a}, {0, k.b}} * k.p.pow(2)};
          },
          [](const pair_kind::Third& k) {
            return std::pair{dickson({k.m, k.a.pow(k.n)}), dickson({k.n, k.a.pow(k.m)})};
          },
          [](const pair_kind::Fourth& k) {
            // m and n are even because gcd(m, n) = 2.
            return std::pair{dickson({k.m, k.a}) * k.a.pow(-static_cast<long>(k.m / 2)),
                             dickson({k.n, k.b}) * -k.b.pow(-static_cast<long>(k.n / 2))};
          },
          [](const pair_kind::Fifth& k) {
            return std::pair{SparsePoly{{2, k.a}, {0, -1}}.pow(3), SparsePoly{{4, 3}, {3, -4}}};
          }},
      pair.params);
  if (pair.switched) std::swap(out.first, out.second);
  return out;
}

std::optional<StandardPair> match_standard_pair(const SparsePoly& f1, const SparsePoly& g1) {
  if (f1.is_constant() || g1.is_constant()) throw DomainError("standard pair matching needs non-constant polynomials");
  using Matcher = std::function<std::optional<PairParams>(const SparsePoly&, const SparsePoly&)>;
  const std::array<Matcher, 5> matchers{match_first, match_second, match_third, match_fourth, match_fifth};
  for (const auto& matcher : matchers) {
    if (auto params = matcher(f1, g1)) return StandardPair{std::move(*params), false};
    if (auto params = matcher(g1, f1)) return StandardPair{std::move(*params), true};
  }
  return std::nullopt;
}

}  // namespace quadcomp
