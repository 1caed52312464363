#include "quadcomp/diophantine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "quadcomp/errors.hpp"

namespace quadcomp {

namespace {

Exponent gcd_of(const std::vector<Exponent>& values) {
  return std::accumulate(values.begin(), values.end(), Exponent{0},
                         [](Exponent acc, Exponent v) { return std::gcd(acc, v); });
}

FinitenessVerdict conclude(std::vector<Condition> conditions, FinitenessStatus success) {
  const bool all_ok = std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.ok; });
  return {all_ok ? success : FinitenessStatus::NotApplicable, std::move(conditions)};
}

/// Integer polynomial scaled by a common denominator, terms high to low.
class ScaledIntegerPoly {
 public:
  explicit ScaledIntegerPoly(const SparsePoly& p) {
    for (const auto& [e, c] : p.terms()) {
      const BigInt den = c.denominator();
      mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), den.get_mpz_t());
    }
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const Rational scaled = it->second * Rational(scale_);
      terms_.emplace_back(it->first, scaled.numerator());
    }
  }

  const BigInt& scale() const { return scale_; }

  BigInt evaluate(std::int64_t at) const {
    const BigInt x(static_cast<long>(at));
    BigInt acc = 0;
    BigInt power;
    Exponent previous = terms_.front().first;
    for (const auto& [e, c] : terms_) {
      mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), previous - e);
      acc = acc * power + c;
      previous = e;
    }
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), previous);
    return acc * power;
  }

 private:
  BigInt scale_ = 1;
  std::vector<std::pair<Exponent, BigInt>> terms_;
};

struct BigIntHash {
  std::size_t operator()(const BigInt& v) const { return hash_bigint(v); }
};

}  // namespace

LacunaryProfile::LacunaryProfile(std::vector<Rational> coefficients, std::vector<Exponent> exponents)
    : coefficients_(std::move(coefficients)), exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw DomainError("lacunary profile needs at least one positive power");
  if (coefficients_.size() != exponents_.size() + 1) {
    throw DomainError("lacunary profile needs one coefficient per exponent plus a constant");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (coefficients_[i].is_zero()) throw DomainError("lacunary profile coefficients A_1..A_l must be non-zero");
    if (exponents_[i] == 0) throw DomainError("lacunary profile exponents must be positive");
    if (i > 0 && exponents_[i - 1] <= exponents_[i]) {
      throw DomainError("lacunary profile exponents must be strictly decreasing");
    }
  }
}

LacunaryProfile LacunaryProfile::from_poly(const SparsePoly& f) {
  if (f.is_constant()) throw DomainError("lacunary profile of a constant polynomial");
  std::vector<Rational> coefficients;
  std::vector<Exponent> exponents;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (it->first == 0) break;
    exponents.push_back(it->first);
    coefficients.push_back(it->second);
  }
  coefficients.push_back(f.constant_term());
  return LacunaryProfile(std::move(coefficients), std::move(exponents));
}

std::string status_name(FinitenessStatus status) {
  switch (status) {
    case FinitenessStatus::FiniteByTheoremA:
      return "FiniteByTheoremA";
    case FinitenessStatus::FiniteByTheoremB:
      return "FiniteByTheoremB";
    case FinitenessStatus::NotApplicable:
      return "NotApplicable";
  }
  return "NotApplicable";
}

FinitenessVerdict theorem_a_verdict(const Quadrinomial& f, const Quadrinomial& g) {
  const std::vector<Exponent> n{f.n1(), f.n2(), f.n3()};
  const std::vector<Exponent> m{g.n1(), g.n2(), g.n3()};
  return conclude({{"gcd(n1,n2,n3)=1", gcd_of(n) == 1},
                   {"gcd(m1,m2,m3)=1", gcd_of(m) == 1},
                   {"(m1,m2,m3)!=(n1,n2,n3)", n != m},
                   {"n1>=9", f.n1() >= 9},
                   {"m1>=9", g.n1() >= 9}},
                  FinitenessStatus::FiniteByTheoremA);
}

FinitenessVerdict theorem_b_verdict(const LacunaryProfile& f, const SparsePoly& g) {
  if (g.term_count() != 3 || g.positive_term_count() != 3) {
    throw DomainError("the lacunary verdict needs g to be a trinomial with three terms at positive powers");
  }
  std::vector<Exponent> m;
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) m.push_back(it->first);
  const std::size_t l = f.l();
  const std::uint64_t m_bound = 2ULL * l * (l - 1);
  return conclude({{"l>=4", l >= 4},
                   {"gcd(n1,...,nl)=1", gcd_of(f.exponents()) == 1},
                   {"gcd(m1,m2,m3)=1", gcd_of(m) == 1},
                   {"n1>=4", f.exponents().front() >= 4},
                   {"m1>=2l(l-1)", m.front() >= m_bound}},
                  FinitenessStatus::FiniteByTheoremB);
}

std::vector<Solution> search_solutions(const SparsePoly& f, const SparsePoly& g, std::int64_t bound,
                                       std::int64_t max_bound) {
  if (f.is_constant() || g.is_constant()) throw DomainError("solution search needs non-constant polynomials");
  if (bound < 1) throw DomainError("search bound must be at least 1");
  if (bound > max_bound) {
    throw DomainError("search bound " + std::to_string(bound) + " exceeds the safety limit " +
                      std::to_string(max_bound));
  }
  const ScaledIntegerPoly fs(f);
  const ScaledIntegerPoly gs(g);
  // f(x) = g(y)  <=>  F(x) * scale(g) = G(y) * scale(f)
  std::unordered_map<BigInt, std::vector<std::int64_t>, BigIntHash> by_value;
  by_value.reserve(static_cast<std::size_t>(2 * bound + 1));
  for (std::int64_t y = -bound; y <= bound; ++y) by_value[gs.evaluate(y) * fs.scale()].push_back(y);

  std::vector<Solution> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    auto it = by_value.find(fs.evaluate(x) * gs.scale());
    if (it == by_value.end()) continue;
    for (std::int64_t y : it->second) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quadcomp
