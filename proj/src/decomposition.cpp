#include "quadcomp/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quadcomp/errors.hpp"

namespace quadcomp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<Exponent> proper_divisors(Exponent n) {
  std::vector<Exponent> out;
  for (Exponent d = 2; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// The unique monic h of degree d with h(0) = 0 whose k-th power agrees with
/// monic f on exponents n-1 .. n-d+1, where n = d*k.
SparsePoly candidate_right_factor(const SparsePoly& monic_f, Exponent d, Exponent k) {
  const Exponent n = d * k;
  SparsePoly h = SparsePoly::monomial(1, d);
  for (Exponent j = 1; j < d; ++j) {
    // The unknown coefficient of x^(d-j) enters the x^(n-j) coefficient of h^k
    // linearly as k * h_{d-j}; everything else there is already fixed.
    const Rational current = h.pow(k).coefficient(n - j);
    h.set_coefficient(d - j, (monic_f.coefficient(n - j) - current) / Rational(k));
  }
  return h;
}

/// g with f = g(h), if every remainder of the h-adic expansion of f is constant.
std::optional<SparsePoly> h_adic_left_factor(const SparsePoly& f, const SparsePoly& h) {
  SparsePoly g;
  SparsePoly rest = f;
  Exponent power = 0;
  while (!rest.is_zero()) {
    auto [q, r] = divide(rest, h);
    if (!r.is_constant()) return std::nullopt;
    g.set_coefficient(power, r.constant_term());
    rest = std::move(q);
    ++power;
  }
  return g;
}

CaseTag structural_tag(const SparsePoly& f, const SparsePoly& g, const SparsePoly& h) {
  if (!Quadrinomial::has_shape(f)) return case_tag::Generic{};
  if (h.is_monomial()) return case_tag::Cyclic{h.deg()};
  if (g.deg() == 2 && h.term_count() == 2) {
    const Rational linear = g.coefficient(1);
    if (linear.is_zero()) return case_tag::SymmetricSquare{};
    const Exponent low = h.valuation();
    const Rational c = h.coefficient(low);
    if (h.deg() == 2 * low && linear == -g.leading_coefficient() * c * c) return case_tag::CaseFour{c};
  }
  return case_tag::Generic{};
}

void sort_canonical(std::vector<Decomposition>& ds) { std::sort(ds.begin(), ds.end(), canonical_less); }

void check_sound(const SparsePoly& f, const Decomposition& dec) {
  if (compose(dec.g, dec.h) != f) throw InvariantViolation("decomposition does not recompose to its source");
}

}  // namespace

Quadrinomial::Quadrinomial(Rational a, Rational b, Rational c, Rational d, Exponent n1, Exponent n2, Exponent n3)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), n1_(n1), n2_(n2), n3_(n3) {
  if (a_.is_zero() || b_.is_zero() || c_.is_zero()) throw DomainError("quadrinomial needs A*B*C != 0");
  if (!(n1_ > n2_ && n2_ > n3_ && n3_ > 0)) throw DomainError("quadrinomial needs n1 > n2 > n3 > 0");
}

bool Quadrinomial::has_shape(const SparsePoly& f) { return f.positive_term_count() == 3; }

Quadrinomial Quadrinomial::from_poly(const SparsePoly& f) {
  if (!has_shape(f)) {
    throw DomainError("not a quadrinomial: expected exactly three terms at positive powers plus an optional constant");
  }
  auto it = f.terms().rbegin();
  const auto [n1, a] = *it++;
  const auto [n2, b] = *it++;
  const auto [n3, c] = *it;
  return Quadrinomial(a, b, c, f.constant_term(), n1, n2, n3);
}

SparsePoly Quadrinomial::to_poly() const { return SparsePoly{{n1_, a_}, {n2_, b_}, {n3_, c_}, {0, d_}}; }

std::string case_name(const CaseTag& tag) {
  return std::visit(Overloaded{[](const case_tag::Cyclic&) { return std::string("Cyclic"); },
                               [](const case_tag::Trivial&) { return std::string("Trivial"); },
                               [](const case_tag::SymmetricSquare&) { return std::string("SymmetricSquare"); },
                               [](const case_tag::CaseFour&) { return std::string("CaseFour"); },
                               [](const case_tag::Generic&) { return std::string("Generic"); }},
                    tag);
}

bool canonical_less(const Decomposition& a, const Decomposition& b) {
  if (auto c = canonical_compare(a.h, b.h); c != 0) return c < 0;
  if (auto c = canonical_compare(a.g, b.g); c != 0) return c < 0;
  return a.tag.index() < b.tag.index();
}

std::vector<Decomposition> decompose_oracle(const SparsePoly& f) {
  if (f.is_zero() || f.deg() < 2) throw DomainError("decomposition needs a polynomial of degree at least 2");
  const Exponent n = f.deg();
  const Rational lead = f.leading_coefficient();
  const SparsePoly monic_f = f.monic();

  std::vector<Decomposition> out;
  for (Exponent d : proper_divisors(n)) {
    SparsePoly h = candidate_right_factor(monic_f, d, n / d);
    auto g = h_adic_left_factor(monic_f, h);
    if (!g) continue;
    *g *= lead;
    CaseTag tag = structural_tag(f, *g, h);
    Decomposition dec{std::move(*g), std::move(h), std::move(tag)};
    check_sound(f, dec);
    out.push_back(std::move(dec));
  }
  sort_canonical(out);
  return out;
}

std::vector<Decomposition> trivial_decompositions(const SparsePoly& f) {
  if (f.is_constant()) throw DomainError("trivial decompositions need a non-constant polynomial");
  std::vector<Decomposition> out;
  out.push_back({f, SparsePoly::x(), case_tag::Trivial{}});
  if (f.deg() > 1) {
    const Rational lead = f.leading_coefficient();
    const Rational c0 = f.constant_term();
    SparsePoly h = (f - SparsePoly::constant(c0)) * lead.inverse();
    out.push_back({SparsePoly{{1, lead}, {0, c0}}, std::move(h), case_tag::Trivial{}});
  }
  for (const auto& dec : out) check_sound(f, dec);
  sort_canonical(out);
  return out;
}

std::vector<Decomposition> classify_quadrinomial(const Quadrinomial& q) {
  const SparsePoly f = q.to_poly();
  const Exponent n1 = q.n1(), n2 = q.n2(), n3 = q.n3();
  std::vector<Decomposition> out;

  const Exponent common = std::gcd(std::gcd(n1, n2), n3);
  for (Exponent d = 2; d <= common; ++d) {
    if (common % d != 0 || d >= n1) continue;
    SparsePoly g{{n1 / d, q.a()}, {n2 / d, q.b()}, {n3 / d, q.c()}, {0, q.d()}};
    out.push_back({std::move(g), SparsePoly::monomial(1, d), case_tag::Cyclic{d}});
  }

  if (n1 % 2 == 0 && n3 % 2 == 0 && 2 * n2 == n1 + n3 && Rational(4) * q.a() * q.c() == q.b() * q.b()) {
    SparsePoly h{{n1 / 2, 1}, {n3 / 2, q.b() / (Rational(2) * q.a())}};
    out.push_back({SparsePoly{{2, q.a()}, {0, q.d()}}, std::move(h), case_tag::SymmetricSquare{}});
  }

  if (n1 == 4 * n3 && n2 == 3 * n3 && Rational(8) * q.a() * q.a() * q.c() == -(q.b() * q.b() * q.b())) {
    const Rational c = q.b() / (Rational(2) * q.a());
    SparsePoly h{{2 * n3, 1}, {n3, c}};
    SparsePoly g{{2, q.a()}, {1, -(q.a() * c * c)}, {0, q.d()}};
    out.push_back({std::move(g), std::move(h), case_tag::CaseFour{c}});
  }

  for (const auto& dec : out) {
    check_sound(f, dec);
    std::visit(Overloaded{[&](const case_tag::Cyclic& t) {
                            if (common % t.d != 0) throw InvariantViolation("cyclic exponent does not divide gcd");
                          },
                          [&](const case_tag::SymmetricSquare&) {
                            if (2 * n2 != n1 + n3 || Rational(4) * q.a() * q.c() != q.b() * q.b()) {
                              throw InvariantViolation("symmetric-square conditions violated");
                            }
                          },
                          [&](const case_tag::CaseFour&) {
                            if (n1 != 4 * n3 || n2 != 3 * n3 ||
                                Rational(8) * q.a() * q.a() * q.c() != -(q.b() * q.b() * q.b())) {
                              throw InvariantViolation("case-four conditions violated");
                            }
                          },
                          [](const auto&) {}},
               dec.tag);
  }
  sort_canonical(out);
  return out;
}

std::vector<Rational> rational_roots(const SparsePoly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::set<Rational> roots;
  if (p.is_constant()) return {};
  if (p.valuation() > 0) roots.insert(Rational(0));

  // Clear denominators so the candidate test runs on integer coefficients.
  const SparsePoly stripped = p.strip_x_power();
  BigInt scale = 1;
  for (const auto& [e, c] : stripped.terms()) {
    const BigInt den = c.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  const SparsePoly integral = stripped * Rational(scale);
  if (!integral.is_constant()) {
    const auto lows = positive_divisors(integral.constant_term().numerator());
    const auto highs = positive_divisors(integral.leading_coefficient().numerator());
    for (const auto& num : lows) {
      for (const auto& den : highs) {
        for (int sign : {1, -1}) {
          Rational candidate(BigInt(num * sign), den);
          if (integral.evaluate(candidate).is_zero()) roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::optional<CriticalValueWitness> critical_value_witness(const SparsePoly& g, const SparsePoly& h) {
  if (g.is_zero() || g.deg() <= 1) throw DomainError("critical value witness needs deg g > 1");
  if (h.is_constant()) throw DomainError("critical value witness needs a non-constant h");
  const auto betas = rational_roots(g.derivative());
  if (betas.empty()) return std::nullopt;

  const SparsePoly f = compose(g, h);
  CriticalValueWitness w;
  w.beta = betas.front();
  w.gamma = g.evaluate(w.beta);
  w.gcd_degree = gcd(f - SparsePoly::constant(w.gamma), f.derivative()).deg();
  if (w.gcd_degree < h.deg()) throw InvariantViolation("critical value gcd is smaller than deg h");
  return w;
}

TrinomialSquareReport trinomial_square_check(const SparsePoly& f) {
  if (f.is_constant()) throw DomainError("trinomial square check needs a non-constant polynomial");
  const SparsePoly square = (f * f).monic();
  TrinomialSquareReport report;
  report.f_term_count = f.term_count();
  report.is_trinomial_square_shape = square.term_count() == 3 && square.valuation() == 0;
  if (report.is_trinomial_square_shape && report.f_term_count != 2) {
    throw InvariantViolation("square of a non-binomial has trinomial shape");
  }
  return report;
}

}  // namespace quadcomp
