#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quadcomp/decomposition.hpp"
#include "quadcomp/errors.hpp"
#include "quadcomp/poly_io.hpp"

using namespace quadcomp;

namespace {
SparsePoly P(const char* text) { return parse_poly(text); }
}  // namespace

TEST_CASE("quadrinomial invariants") {
  const Quadrinomial q = Quadrinomial::from_poly(P("x^6 + 2x^4 + x^2 + 5"));
  CHECK(q.n1() == 6);
  CHECK(q.n2() == 4);
  CHECK(q.n3() == 2);
  CHECK(q.d() == 5);
  CHECK(q.to_poly() == P("x^6 + 2x^4 + x^2 + 5"));
  CHECK(Quadrinomial::from_poly(P("x^4 + 2x^3 - x")).d() == 0);
  CHECK_THROWS_AS(Quadrinomial::from_poly(P("x^3 + 1")), DomainError);
  CHECK_THROWS_AS(Quadrinomial::from_poly(P("x^5 + x^4 + x^3 + x")), DomainError);
  CHECK_THROWS_AS(Quadrinomial(1, 0, 1, 1, 5, 3, 1), DomainError);
  CHECK_THROWS_AS(Quadrinomial(1, 1, 1, 1, 5, 5, 1), DomainError);
  CHECK_THROWS_AS(Quadrinomial(1, 1, 1, 1, 5, 3, 0), DomainError);
}

TEST_CASE("decompose_oracle examples") {
  auto ds = decompose_oracle(P("x^6 + 2x^4 + x^2"));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Decomposition{P("x^3 + 2x^2 + x"), P("x^2"), case_tag::Cyclic{2}});
  CHECK(ds[1] == Decomposition{P("x^2"), P("x^3 + x"), case_tag::SymmetricSquare{}});

  ds = decompose_oracle(P("x^4 + 2x^3 - x"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == Decomposition{P("x^2 - x"), P("x^2 + x"), case_tag::CaseFour{1}});

  CHECK(decompose_oracle(P("x^5 + x^2 + x")).empty());
}

TEST_CASE("decompose_oracle handles non-monic and generic inputs") {
  // 3 (x^2 + 1)^3 - 1, a non-monic quadrinomial.
  auto ds = decompose_oracle(P("3x^6 + 9x^4 + 9x^2 + 2"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == Decomposition{P("3x^3 + 9x^2 + 9x + 2"), P("x^2"), case_tag::Cyclic{2}});

  // (x^3 + x)^2 + (x^3 + x)
  ds = decompose_oracle(P("x^6 + 2x^4 + x^3 + x^2 + x"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == Decomposition{P("x^2 + x"), P("x^3 + x"), case_tag::Generic{}});
  CHECK_THROWS_AS(decompose_oracle(P("x + 1")), DomainError);
  CHECK_THROWS_AS(decompose_oracle(P("4")), DomainError);
}

TEST_CASE("decompose_oracle recovers planted right factors") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 150) {
    SparsePoly g = oracle::random_poly(rng, 4, 3);
    SparsePoly h = oracle::random_poly(rng, 4, 3);
    if (g.is_zero() || h.is_zero() || g.deg() < 2 || h.deg() < 2) continue;
    const SparsePoly f = compose(g, h);
    const SparsePoly canonical_h = (h - SparsePoly::constant(h.constant_term())).monic();
    const auto ds = decompose_oracle(f);
    bool found = false;
    for (const auto& d : ds) {
      CHECK(compose(d.g, d.h) == f);
      CHECK(d.h.leading_coefficient() == 1);
      CHECK(d.h.constant_term().is_zero());
      found = found || d.h == canonical_h;
    }
    CHECK(found);
    ++checked;
  }
}

TEST_CASE("trivial decompositions") {
  const auto ds = trivial_decompositions(P("2x^3 + x + 7"));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Decomposition{P("2x^3 + x + 7"), P("x"), case_tag::Trivial{}});
  CHECK(ds[1] == Decomposition{P("2x + 7"), P("x^3 + 1/2 x"), case_tag::Trivial{}});
  CHECK(trivial_decompositions(P("3x - 1")).size() == 1);
}

TEST_CASE("classify_quadrinomial examples") {
  auto ds = classify_quadrinomial(Quadrinomial(1, 2, 1, 5, 6, 4, 2));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Decomposition{P("x^3 + 2x^2 + x + 5"), P("x^2"), case_tag::Cyclic{2}});
  CHECK(ds[1] == Decomposition{P("x^2 + 5"), P("x^3 + x"), case_tag::SymmetricSquare{}});

  ds = classify_quadrinomial(Quadrinomial(1, 2, -1, 0, 4, 3, 1));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == Decomposition{P("x^2 - x"), P("x^2 + x"), case_tag::CaseFour{1}});

  CHECK(classify_quadrinomial(Quadrinomial(1, 1, 1, 1, 9, 5, 3)).empty());
  CHECK(decompose_oracle(P("x^9 + x^5 + x^3 + 1")).empty());
}

TEST_CASE("classify_quadrinomial with rational case parameters") {
  // A = 2, B = 3: case three needs C = 9/8; case four needs C = -27/32.
  auto ds = classify_quadrinomial(Quadrinomial::from_poly(P("2x^10 + 3x^6 + 9/8 x^2 - 1")));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].tag == CaseTag{case_tag::Cyclic{2}});
  CHECK(ds[1] == Decomposition{P("2x^2 - 1"), P("x^5 + 3/4 x"), case_tag::SymmetricSquare{}});

  ds = classify_quadrinomial(Quadrinomial::from_poly(P("2x^8 + 3x^6 - 27/32 x^2")));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].tag == CaseTag{case_tag::Cyclic{2}});
  CHECK(ds[1] == Decomposition{P("2x^2 - 9/8 x"), P("x^4 + 3/4 x^2"), case_tag::CaseFour{Rational(BigInt(3), BigInt(4))}});
  CHECK(ds == decompose_oracle(P("2x^8 + 3x^6 - 27/32 x^2")));
}

TEST_CASE("classifier agrees with the oracle on a small exhaustive family") {
  const std::vector<Rational> coeffs{-2, -1, 1, 2};
  int compared = 0;
  for (Exponent n1 = 3; n1 <= 8; ++n1)
    for (Exponent n2 = 2; n2 < n1; ++n2)
      for (Exponent n3 = 1; n3 < n2; ++n3)
        for (const auto& a : coeffs)
          for (const auto& b : coeffs)
            for (const auto& c : coeffs) {
              const Quadrinomial q(a, b, c, 1, n1, n2, n3);
              REQUIRE(classify_quadrinomial(q) == decompose_oracle(q.to_poly()));
              ++compared;
            }
  CHECK(compared == 56 * 64);
}

TEST_CASE("critical_value_witness") {
  auto w = critical_value_witness(P("x^2"), P("x^3 + x"));
  REQUIRE(w.has_value());
  CHECK(w->beta == 0);
  CHECK(w->gamma == 0);
  CHECK(w->gcd_degree == 3);

  w = critical_value_witness(P("x^2 - x"), P("x^2 + x"));
  REQUIRE(w.has_value());
  CHECK(w->beta == Rational(BigInt(1), BigInt(2)));
  CHECK(w->gamma == Rational(BigInt(-1), BigInt(4)));
  CHECK(w->gcd_degree == 2);

  CHECK_FALSE(critical_value_witness(P("x^3 + x"), P("x^2 + 1")).has_value());
  CHECK_THROWS_AS(critical_value_witness(P("3x + 1"), P("x^2")), DomainError);
}

TEST_CASE("critical value gcd is at least deg h") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const Rational beta = oracle::random_rational(rng, 3, 2);
    SparsePoly r = oracle::random_poly(rng, 2, 2);
    SparsePoly h = oracle::random_poly(rng, 3, 3);
    if (h.is_constant()) continue;
    const SparsePoly g = SparsePoly{{1, 1}, {0, -beta}}.pow(2) * r + SparsePoly::constant(oracle::random_rational(rng, 3, 2));
    if (g.is_zero() || g.deg() < 2) continue;
    const auto w = critical_value_witness(g, h);
    REQUIRE(w.has_value());
    CHECK(g.derivative().evaluate(w->beta).is_zero());
    CHECK(w->gcd_degree >= h.deg());
  }
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(P("6x^3 - 5x^2 - 2x + 1")) ==
        std::vector<Rational>{-Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(3)), 1});
  CHECK(rational_roots(P("1/2 x^2 - 1/8")) == std::vector<Rational>{Rational(BigInt(-1), BigInt(2)), Rational(BigInt(1), BigInt(2))});
  CHECK(rational_roots(P("x^3 + x")) == std::vector<Rational>{0});
  CHECK(rational_roots(P("x^2 + 1")).empty());
}

TEST_CASE("trinomial_square_check") {
  auto r = trinomial_square_check(P("x^3 + x"));
  CHECK_FALSE(r.is_trinomial_square_shape);
  CHECK(r.f_term_count == 2);

  r = trinomial_square_check(P("x + 1"));
  CHECK(r.is_trinomial_square_shape);
  CHECK(r.f_term_count == 2);

  r = trinomial_square_check(P("x^2 + x + 1"));
  CHECK_FALSE(r.is_trinomial_square_shape);
  CHECK(r.f_term_count == 3);

  CHECK(trinomial_square_check(P("-2x^5 + 3")).is_trinomial_square_shape);
  CHECK_THROWS_AS(trinomial_square_check(P("2")), DomainError);
}
