#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "quadcomp/binomial_det.hpp"
#include "quadcomp/errors.hpp"
#include "quadcomp/poly_io.hpp"

using namespace quadcomp;

namespace {

std::vector<std::uint32_t> random_increasing(std::mt19937_64& rng, std::size_t n, std::uint32_t max_entry) {
  std::set<std::uint32_t> picked;
  std::uniform_int_distribution<std::uint32_t> d(0, max_entry);
  while (picked.size() < n) picked.insert(d(rng));
  return {picked.begin(), picked.end()};
}

}  // namespace

TEST_CASE("gv_determinant examples") {
  auto r = gv_determinant(IndexSequences({1, 2}, {0, 1}));
  CHECK(r.value == 1);
  CHECK(r.dominance);

  r = gv_determinant(IndexSequences({1, 2}, {0, 3}));
  CHECK(r.value == 0);
  CHECK_FALSE(r.dominance);

  r = gv_determinant(IndexSequences({5}, {2}));
  CHECK(r.value == 10);
  CHECK(r.dominance);
}

TEST_CASE("malformed sequences are rejected") {
  CHECK_THROWS_AS(IndexSequences({1, 2}, {0}), DomainError);
  CHECK_THROWS_AS(IndexSequences({2, 2}, {0, 1}), DomainError);
  CHECK_THROWS_AS(IndexSequences({1, 3}, {4, 1}), DomainError);
  CHECK_THROWS_AS(IndexSequences({}, {}), DomainError);
}

TEST_CASE("Bareiss elimination agrees with the Leibniz expansion") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const auto a = random_increasing(rng, n, 12);
    const auto b = random_increasing(rng, n, 12);
    const auto r = gv_determinant(IndexSequences(a, b));
    CHECK(r.value == oracle::leibniz_binomial_det(a, b));
  }
}

TEST_CASE("dziury_check examples") {
  auto r = dziury_check(parse_poly("x^3"), LinearMap(1, 1));
  CHECK(r.n == 3);
  CHECK(r.l == 1);
  CHECK(r.k == 4);
  CHECK(r.holds);

  r = dziury_check(parse_poly("x^2 + x"), LinearMap(1, 1));
  CHECK(r.n == 2);
  CHECK(r.l == 2);
  CHECK(r.k == 3);
  CHECK(r.holds);

  r = dziury_check(parse_poly("x"), LinearMap(2, 3));
  CHECK(r.n == 1);
  CHECK(r.l == 1);
  CHECK(r.k == 2);
  CHECK(r.holds);

  CHECK_THROWS_AS(dziury_check(parse_poly("x^3"), LinearMap(2, 0)), DomainError);
}

TEST_CASE("shifted polynomials keep enough terms") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly g = oracle::random_poly(rng, 15, 5);
    const LinearMap m(oracle::random_rational(rng, 5, 4, true), oracle::random_rational(rng, 5, 4, true));
    CHECK(dziury_check(g, m).holds);
  }
}
