#include <doctest.h>

#include "quadcomp/errors.hpp"
#include "quadcomp/rational.hpp"

using namespace quadcomp;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");

  const Rational zero(BigInt(0), BigInt(-7));
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(zero.to_fraction_string() == "0/1");
  CHECK(zero == Rational{});
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
  CHECK_THROWS_AS(Rational::parse("3/0"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("-12/8") == Rational(BigInt(-3), BigInt(2)));
  CHECK(Rational::parse("+5") == 5);
  CHECK(Rational::parse("123456789012345678901234567890").numerator().get_str() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
}

TEST_CASE("powers and exact roots") {
  const Rational r(BigInt(-2), BigInt(3));
  CHECK(r.pow(3) == Rational(BigInt(-8), BigInt(27)));
  CHECK(r.pow(-2) == Rational(BigInt(9), BigInt(4)));
  CHECK(r.pow(0) == 1);
  CHECK(Rational(BigInt(-8), BigInt(27)).exact_root(3) == r);
  CHECK(Rational(BigInt(4), BigInt(9)).exact_root(2) == Rational(BigInt(2), BigInt(3)));
  CHECK_FALSE(Rational(2).exact_root(2).has_value());
  CHECK_FALSE(Rational(-4).exact_root(2).has_value());
}

TEST_CASE("divisors and binomials") {
  CHECK(positive_divisors(BigInt(-12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  CHECK(positive_divisors(BigInt(1)) == std::vector<BigInt>{1});
  CHECK(positive_divisors(BigInt(97)) == std::vector<BigInt>{1, 97});
  CHECK_THROWS_AS(positive_divisors(BigInt(0)), DomainError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("equal values hash equally") {
  CHECK(Rational(BigInt(2), BigInt(4)).hash() == Rational(BigInt(1), BigInt(2)).hash());
}
