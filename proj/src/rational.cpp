#include "quadcomp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "quadcomp/errors.hpp"

namespace quadcomp {

namespace {

bool is_digit_string(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Trial division bound before falling back to a primality test on the cofactor.
constexpr unsigned long kTrialDivisionLimit = 1'000'000;

}  // namespace

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  if (!is_digit_string(num_part)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  BigInt num(std::string(num_part), 10);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = body.substr(slash + 1);
    if (!is_digit_string(den_part)) {
      throw ParseError("malformed rational '" + std::string(text) + "'", text.size() - body.size() + slash + 1);
    }
    den = BigInt(std::string(den_part), 10);
    if (den == 0) throw DomainError("division by zero in rational '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::optional<Rational> Rational::exact_root(unsigned long k) const {
  if (k == 0) return std::nullopt;
  if (k % 2 == 0 && sign() < 0) return std::nullopt;
  BigInt num = value_.get_num();
  BigInt den = value_.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  if (negative) num_root = -num_root;
  return Rational(num_root, den_root);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = hash_bigint(value_.get_num());
  return h ^ (hash_bigint(value_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::size_t hash_bigint(const BigInt& value) {
  const mpz_srcptr z = value.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x100000001b3ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt n = ::abs(value);
  if (n == 0) throw DomainError("divisors of zero");

  std::vector<std::pair<BigInt, unsigned>> factors;
  auto take = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  take(2);
  for (unsigned long p = 3; p <= kTrialDivisionLimit && BigInt(p) * p <= n; p += 2) take(BigInt(p));
  if (n > 1) {
    if (n > BigInt(kTrialDivisionLimit) * kTrialDivisionLimit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw DomainError("integer " + value.get_str() + " is too large to enumerate its divisors");
    }
    factors.emplace_back(n, 1);
  }

  std::vector<BigInt> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divisors.size();
    BigInt power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace quadcomp
