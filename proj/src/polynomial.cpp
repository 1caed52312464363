#include "quadcomp/polynomial.hpp"

#include <algorithm>
#include <iterator>

#include "quadcomp/errors.hpp"
#include "quadcomp/poly_io.hpp"

namespace quadcomp {

SparsePoly::SparsePoly(std::initializer_list<std::pair<const Exponent, Rational>> terms) {
  for (const auto& [e, c] : terms) add_to_coefficient(e, c);
}

SparsePoly::SparsePoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

SparsePoly SparsePoly::constant(const Rational& c) { return monomial(c, 0); }

SparsePoly SparsePoly::monomial(const Rational& c, Exponent e) {
  SparsePoly p;
  p.set_coefficient(e, c);
  return p;
}

std::optional<Exponent> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Exponent SparsePoly::deg() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Exponent SparsePoly::valuation() const {
  if (terms_.empty()) throw DomainError("valuation of the zero polynomial");
  return terms_.begin()->first;
}

Rational SparsePoly::leading_coefficient() const {
  return terms_.empty() ? Rational{} : terms_.rbegin()->second;
}

Rational SparsePoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

std::size_t SparsePoly::positive_term_count() const { return terms_.size() - (terms_.contains(0) ? 1 : 0); }

void SparsePoly::set_coefficient(Exponent e, const Rational& c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

void SparsePoly::add_to_coefficient(Exponent e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparsePoly::evaluate(const Rational& at) const {
  // Sparse Horner: walk exponents downward, multiplying by at^gap between them.
  Rational acc;
  std::optional<Exponent> previous;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (previous) acc *= at.pow(*previous - it->first);
    acc += it->second;
    previous = it->first;
  }
  if (previous && *previous > 0) acc *= at.pow(*previous);
  return acc;
}

SparsePoly SparsePoly::derivative() const {
  SparsePoly d;
  for (const auto& [e, c] : terms_) {
    if (e > 0) d.terms_.emplace_hint(d.terms_.end(), e - 1, c * Rational(e));
  }
  return d;
}

SparsePoly SparsePoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

SparsePoly SparsePoly::pow(unsigned long k) const {
  SparsePoly result = constant(1);
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::strip_x_power() const {
  if (terms_.empty()) return *this;
  const Exponent shift = valuation();
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e - shift, c);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_to_coefficient(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_to_coefficient(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_to_coefficient(ea + eb, ca * cb);
  }
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::strong_ordering canonical_compare(const SparsePoly& a, const SparsePoly& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) {
    if (!da) return std::strong_ordering::less;
    if (!db) return std::strong_ordering::greater;
    return *da <=> *db;
  }
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.term_count() <=> b.term_count();
}

DivisionResult divide(const SparsePoly& dividend, const SparsePoly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const Exponent dd = divisor.deg();
  const Rational lead_inv = divisor.leading_coefficient().inverse();
  DivisionResult out{SparsePoly{}, dividend};
  while (!out.remainder.is_zero() && out.remainder.deg() >= dd) {
    const Exponent shift = out.remainder.deg() - dd;
    const Rational factor = out.remainder.leading_coefficient() * lead_inv;
    out.quotient.add_to_coefficient(shift, factor);
    for (const auto& [e, c] : divisor.terms()) out.remainder.add_to_coefficient(e + shift, -(c * factor));
  }
  return out;
}

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x = a.monic();
  SparsePoly y = b.monic();
  while (!y.is_zero()) {
    SparsePoly r = divide(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

SparsePoly exact_divide(const SparsePoly& dividend, const SparsePoly& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw DomainError("polynomial is not divisible");
  return q;
}

SparsePoly compose(const SparsePoly& g, const SparsePoly& h) {
  SparsePoly acc;
  std::optional<Exponent> previous;
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    if (previous) acc *= h.pow(*previous - it->first);
    acc += SparsePoly::constant(it->second);
    previous = it->first;
  }
  if (previous && *previous > 0) acc *= h.pow(*previous);
  return acc;
}

LinearMap::LinearMap(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.is_zero()) throw DomainError("linear map with u = 0 is not invertible");
}

SparsePoly LinearMap::as_poly() const { return SparsePoly{{1, u_}, {0, v_}}; }

SparsePoly linear_substitute(const SparsePoly& g, const LinearMap& m) {
  // (u x + v)^e = sum_j C(e, j) u^j v^(e-j) x^j
  SparsePoly out;
  for (const auto& [e, c] : g.terms()) {
    for (Exponent j = 0; j <= e; ++j) {
      const Rational v_part = m.v().is_zero() ? Rational(j == e ? 1 : 0) : m.v().pow(e - j);
      if (v_part.is_zero()) continue;
      out.add_to_coefficient(j, c * Rational(binomial(e, j)) * m.u().pow(j) * v_part);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << format_poly(p); }

}  // namespace quadcomp
