#include "quadcomp/dickson.hpp"

#include <vector>

#include "quadcomp/errors.hpp"

namespace quadcomp {

SparsePoly dickson(const DicksonSpec& spec) {
  if (spec.n == 0) throw DomainError("Dickson polynomial degree must be at least 1");
  const Exponent n = spec.n;
  const Rational minus_a = -spec.a;
  SparsePoly out;
  for (Exponent i = 0; 2 * i <= n; ++i) {
    const Rational coeff = Rational(n) / Rational(n - i) * Rational(binomial(n - i, i)) * minus_a.pow(i);
    out.add_to_coefficient(n - 2 * i, coeff);
  }
  return out;
}

std::optional<DicksonMatch> dickson_match(const SparsePoly& f) {
  if (f.is_constant()) throw DomainError("Dickson matching needs a non-constant polynomial");
  const Exponent n = f.deg();
  const Rational lead = f.leading_coefficient();

  const auto root = lead.inverse().abs().exact_root(n);
  if (!root) return std::nullopt;
  std::vector<Rational> scales;
  if (n % 2 == 0) {
    if (lead.sign() < 0) return std::nullopt;
    scales = {*root, -*root};
  } else {
    scales = {lead.sign() < 0 ? -*root : *root};
  }

  // f(ux+v) has x^(n-1) coefficient u^(n-1) (n A_1 v + a_{n-1}); D_n has none.
  const Rational shift = -f.coefficient(n - 1) / (Rational(n) * lead);

  for (const auto& u : scales) {
    const SparsePoly shifted = linear_substitute(f, LinearMap(u, shift));
    DicksonMatch match{u, shift, n >= 2 ? -shifted.coefficient(n - 2) / Rational(n) : Rational(1), false};
    if (shifted != dickson({n, match.gamma})) continue;
    match.gamma_zero = match.gamma.is_zero();
    if (!match.gamma_zero && n > 2 * f.positive_term_count()) {
      throw InvariantViolation("Dickson match with more than twice as many degrees as positive terms");
    }
    return match;
  }
  return std::nullopt;
}

}  // namespace quadcomp
