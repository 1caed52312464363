#include "quadcomp/poly_core.hpp"

#include <algorithm>

#include "quadcomp/errors.hpp"

namespace quadcomp {

std::vector<SparsePoly> squarefree_decomposition(const SparsePoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SparsePoly> factors;
  if (f.is_constant()) return factors;

  const SparsePoly monic_f = f.monic();
  const SparsePoly df = monic_f.derivative();
  SparsePoly a = gcd(monic_f, df);
  SparsePoly b = exact_divide(monic_f, a);
  SparsePoly c = exact_divide(df, a);
  SparsePoly d = c - b.derivative();
  while (!b.is_constant()) {
    SparsePoly factor = gcd(b, d);
    b = exact_divide(b, factor);
    c = exact_divide(d, factor);
    d = c - b.derivative();
    factors.push_back(std::move(factor));
  }
  while (!factors.empty() && factors.back().is_constant()) factors.pop_back();
  return factors;
}

SparsePoly radical(const SparsePoly& f) {
  if (f.is_zero()) throw DomainError("radical of the zero polynomial");
  return exact_divide(f, gcd(f, f.derivative())).monic();
}

std::size_t max_nonzero_root_multiplicity(const SparsePoly& f) {
  if (f.is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  // After removing x^val every remaining root is non-zero.
  const auto factors = squarefree_decomposition(f.strip_x_power());
  return factors.size();
}

MasonStothersReport mason_stothers_check(const SparsePoly& a, const SparsePoly& b, const SparsePoly& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("Mason-Stothers inputs must be non-zero");
  if (a + b != c) throw DomainError("Mason-Stothers inputs must satisfy a + b = c");
  if (a.is_constant() && b.is_constant() && c.is_constant()) {
    throw DomainError("Mason-Stothers inputs must not all be constant");
  }
  if (!gcd(a, b).is_constant() || !gcd(a, c).is_constant() || !gcd(b, c).is_constant()) {
    throw DomainError("Mason-Stothers inputs must be pairwise coprime");
  }
  MasonStothersReport report;
  report.max_deg = std::max({a.deg(), b.deg(), c.deg()});
  report.rad_deg = radical(a * b * c).deg();
  report.holds = report.max_deg + 1 <= report.rad_deg;
  return report;
}

}  // namespace quadcomp
