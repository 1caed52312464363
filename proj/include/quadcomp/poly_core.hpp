#pragma once

#include <cstddef>
#include <vector>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

/// Squarefree decomposition f = lc(f) * prod_i factors[i-1]^i (Yun's gcd chain).
/// Each factor is monic and squarefree, pairwise coprime; trailing entries are
/// non-constant. Throws DomainError on the zero polynomial.
std::vector<SparsePoly> squarefree_decomposition(const SparsePoly& f);

/// Monic squarefree part f / gcd(f, f'). Throws DomainError on zero.
SparsePoly radical(const SparsePoly& f);

/// Largest multiplicity of a non-zero root of f; 0 exactly when f = c*x^k.
std::size_t max_nonzero_root_multiplicity(const SparsePoly& f);

struct MasonStothersReport {
  Exponent max_deg = 0;
  Exponent rad_deg = 0;
  bool holds = false;
};

/// Checks max(deg a, deg b, deg c) <= deg rad(abc) - 1 for a + b = c with a, b, c
/// pairwise coprime, non-zero, and not all constant (DomainError otherwise).
MasonStothersReport mason_stothers_check(const SparsePoly& a, const SparsePoly& b, const SparsePoly& c);

}  // namespace quadcomp
