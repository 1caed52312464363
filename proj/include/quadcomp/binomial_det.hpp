#pragma once

#include <cstdint>
#include <vector>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

/// Two strictly increasing sequences of non-negative integers of equal length.
class IndexSequences {
 public:
  /// Throws DomainError on unequal lengths or non-increasing entries.
  IndexSequences(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b);

  const std::vector<std::uint32_t>& a() const { return a_; }
  const std::vector<std::uint32_t>& b() const { return b_; }
  std::size_t size() const { return a_.size(); }

 private:
  std::vector<std::uint32_t> a_;
  std::vector<std::uint32_t> b_;
};

struct BinomialDeterminant {
  BigInt value;
  bool dominance = false;  ///< b_i <= a_i for every i
};

/// det[C(a_i, b_j)] by fraction-free (Bareiss) elimination, together with the
/// dominance predicate. The value is never negative and is positive exactly
/// under dominance; a violation throws InvariantViolation.
BinomialDeterminant gv_determinant(const IndexSequences& s);

struct TermCountReport {
  Exponent n = 0;       ///< deg g = deg f
  std::size_t k = 0;    ///< terms of f = g(ux + v)
  std::size_t l = 0;    ///< terms of g
  bool holds = false;   ///< n + 2 <= k + l
};

/// Term-count inequality for f = g(u x + v) with u, v != 0. Throws DomainError
/// when v = 0 or g is zero.
TermCountReport dziury_check(const SparsePoly& g, const LinearMap& m);

}  // namespace quadcomp
