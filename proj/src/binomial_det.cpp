#include "quadcomp/binomial_det.hpp"

#include <utility>

#include "quadcomp/errors.hpp"

namespace quadcomp {

IndexSequences::IndexSequences(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw DomainError("index sequences must have equal length");
  if (a_.empty()) throw DomainError("index sequences must be non-empty");
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i - 1] >= a_[i] || b_[i - 1] >= b_[i]) throw DomainError("index sequences must be strictly increasing");
  }
}

BinomialDeterminant gv_determinant(const IndexSequences& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = binomial(s.a()[i], s.b()[j]);
  }

  // Bareiss: every intermediate entry is a minor, so the divisions are exact.
  BigInt sign = 1;
  BigInt previous_pivot = 1;
  BigInt value;
  bool singular = false;
  for (std::size_t k = 0; k < n && !singular; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) {
        singular = true;
        break;
      }
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous_pivot.get_mpz_t());
      }
    }
    previous_pivot = m[k][k];
  }
  value = singular ? BigInt(0) : BigInt(sign * m[n - 1][n - 1]);

  BinomialDeterminant out{value, true};
  for (std::size_t i = 0; i < n; ++i) out.dominance = out.dominance && s.b()[i] <= s.a()[i];
  if (out.value < 0) throw InvariantViolation("binomial determinant is negative");
  if ((out.value > 0) != out.dominance) throw InvariantViolation("binomial determinant positivity disagrees with dominance");
  return out;
}

TermCountReport dziury_check(const SparsePoly& g, const LinearMap& m) {
  if (g.is_zero()) throw DomainError("term-count check needs a non-zero polynomial");
  if (m.v().is_zero()) throw DomainError("term-count check needs v != 0");
  const SparsePoly f = linear_substitute(g, m);
  TermCountReport report;
  report.n = g.deg();
  report.k = f.term_count();
  report.l = g.term_count();
  report.holds = report.n + 2 <= report.k + report.l;
  return report;
}

}  // namespace quadcomp
