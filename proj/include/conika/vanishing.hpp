#ifndef CONIKA_VANISHING_HPP_
#define CONIKA_VANISHING_HPP_

#include <cstdint>
#include <vector>

#include "conika/conic.hpp"
#include "conika/nullspace.hpp"
#include "conika/poly.hpp"

namespace conika {

/// Default cap on the total degree of solver outputs; keeps constraint
/// matrices at desk scale.
constexpr std::uint32_t kDegreeBudget = 64;

/// A request for a nonzero polynomial of degree <= d vanishing to order
/// >= m on every point of S.
struct VanishingProblem {
  std::vector<Point> S;
  std::uint32_t n = 2;
  std::uint32_t d = 0;
  std::uint32_t m = 1;

  std::uint64_t constraint_rows() const;  // |S| * C(m+n-1, n)
  std::uint64_t columns() const;          // C(d+n, n)
  bool feasible() const { return constraint_rows() < columns(); }
};

/// Constraint matrix: one row per (point, Hasse index of weight < m),
/// one column per monomial of degree <= d in canonical order.  Rows are
/// generated directly as shifted-binomial monomial evaluations.
GfMatrix build_vanishing_matrix(const Fq& F, const VanishingProblem& P,
                                Exec exec = Exec::parallel);

/// Nonzero f with deg f <= d and f|_S = 0; the deterministic first
/// nullspace vector of the constraint matrix.  Throws
/// std::invalid_argument when the dimension count |S| < C(d+n, n) fails.
MultiPoly vanishing_polynomial(const Fq& F, const std::vector<Point>& S,
                               std::uint32_t n, std::uint32_t d,
                               Exec exec = Exec::parallel,
                               std::uint32_t max_degree = kDegreeBudget);

/// Nonzero f with deg f <= d and Mult(f, s) >= m for every s in S.
/// Feasibility requires |S| * C(m+n-1, n) < C(d+n, n).
MultiPoly vanishing_polynomial_with_multiplicity(
    const Fq& F, const std::vector<Point>& S, std::uint32_t n, std::uint32_t d,
    std::uint32_t m, Exec exec = Exec::parallel,
    std::uint32_t max_degree = kDegreeBudget);

}  // namespace conika

#endif  // CONIKA_VANISHING_HPP_
