#include "conika/vanishing.hpp"

#include <stdexcept>
#include <string>

namespace conika {

std::uint64_t VanishingProblem::constraint_rows() const {
  return (std::uint64_t)S.size() * binom_u64(m + n - 1, n);
}

std::uint64_t VanishingProblem::columns() const {
  return count_monomials(n, d);
}

GfMatrix build_vanishing_matrix(const Fq& F, const VanishingProblem& P,
                                Exec exec) {
  auto mons = monomials_up_to(P.n, P.d);
  std::vector<DerivIndex> idxs;
  for_each_deriv_index(P.n, P.m,
                       [&](const DerivIndex& i) { idxs.push_back(i); });

  const std::size_t rows = P.S.size() * idxs.size();
  GfMatrix M(rows, mons.size());

  auto fill_row = [&](std::size_t r) {
    const Point& s = P.S[r / idxs.size()];
    const DerivIndex& iv = idxs[r % idxs.size()];
    // Powers of the point coordinates up to the degree bound.
    std::vector<std::vector<Fq::Elt>> pw(P.n);
    for (std::uint32_t j = 0; j < P.n; ++j) {
      pw[j].resize(P.d + 1);
      pw[j][0] = 1;
      for (std::uint32_t e = 1; e <= P.d; ++e)
        pw[j][e] = F.mul(pw[j][e - 1], s[j]);
    }
    Fq::Elt* row = &M.a[r * M.cols];
    for (std::size_t c = 0; c < mons.size(); ++c) {
      const auto& b = mons[c];
      Fq::Elt v = 1;
      for (std::uint32_t j = 0; j < P.n && v != 0; ++j) {
        if (b[j] < iv[j]) {
          v = 0;
          break;
        }
        v = F.mul(v, F.binom(b[j], iv[j]));
        v = F.mul(v, pw[j][b[j] - iv[j]]);
      }
      row[c] = v;
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < (std::int64_t)rows; ++r) fill_row(r);
  } else {
    for (std::size_t r = 0; r < rows; ++r) fill_row(r);
  }
  return M;
}

namespace {

MultiPoly solve(const Fq& F, const VanishingProblem& P, Exec exec,
                std::uint32_t max_degree) {
  if (P.m == 0)
    throw std::invalid_argument("multiplicity m = 0 is vacuous; need m >= 1");
  if (P.d > max_degree)
    throw std::invalid_argument("degree bound d = " + std::to_string(P.d) +
                                " exceeds the degree budget " +
                                std::to_string(max_degree));
  for (const auto& s : P.S)
    if (s.size() != P.n)
      throw std::invalid_argument("point length != n");
  if (!P.feasible())
    throw std::invalid_argument(
        "infeasible dimension count: |S|*C(m+n-1,n) = " +
        std::to_string(P.constraint_rows()) +
        " >= C(d+n,n) = " + std::to_string(P.columns()));

  GfMatrix M = build_vanishing_matrix(F, P, exec);
  std::vector<Fq::Elt> x = nullspace_first_vector(F, std::move(M), exec);

  auto mons = monomials_up_to(P.n, P.d);
  std::vector<MultiPoly::Term> ts;
  for (std::size_t c = 0; c < mons.size(); ++c)
    if (x[c] != 0) ts.push_back({mons[c], x[c]});
  MultiPoly f = MultiPoly::make(F, P.n, std::move(ts));

  // Mandatory post-verification; a failure here is a solver fault.
  if (f.is_zero()) throw std::logic_error("solver returned the zero polynomial");
  if (f.degree() > (int)P.d)
    throw std::logic_error("solver exceeded the degree bound");
  for (const auto& s : P.S) {
    if (P.m == 1) {
      if (evaluate(F, f, s) != 0)
        throw std::logic_error("post-check failed: f(s) != 0");
    } else {
      auto mult = multiplicity_at(F, f, s);
      if (!mult || *mult < P.m)
        throw std::logic_error("post-check failed: Mult(f, s) < m");
    }
  }
  return f;
}

}  // namespace

MultiPoly vanishing_polynomial(const Fq& F, const std::vector<Point>& S,
                               std::uint32_t n, std::uint32_t d, Exec exec,
                               std::uint32_t max_degree) {
  return solve(F, VanishingProblem{S, n, d, 1}, exec, max_degree);
}

MultiPoly vanishing_polynomial_with_multiplicity(
    const Fq& F, const std::vector<Point>& S, std::uint32_t n, std::uint32_t d,
    std::uint32_t m, Exec exec, std::uint32_t max_degree) {
  return solve(F, VanishingProblem{S, n, d, m}, exec, max_degree);
}

}  // namespace conika
