#ifndef CONIKA_TESTS_TEST_SUPPORT_HPP_
#define CONIKA_TESTS_TEST_SUPPORT_HPP_

#include <map>
#include <random>
#include <set>
#include <vector>

#include "conika/conic.hpp"
#include "conika/poly.hpp"

namespace conika::testing {

using Rng = std::mt19937_64;

inline Fq::Elt random_elt(Rng& rng, const Fq& F) {
  return (Fq::Elt)(rng() % F.q());
}

inline Fq::Elt random_unit(Rng& rng, const Fq& F) {
  return (Fq::Elt)(1 + rng() % (F.q() - 1));
}

inline Point random_point(Rng& rng, const Fq& F, std::uint32_t n) {
  Point p(n);
  for (auto& e : p) e = random_elt(rng, F);
  return p;
}

inline Point random_nonzero_point(Rng& rng, const Fq& F, std::uint32_t n) {
  for (;;) {
    Point p = random_point(rng, F, n);
    for (auto e : p)
      if (e) return p;
  }
}

// Random sparse polynomial with up to max_terms monomials of total
// degree <= max_deg (possibly fewer after merging).
inline MultiPoly random_poly(Rng& rng, const Fq& F, std::uint32_t n,
                             std::uint32_t max_deg, std::uint32_t max_terms) {
  std::vector<MultiPoly::Term> ts;
  std::uint32_t count = 1 + rng() % max_terms;
  for (std::uint32_t t = 0; t < count; ++t) {
    MultiPoly::Term term;
    term.exp.resize(n);
    std::uint32_t left = rng() % (max_deg + 1);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t e = rng() % (left + 1);
      term.exp[j] = (std::uint16_t)e;
      left -= e;
    }
    term.coeff = random_unit(rng, F);
    ts.push_back(std::move(term));
  }
  return MultiPoly::make(F, n, std::move(ts));
}

inline MultiPoly random_nonzero_poly(Rng& rng, const Fq& F, std::uint32_t n,
                                     std::uint32_t max_deg,
                                     std::uint32_t max_terms) {
  for (;;) {
    MultiPoly f = random_poly(rng, F, n, max_deg, max_terms);
    if (!f.is_zero()) return f;
  }
}

// Independent pair (b, c) for embeddings.
inline std::pair<Point, Point> random_independent_pair(Rng& rng, const Fq& F,
                                                       std::uint32_t n) {
  for (;;) {
    Point b = random_nonzero_point(rng, F, n);
    Point c = random_nonzero_point(rng, F, n);
    if (linearly_independent(F, b, c)) return {b, c};
  }
}

// --- independent oracles -------------------------------------------------

// Naive term-by-term evaluation with repeated multiplication; no shared
// code with conika::evaluate's pow path.
inline Fq::Elt eval_oracle(const Fq& F, const MultiPoly& f, const Point& x) {
  Fq::Elt acc = 0;
  for (const auto& t : f.terms) {
    Fq::Elt v = t.coeff;
    for (std::uint32_t j = 0; j < f.n; ++j)
      for (std::uint16_t e = 0; e < t.exp[j]; ++e) v = F.mul(v, x[j]);
    acc = F.add(acc, v);
  }
  return acc;
}

// Brute-force Hasse derivative: expands f(x + y) monomial by monomial in
// 2n variables and extracts the coefficient of y^i.
inline MultiPoly hasse_oracle(const Fq& F, const MultiPoly& f,
                              const DerivIndex& idx) {
  std::map<std::vector<std::uint16_t>, Fq::Elt> acc;
  // f(x+y) = sum_t coeff * prod_j (x_j + y_j)^{e_j}; expand each factor
  // by binomials computed through Pascal recursion on exact integers
  // reduced as we go (independent small helper).
  std::vector<std::vector<std::uint32_t>> pascal;
  auto binom_mod = [&](std::uint32_t nn, std::uint32_t kk) -> Fq::Elt {
    while (pascal.size() <= nn) {
      std::size_t r = pascal.size();
      std::vector<std::uint32_t> row(r + 1, 1);
      for (std::size_t j = 1; j < r; ++j)
        row[j] = (pascal[r - 1][j - 1] + pascal[r - 1][j]) % F.p();
      pascal.push_back(std::move(row));
    }
    return kk <= nn ? pascal[nn][kk] : 0;
  };

  for (const auto& t : f.terms) {
    // Iterate all splits e_j = a_j (to x) + b_j (to y); keep b = idx.
    std::vector<std::uint16_t> xexp(f.n);
    Fq::Elt coeff = t.coeff;
    bool ok = true;
    for (std::uint32_t j = 0; j < f.n; ++j) {
      if (t.exp[j] < idx[j]) {
        ok = false;
        break;
      }
      xexp[j] = (std::uint16_t)(t.exp[j] - idx[j]);
      coeff = F.mul(coeff, binom_mod(t.exp[j], idx[j]));
    }
    if (!ok || coeff == 0) continue;
    auto [it, inserted] = acc.emplace(xexp, coeff);
    if (!inserted) it->second = F.add(it->second, coeff);
  }
  std::vector<MultiPoly::Term> ts;
  for (auto& [e, c] : acc)
    if (c != 0) ts.push_back({e, c});
  return MultiPoly::make(F, f.n, std::move(ts));
}

// Multiplicity via Taylor shift: Mult(f, a) is the least total degree in
// the support of f(x + a), computed by full expansion.
inline std::uint32_t multiplicity_oracle(const Fq& F, const MultiPoly& f,
                                         const Point& a) {
  std::map<std::vector<std::uint16_t>, Fq::Elt> shifted;
  std::function<void(std::uint32_t, std::vector<std::uint16_t>&, Fq::Elt,
                     const MultiPoly::Term&)>
      expand = [&](std::uint32_t j, std::vector<std::uint16_t>& exps,
                   Fq::Elt coeff, const MultiPoly::Term& t) {
        if (coeff == 0) return;
        if (j == f.n) {
          auto [it, ins] = shifted.emplace(exps, coeff);
          if (!ins) it->second = F.add(it->second, coeff);
          return;
        }
        // (x_j + a_j)^{e} = sum_s C(e, s) a_j^{e-s} x_j^s
        for (std::uint16_t s = 0; s <= t.exp[j]; ++s) {
          Fq::Elt c = F.mul(coeff, F.binom(t.exp[j], s));
          c = F.mul(c, F.pow(a[j], t.exp[j] - s));
          exps[j] = s;
          expand(j + 1, exps, c, t);
        }
        exps[j] = 0;
      };
  for (const auto& t : f.terms) {
    std::vector<std::uint16_t> exps(f.n, 0);
    expand(0, exps, t.coeff, t);
  }
  std::uint32_t best = UINT32_MAX;
  for (const auto& [e, c] : shifted) {
    if (c == 0) continue;
    std::uint32_t deg = 0;
    for (auto v : e) deg += v;
    best = std::min(best, deg);
  }
  return best;  // UINT32_MAX when f(x+a) expands to zero (zero polynomial)
}

}  // namespace conika::testing

#endif  // CONIKA_TESTS_TEST_SUPPORT_HPP_
