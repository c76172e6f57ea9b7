#include "conika/poly.hpp"

namespace conika {

bool monomial_less(const std::vector<std::uint16_t>& a,
                   const std::vector<std::uint16_t>& b) {
  std::uint32_t da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db;
  return a < b;
}

int MultiPoly::degree() const {
  if (terms.empty()) return -1;
  // Canonical order puts the highest total degree last.
  std::uint32_t d = 0;
  for (auto v : terms.back().exp) d += v;
  return (int)d;
}

MultiPoly MultiPoly::make(const Fq& F, std::uint32_t n,
                          std::vector<Term> ts) {
  for (auto& t : ts)
    if (t.exp.size() != n)
      throw std::invalid_argument("term exponent length != n");
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return monomial_less(a.exp, b.exp);
  });
  std::vector<Term> merged;
  for (auto& t : ts) {
    if (!merged.empty() && merged.back().exp == t.exp)
      merged.back().coeff = F.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return MultiPoly{n, std::move(merged)};
}

std::uint64_t binom_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    // r * (a - b + i) / i stays integral at each step.
    std::uint64_t num = a - b + i;
    if (r > UINT64_MAX / num)
      throw std::overflow_error("binomial coefficient overflow");
    r = r * num / i;
  }
  return r;
}

std::uint64_t count_monomials(std::uint64_t n, std::uint64_t d) {
  return binom_u64(d + n, n);
}

std::vector<std::vector<std::uint16_t>> monomials_up_to(std::uint32_t n,
                                                        std::uint32_t d) {
  std::vector<std::vector<std::uint16_t>> out;
  out.reserve(count_monomials(n, d));
  std::vector<std::uint16_t> cur(n, 0);
  // Ascending degree, lexicographic within a degree.
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t pos, std::uint32_t left) {
        if (pos + 1 == n) {
          cur[pos] = (std::uint16_t)left;
          out.push_back(cur);
          return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
          cur[pos] = (std::uint16_t)v;
          rec(pos + 1, left - v);
        }
      };
  for (std::uint32_t deg = 0; deg <= d; ++deg) rec(0, deg);
  return out;
}

Fq::Elt evaluate(const Fq& F, const MultiPoly& f, std::span<const Fq::Elt> x) {
  if (x.size() != f.n)
    throw std::invalid_argument("evaluation point length != n");
  Fq::Elt acc = 0;
  for (const auto& t : f.terms) {
    Fq::Elt v = t.coeff;
    for (std::uint32_t j = 0; j < f.n && v != 0; ++j)
      if (t.exp[j]) v = F.mul(v, F.pow(x[j], t.exp[j]));
    acc = F.add(acc, v);
  }
  return acc;
}

MultiPoly homogeneous_part(const MultiPoly& f, int d) {
  MultiPoly r = MultiPoly::zero(f.n);
  if (d < 0) return r;
  for (const auto& t : f.terms) {
    std::uint32_t td = 0;
    for (auto v : t.exp) td += v;
    if ((int)td == d) r.terms.push_back(t);
  }
  return r;
}

MultiPoly hasse_derivative(const Fq& F, const MultiPoly& f,
                           const DerivIndex& i) {
  if (i.size() != f.n)
    throw std::invalid_argument("derivative index length != n");
  std::vector<MultiPoly::Term> ts;
  for (const auto& t : f.terms) {
    Fq::Elt c = t.coeff;
    MultiPoly::Term nt;
    nt.exp.resize(f.n);
    bool alive = true;
    for (std::uint32_t j = 0; j < f.n; ++j) {
      if (t.exp[j] < i[j]) {
        alive = false;
        break;
      }
      c = F.mul(c, F.binom(t.exp[j], i[j]));
      nt.exp[j] = (std::uint16_t)(t.exp[j] - i[j]);
    }
    if (!alive || c == 0) continue;
    nt.coeff = c;
    ts.push_back(std::move(nt));
  }
  return MultiPoly::make(F, f.n, std::move(ts));
}

Fq::Elt hasse_evaluate(const Fq& F, const MultiPoly& f, const DerivIndex& i,
                       std::span<const Fq::Elt> a) {
  if (i.size() != f.n || a.size() != f.n)
    throw std::invalid_argument("index/point length != n");
  Fq::Elt acc = 0;
  for (const auto& t : f.terms) {
    Fq::Elt v = t.coeff;
    for (std::uint32_t j = 0; j < f.n && v != 0; ++j) {
      if (t.exp[j] < i[j]) {
        v = 0;
        break;
      }
      v = F.mul(v, F.binom(t.exp[j], i[j]));
      if (t.exp[j] > i[j]) v = F.mul(v, F.pow(a[j], t.exp[j] - i[j]));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

void for_each_deriv_index(std::uint32_t n, std::uint32_t m,
                          const std::function<void(const DerivIndex&)>& fn) {
  DerivIndex cur(n, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t pos, std::uint32_t left) {
        if (pos + 1 == n) {
          cur[pos] = left;
          fn(cur);
          return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
          cur[pos] = v;
          rec(pos + 1, left - v);
        }
      };
  for (std::uint32_t w = 0; w < m; ++w) rec(0, w);
}

std::optional<std::uint32_t> multiplicity_at(const Fq& F, const MultiPoly& f,
                                             std::span<const Fq::Elt> a) {
  if (f.is_zero()) return std::nullopt;
  std::uint32_t d = (std::uint32_t)f.degree();
  for (std::uint32_t w = 0; w <= d; ++w) {
    bool nonzero = false;
    DerivIndex cur(f.n, 0);
    std::function<void(std::uint32_t, std::uint32_t)> rec =
        [&](std::uint32_t pos, std::uint32_t left) {
          if (nonzero) return;
          if (pos + 1 == f.n) {
            cur[pos] = left;
            if (hasse_evaluate(F, f, cur, a) != 0) nonzero = true;
            return;
          }
          for (std::uint32_t v = 0; v <= left && !nonzero; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
          }
        };
    rec(0, w);
    if (nonzero) return w;
  }
  throw std::logic_error(
      "nonzero polynomial vanishes to all orders (internal fault)");
}

}  // namespace conika
