#ifndef CONIKA_POLY_HPP_
#define CONIKA_POLY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "conika/field.hpp"

namespace conika {

/// Sparse multivariate polynomial over F_q.
///
/// Terms are kept in the canonical monomial order: ascending total degree,
/// ties broken lexicographically on the exponent tuple.  No zero
/// coefficients are stored; the zero polynomial has an empty term list and
/// degree() == -1.
struct MultiPoly {
  struct Term {
    std::vector<std::uint16_t> exp;
    Fq::Elt coeff;
    bool operator==(const Term&) const = default;
  };

  std::uint32_t n = 1;
  std::vector<Term> terms;

  static MultiPoly zero(std::uint32_t n) { return MultiPoly{n, {}}; }

  /// Normalizes an arbitrary term list: merges duplicates, drops zeros,
  /// sorts canonically.
  static MultiPoly make(const Fq& F, std::uint32_t n, std::vector<Term> ts);

  bool is_zero() const { return terms.empty(); }
  int degree() const;

  bool operator==(const MultiPoly&) const = default;
};

/// true if a precedes b in the canonical monomial order.
bool monomial_less(const std::vector<std::uint16_t>& a,
                   const std::vector<std::uint16_t>& b);

/// All exponent tuples of total degree <= d in canonical order; the
/// column order used by the vanishing solver.
std::vector<std::vector<std::uint16_t>> monomials_up_to(std::uint32_t n,
                                                        std::uint32_t d);

/// C(d+n, n) with an overflow guard.
std::uint64_t count_monomials(std::uint64_t n, std::uint64_t d);

/// C(a, b) as an exact integer; throws on overflow.
std::uint64_t binom_u64(std::uint64_t a, std::uint64_t b);

Fq::Elt evaluate(const Fq& F, const MultiPoly& f, std::span<const Fq::Elt> x);

/// Terms of total degree exactly d.
MultiPoly homogeneous_part(const MultiPoly& f, int d);

using DerivIndex = std::vector<std::uint32_t>;

inline std::uint32_t weight(const DerivIndex& i) {
  std::uint32_t w = 0;
  for (auto v : i) w += v;
  return w;
}

/// The i'th Hasse derivative: coefficient of y^i in f(x + y).
MultiPoly hasse_derivative(const Fq& F, const MultiPoly& f,
                           const DerivIndex& i);

/// f^{(i)}(a) without materializing f^{(i)}.
Fq::Elt hasse_evaluate(const Fq& F, const MultiPoly& f, const DerivIndex& i,
                       std::span<const Fq::Elt> a);

/// Mult(f, a): the largest M such that every Hasse derivative of weight
/// < M vanishes at a.  nullopt encodes +infinity (zero polynomial).
std::optional<std::uint32_t> multiplicity_at(const Fq& F, const MultiPoly& f,
                                             std::span<const Fq::Elt> a);

/// Calls fn with every index of length n and weight < m, ascending weight
/// then lexicographic.
void for_each_deriv_index(std::uint32_t n, std::uint32_t m,
                          const std::function<void(const DerivIndex&)>& fn);

// ---------------------------------------------------------------------
// Dense univariate polynomials, generic over the field context (Fq or
// Fq2).  Coefficients ascending, trimmed; empty vector = zero polynomial.

template <class Ctx>
struct UniPoly {
  using E = typename Ctx::Elt;
  std::vector<E> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  E coeff(std::size_t i) const { return i < c.size() ? c[i] : E(0); }

  static UniPoly zero() { return {}; }
  static UniPoly constant(E v) {
    UniPoly r;
    if (v != E(0)) r.c = {v};
    return r;
  }
  bool operator==(const UniPoly&) const = default;
};

template <class Ctx>
UniPoly<Ctx> upoly_trim(UniPoly<Ctx> a) {
  while (!a.c.empty() && a.c.back() == typename Ctx::Elt(0)) a.c.pop_back();
  return a;
}

template <class Ctx>
UniPoly<Ctx> upoly_add(const Ctx& K, const UniPoly<Ctx>& a,
                       const UniPoly<Ctx>& b) {
  UniPoly<Ctx> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = K.add(a.coeff(i), b.coeff(i));
  return upoly_trim<Ctx>(std::move(r));
}

template <class Ctx>
UniPoly<Ctx> upoly_scale(const Ctx& K, const UniPoly<Ctx>& a,
                         typename Ctx::Elt s) {
  if (s == K.zero()) return {};
  UniPoly<Ctx> r = a;
  for (auto& v : r.c) v = K.mul(v, s);
  return r;
}

template <class Ctx>
UniPoly<Ctx> upoly_mul(const Ctx& K, const UniPoly<Ctx>& a,
                       const UniPoly<Ctx>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly<Ctx> r;
  r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
  return upoly_trim<Ctx>(std::move(r));
}

template <class Ctx>
typename Ctx::Elt upoly_eval(const Ctx& K, const UniPoly<Ctx>& a,
                             typename Ctx::Elt x) {
  typename Ctx::Elt r = K.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
  return r;
}

/// Hasse derivative evaluation for univariate polynomials:
/// F^{(j)}(x) = sum_k c_k * C(k, j) * x^{k-j}.
template <class Ctx>
typename Ctx::Elt upoly_hasse_eval(const Ctx& K, const UniPoly<Ctx>& a,
                                   std::uint32_t j, typename Ctx::Elt x) {
  typename Ctx::Elt r = K.zero();
  for (std::size_t k = a.c.size(); k-- > j;) {
    r = K.mul(r, x);
    r = K.add(r, K.mul(a.c[k], K.binom_elt((std::uint32_t)k, j)));
  }
  return r;
}

/// Mult of a univariate polynomial at x; nullopt for the zero polynomial.
template <class Ctx>
std::optional<std::uint32_t> upoly_multiplicity_at(const Ctx& K,
                                                   const UniPoly<Ctx>& a,
                                                   typename Ctx::Elt x) {
  if (a.is_zero()) return std::nullopt;
  for (std::uint32_t j = 0; j <= (std::uint32_t)a.degree(); ++j)
    if (upoly_hasse_eval(K, a, j, x) != K.zero()) return j;
  throw std::logic_error("nonzero polynomial with no nonzero derivative");
}

/// Unique interpolant of degree < xs.size() through (xs[i], ys[i]);
/// Newton divided differences, exact.
template <class Ctx>
UniPoly<Ctx> lagrange_interpolate(const Ctx& K,
                                  std::span<const typename Ctx::Elt> xs,
                                  std::span<const typename Ctx::Elt> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("interpolation: xs/ys size mismatch");
  std::size_t m = xs.size();
  std::vector<typename Ctx::Elt> dd(ys.begin(), ys.end());
  for (std::size_t lvl = 1; lvl < m; ++lvl)
    for (std::size_t i = m - 1; i >= lvl; --i) {
      auto num = K.sub(dd[i], dd[i - 1]);
      auto den = K.sub(xs[i], xs[i - lvl]);
      dd[i] = K.mul(num, K.inv(den));
      if (i == lvl) break;
    }
  UniPoly<Ctx> r;
  for (std::size_t i = m; i-- > 0;) {
    // r = r * (t - xs[i]) + dd[i]
    UniPoly<Ctx> lin;
    lin.c = {K.neg(xs[i]), K.one()};
    r = upoly_add(K, upoly_mul(K, r, lin), UniPoly<Ctx>::constant(dd[i]));
  }
  return r;
}

// ---------------------------------------------------------------------
// Laurent polynomials: coefficients of t^{low}, t^{low+1}, ...

template <class Ctx>
struct LaurentPoly {
  using E = typename Ctx::Elt;
  int low = 0;
  std::vector<E> c;

  bool is_zero() const { return c.empty(); }
  static LaurentPoly constant(E v) {
    LaurentPoly r;
    if (v != E(0)) r.c = {v};
    return r;
  }
};

template <class Ctx>
LaurentPoly<Ctx> laurent_trim(LaurentPoly<Ctx> a) {
  std::size_t front = 0;
  while (front < a.c.size() && a.c[front] == typename Ctx::Elt(0)) ++front;
  a.c.erase(a.c.begin(), a.c.begin() + front);
  a.low += (int)front;
  while (!a.c.empty() && a.c.back() == typename Ctx::Elt(0)) a.c.pop_back();
  if (a.c.empty()) a.low = 0;
  return a;
}

template <class Ctx>
LaurentPoly<Ctx> laurent_add(const Ctx& K, const LaurentPoly<Ctx>& a,
                             const LaurentPoly<Ctx>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int low = std::min(a.low, b.low);
  int high = std::max(a.low + (int)a.c.size(), b.low + (int)b.c.size());
  LaurentPoly<Ctx> r;
  r.low = low;
  r.c.assign(high - low, K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    r.c[a.low - low + i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    auto& slot = r.c[b.low - low + i];
    slot = K.add(slot, b.c[i]);
  }
  return laurent_trim<Ctx>(std::move(r));
}

template <class Ctx>
LaurentPoly<Ctx> laurent_mul(const Ctx& K, const LaurentPoly<Ctx>& a,
                             const LaurentPoly<Ctx>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly<Ctx> r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
  return laurent_trim<Ctx>(std::move(r));
}

template <class Ctx>
LaurentPoly<Ctx> laurent_scale(const Ctx& K, const LaurentPoly<Ctx>& a,
                               typename Ctx::Elt s) {
  if (s == K.zero()) return {};
  LaurentPoly<Ctx> r = a;
  for (auto& v : r.c) v = K.mul(v, s);
  return r;
}

/// Multiplies by t^{shift} and converts; throws if any exponent would
/// stay negative.
template <class Ctx>
UniPoly<Ctx> laurent_to_unipoly(const Ctx& K, const LaurentPoly<Ctx>& a,
                                int shift) {
  if (a.is_zero()) return {};
  if (a.low + shift < 0)
    throw std::invalid_argument("Laurent support below the applied shift");
  UniPoly<Ctx> r;
  r.c.assign(a.low + shift + a.c.size(), K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.low + shift + i] = a.c[i];
  return upoly_trim<Ctx>(std::move(r));
}

}  // namespace conika

#endif  // CONIKA_POLY_HPP_
