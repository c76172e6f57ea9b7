#ifndef CONIKA_FIELD_HPP_
#define CONIKA_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conika {

/// Arithmetic context for F_q, q = p^k with p an odd prime, k >= 1.
///
/// Elements are integer indices in [0, q): the element with F_p
/// coefficient tuple (a0, ..., a_{k-1}) in powers of the generator x has
/// index a0 + a1*p + ... + a_{k-1}*p^{k-1}.  Index order is the canonical
/// element order used everywhere (modulus selection, deterministic scans,
/// serialization).
///
/// Contexts are immutable after construction and safe to share across
/// threads; all operations are pure.
class Fq {
 public:
  using Elt = std::uint32_t;

  static constexpr std::uint32_t kDefaultMaxQ = 1000;

  /// Builds F_{p^k}.  The modulus is the monic irreducible polynomial of
  /// degree k over F_p with the smallest index (trivially x when k = 1).
  /// Throws std::invalid_argument for even/composite p or q > max_q.
  static Fq make(std::uint32_t p, std::uint32_t k,
                 std::uint32_t max_q = kDefaultMaxQ);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  std::uint64_t size() const { return q_; }

  /// Monic modulus, k+1 coefficients over F_p, little-endian ([0,1] = x
  /// when k = 1).
  const std::vector<Elt>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const {
    if (k_ == 1) {
      Elt s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    Elt r = 0, pw = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      Elt s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * pw;
      pw *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Elt neg(Elt a) const {
    if (k_ == 1) return a ? p_ - a : 0;
    Elt r = 0, pw = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      Elt d = a % p_;
      r += (d ? p_ - d : 0) * pw;
      pw *= p_;
      a /= p_;
    }
    return r;
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (k_ == 1) return static_cast<Elt>((std::uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Multiplicative inverse; throws std::invalid_argument on 0.
  Elt inv(Elt a) const {
    if (a == 0) throw std::invalid_argument("division by zero in F_q");
    if (k_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1) - log_[a]];
  }

  Elt pow(Elt a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (k_ > 1) {
      std::uint64_t le = (std::uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1);
      return exp_[le];
    }
    Elt r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// True iff x is 0 or x^{(q-1)/2} = 1.
  bool is_square(Elt x) const {
    if (x == 0) return true;
    return pow(x, (q_ - 1) / 2) == 1;
  }

  /// Smallest s (in index order) with s^2 = x, if any.
  std::optional<Elt> sqrt(Elt x) const {
    for (Elt s = 0; s < q_; ++s)
      if (mul(s, s) == x) return s;
    return std::nullopt;
  }

  /// Embeds an integer (reduced mod p) as a constant.
  Elt from_int(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
  }

  std::vector<Elt> to_coeffs(Elt a) const {
    std::vector<Elt> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  Elt from_coeffs(const std::vector<Elt>& c) const {
    if (c.size() != k_)
      throw std::invalid_argument("coefficient tuple length != k");
    Elt r = 0, pw = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (c[i] >= p_) throw std::invalid_argument("coefficient >= p");
      r += c[i] * pw;
      pw *= p_;
    }
    return r;
  }

  /// C(n, k) mod p.  Backed by a Pascal triangle sized for the degree
  /// budget; larger arguments are computed on the fly.
  Elt binom(std::uint32_t n, std::uint32_t k) const;
  Elt binom_elt(std::uint32_t n, std::uint32_t k) const { return binom(n, k); }

  bool operator==(const Fq& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Fq& o) const { return !(*this == o); }

  std::string describe_element(Elt a) const;

  /// Default-constructed contexts are empty placeholders (q = 0); only
  /// Fq::make produces a usable field.
  Fq() = default;

 private:
  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<Elt> modulus_;
  std::vector<Elt> exp_, log_;  // discrete log tables, k > 1 only
  std::vector<Elt> binom_;      // Pascal triangle mod p, row-major
  std::uint32_t binom_rows_ = 0;
};

/// F_{q^2} = F_q[z]/(z^2 - g) for a non-square g in F_q*.
///
/// Elements are pairs (alpha, beta) <-> alpha + beta*z, stored as the
/// index alpha + beta*q.  Holds a non-owning pointer to the base field;
/// the base context must outlive this one.
class Fq2 {
 public:
  using Elt = std::uint64_t;

  /// Throws std::invalid_argument if g is zero or a square.
  Fq2(const Fq& base, Fq::Elt g);

  const Fq& base() const { return *base_; }
  Fq::Elt g() const { return g_; }
  std::uint64_t size() const { return (std::uint64_t)base_->q() * base_->q(); }

  Elt make(Fq::Elt a, Fq::Elt b) const {
    return (Elt)a + (Elt)b * base_->q();
  }
  Fq::Elt alpha(Elt e) const { return (Fq::Elt)(e % base_->q()); }
  Fq::Elt beta(Elt e) const { return (Fq::Elt)(e / base_->q()); }
  Elt embed(Fq::Elt a) const { return a; }
  bool in_base(Elt e) const { return beta(e) == 0; }
  Elt z() const { return make(0, 1); }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt x, Elt y) const {
    const Fq& F = *base_;
    return make(F.add(alpha(x), alpha(y)), F.add(beta(x), beta(y)));
  }
  Elt neg(Elt x) const {
    const Fq& F = *base_;
    return make(F.neg(alpha(x)), F.neg(beta(x)));
  }
  Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }

  Elt mul(Elt x, Elt y) const {
    const Fq& F = *base_;
    Fq::Elt a = alpha(x), b = beta(x), c = alpha(y), d = beta(y);
    Fq::Elt re = F.add(F.mul(a, c), F.mul(g_, F.mul(b, d)));
    Fq::Elt im = F.add(F.mul(a, d), F.mul(b, c));
    return make(re, im);
  }

  /// Frobenius x -> x^q, i.e. alpha + beta*z -> alpha - beta*z.
  Elt conj(Elt x) const { return make(alpha(x), base_->neg(beta(x))); }

  /// Norm to the base field: x * x^q = alpha^2 - g*beta^2.
  Fq::Elt norm(Elt x) const {
    const Fq& F = *base_;
    return F.sub(F.mul(alpha(x), alpha(x)), F.mul(g_, F.mul(beta(x), beta(x))));
  }

  Elt inv(Elt x) const {
    if (x == 0) throw std::invalid_argument("division by zero in F_{q^2}");
    Fq::Elt ninv = base_->inv(norm(x));
    Elt c = conj(x);
    return make(base_->mul(alpha(c), ninv), base_->mul(beta(c), ninv));
  }

  Elt pow(Elt x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    Elt r = 1, b = x;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Elt binom_elt(std::uint32_t n, std::uint32_t k) const {
    return embed(base_->binom(n, k));
  }

  bool operator==(const Fq2& o) const {
    return *base_ == *o.base_ && g_ == o.g_;
  }

 private:
  const Fq* base_;
  Fq::Elt g_;
};

inline Fq::Elt binom_elt_of(const Fq& F, std::uint32_t n, std::uint32_t k) {
  return F.binom(n, k);
}

/// Builds F_{p^k}; see Fq::make.
Fq make_field(std::uint32_t p, std::uint32_t k,
              std::uint32_t max_q = Fq::kDefaultMaxQ);

/// Smallest g in index order with g^{(q-1)/2} = -1.
Fq::Elt find_nonsquare(const Fq& F);

/// F_{q^2} as F_q[z]/(z^2 - g); throws if g is zero or a square.
Fq2 quadratic_extension(const Fq& F, Fq::Elt g);

/// All t in F_{q^2}* with t^{q+1} = 1, in index order.  Always has
/// exactly q+1 elements.
std::vector<Fq2::Elt> norm_one_subgroup(const Fq2& E);

/// Decomposes q as p^k with p prime; throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace conika

#endif  // CONIKA_FIELD_HPP_
