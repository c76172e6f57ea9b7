#include "conika/field.hpp"

#include <algorithm>
#include <sstream>

namespace conika {

namespace {

// Dense F_p[x] arithmetic on little-endian coefficient vectors; only used
// for modulus selection and bootstrapping the log tables.
using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (std::uint64_t)a[i] * b[j]) % p;
  return poly_trim(std::move(r));
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  a = poly_trim(std::move(a));
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = (std::uint64_t)lead * m[i] % p;
      a[i + shift] = (std::uint32_t)((a[i + shift] + p - sub) % p);
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, std::uint32_t p) {
  return poly_mod(a, d, p).empty();
}

Poly index_to_poly(std::uint64_t idx, std::uint32_t p, std::uint32_t len) {
  Poly r(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    r[i] = (std::uint32_t)(idx % p);
    idx /= p;
  }
  return poly_trim(std::move(r));
}

// Irreducibility over F_p by trial division with all monic polynomials of
// degree 1..deg/2.  Fine at desk scale.
bool poly_irreducible(const Poly& m, std::uint32_t p) {
  std::uint32_t deg = (std::uint32_t)m.size() - 1;
  for (std::uint32_t e = 1; 2 * e <= deg; ++e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly cand = index_to_poly(idx, p, e);
      cand.resize(e + 1, 0);
      cand[e] = 1;
      if (poly_divides(cand, m, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Rows needed so that univariate restrictions (degree up to twice the
// solver degree budget) can take Hasse derivatives.
constexpr std::uint32_t kBinomRows = 131;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1)
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  return {(std::uint32_t)p, k};
}

Fq Fq::make(std::uint32_t p, std::uint32_t k, std::uint32_t max_q) {
  if (p % 2 == 0)
    throw std::invalid_argument("even characteristic: p must be an odd prime");
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q)
      throw std::invalid_argument(
          "q = p^k exceeds the magnitude budget max_q = " +
          std::to_string(max_q));
  }

  Fq F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = (std::uint32_t)q;

  if (k == 1) {
    F.modulus_ = {0, 1};  // x
  } else {
    // Smallest-index monic irreducible of degree k.
    bool found = false;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      Poly cand = index_to_poly(idx, p, k);
      cand.resize(k + 1, 0);
      cand[k] = 1;
      if (poly_irreducible(cand, p)) {
        F.modulus_ = cand;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("no irreducible modulus found (internal fault)");

    // Bootstrap arithmetic, then discrete-log tables off a generator.
    auto elt_to_poly = [&](Elt a) { return index_to_poly(a, p, k); };
    auto poly_to_elt = [&](const Poly& a) {
      Elt r = 0, pw = 1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        r += a[i] * pw;
        pw *= p;
      }
      return r;
    };
    auto mul_slow = [&](Elt a, Elt b) {
      return poly_to_elt(
          poly_mod(poly_mul(elt_to_poly(a), elt_to_poly(b), p), F.modulus_, p));
    };
    auto pow_slow = [&](Elt a, std::uint64_t e) {
      Elt r = 1, base = a;
      while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      return r;
    };

    auto factors = prime_factors(q - 1);
    Elt gen = 0;
    for (Elt cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (auto f : factors)
        if (pow_slow(cand, (q - 1) / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }
    if (gen == 0) throw std::logic_error("no generator found (internal fault)");

    F.exp_.assign(2 * (q - 1), 0);
    F.log_.assign(q, UINT32_MAX);
    Elt cur = 1;
    for (std::uint64_t j = 0; j < q - 1; ++j) {
      F.exp_[j] = cur;
      F.exp_[j + (q - 1)] = cur;
      F.log_[cur] = (std::uint32_t)j;
      cur = mul_slow(cur, gen);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");
  }

  F.binom_rows_ = kBinomRows;
  F.binom_.assign((std::size_t)kBinomRows * (kBinomRows + 1) / 2, 0);
  for (std::uint32_t n = 0; n < kBinomRows; ++n) {
    std::size_t row = (std::size_t)n * (n + 1) / 2;
    F.binom_[row] = 1;
    for (std::uint32_t j = 1; j <= n; ++j) {
      std::uint32_t up = (j <= n - 1) ? F.binom_[row - n + j] : 0;
      std::uint32_t upleft = F.binom_[row - n + j - 1];
      F.binom_[row + j] = (up + upleft) % p;
    }
  }

  // Construction self-check: a * a^{-1} = 1 across the whole field.
  for (Elt a = 1; a < F.q_; ++a)
    if (F.mul(a, F.inv(a)) != 1)
      throw std::logic_error("inverse self-check failed (internal fault)");

  return F;
}

Fq::Elt Fq::binom(std::uint32_t n, std::uint32_t k) const {
  if (k > n) return 0;
  if (n < binom_rows_) return binom_[(std::size_t)n * (n + 1) / 2 + k];
  // Rare slow path past the cached triangle.
  std::vector<Elt> row(n + 1, 0);
  row[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i; j > 0; --j) row[j] = (row[j] + row[j - 1]) % p_;
  return row[k];
}

std::string Fq::describe_element(Elt a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto c = to_coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

Fq make_field(std::uint32_t p, std::uint32_t k, std::uint32_t max_q) {
  return Fq::make(p, k, max_q);
}

Fq::Elt find_nonsquare(const Fq& F) {
  for (Fq::Elt g = 1; g < F.q(); ++g)
    if (!F.is_square(g)) return g;
  throw std::logic_error("no non-square found (internal fault)");
}

Fq2::Fq2(const Fq& base, Fq::Elt g) : base_(&base), g_(g) {
  if (g == 0 || base.is_square(g))
    throw std::invalid_argument("g is a square (or zero); need a non-square");
  // z^q = -z must hold.
  if (pow(z(), base.q()) != neg(z()))
    throw std::logic_error("z^q != -z (internal fault)");
}

Fq2 quadratic_extension(const Fq& F, Fq::Elt g) { return Fq2(F, g); }

std::vector<Fq2::Elt> norm_one_subgroup(const Fq2& E) {
  // t^{q+1} = Norm(t), so the subgroup is cut out by one norm equation.
  std::vector<Fq2::Elt> out;
  const Fq& F = E.base();
  for (Fq::Elt b = 0; b < F.q(); ++b)
    for (Fq::Elt a = 0; a < F.q(); ++a) {
      Fq2::Elt t = E.make(a, b);
      if (t != 0 && E.norm(t) == 1) out.push_back(t);
    }
  std::sort(out.begin(), out.end());
  if (out.size() != F.q() + 1)
    throw std::logic_error("norm-one subgroup has wrong order (internal fault)");
  return out;
}

}  // namespace conika
