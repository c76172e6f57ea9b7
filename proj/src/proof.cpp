#include "conika/proof.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace conika {

std::string to_string(TraceMode m) {
  return m == TraceMode::kakeya ? "kakeya" : "nikodym";
}

namespace {

// f evaluated at a tuple of Laurent polynomials, with per-variable power
// caches.
template <class Ctx>
LaurentPoly<Ctx> compose_coords(
    const Ctx& K, const MultiPoly& f,
    const std::vector<LaurentPoly<Ctx>>& coords,
    const std::function<typename Ctx::Elt(Fq::Elt)>& embed) {
  std::vector<std::uint16_t> maxe(f.n, 0);
  for (const auto& t : f.terms)
    for (std::uint32_t j = 0; j < f.n; ++j)
      maxe[j] = std::max(maxe[j], t.exp[j]);

  std::vector<std::vector<LaurentPoly<Ctx>>> pw(f.n);
  for (std::uint32_t j = 0; j < f.n; ++j) {
    pw[j].resize(maxe[j] + 1);
    pw[j][0] = LaurentPoly<Ctx>::constant(K.one());
    for (std::uint16_t e = 1; e <= maxe[j]; ++e)
      pw[j][e] = laurent_mul(K, pw[j][e - 1], coords[j]);
  }

  LaurentPoly<Ctx> acc;
  for (const auto& t : f.terms) {
    LaurentPoly<Ctx> term = LaurentPoly<Ctx>::constant(embed(t.coeff));
    for (std::uint32_t j = 0; j < f.n; ++j)
      if (t.exp[j]) term = laurent_mul(K, term, pw[j][t.exp[j]]);
    acc = laurent_add(K, acc, term);
  }
  return acc;
}

void check_dims(const MultiPoly& f, const Point& a, const Point& b,
                const Point& c) {
  if (a.size() != f.n || b.size() != f.n || c.size() != f.n)
    throw std::invalid_argument("vector length != number of variables");
}

}  // namespace

UniPoly<Fq> restrict_parabola(const Fq& F, const MultiPoly& f, const Point& a,
                              const Point& b, const Point& c) {
  check_dims(f, a, b, c);
  if (f.is_zero()) return {};
  std::vector<LaurentPoly<Fq>> coords(f.n);
  for (std::uint32_t j = 0; j < f.n; ++j) {
    coords[j].low = 0;
    coords[j].c = {a[j], b[j], c[j]};
    coords[j] = laurent_trim<Fq>(std::move(coords[j]));
  }
  auto L = compose_coords<Fq>(F, f, coords, [](Fq::Elt e) { return e; });
  return laurent_to_unipoly(F, L, 0);
}

UniPoly<Fq> restrict_hyperbola(const Fq& F, const MultiPoly& f, const Point& a,
                               const Point& b, const Point& c) {
  check_dims(f, a, b, c);
  if (f.is_zero()) return {};
  std::vector<LaurentPoly<Fq>> coords(f.n);
  for (std::uint32_t j = 0; j < f.n; ++j) {
    coords[j].low = -1;
    coords[j].c = {c[j], a[j], b[j]};
    coords[j] = laurent_trim<Fq>(std::move(coords[j]));
  }
  auto L = compose_coords<Fq>(F, f, coords, [](Fq::Elt e) { return e; });
  return laurent_to_unipoly(F, L, f.degree());
}

UniPoly<Fq2> restrict_ellipse(const Fq& F, const Fq2& E, const MultiPoly& f,
                              const Conic& C) {
  if (C.kind != ConicKind::ellipse || !C.ellipse)
    throw std::invalid_argument("restrict_ellipse needs an ellipse conic");
  check_dims(f, C.a, C.b, C.c);
  if (f.is_zero()) return {};
  const EllipseParam& P = *C.ellipse;

  // x(t) = xh t + xl t^{-1},  y(t) = yh t + yl t^{-1}  over F_{q^2}.
  Fq2::Elt half = E.embed(F.inv(F.from_int(2)));
  Fq2::Elt zh = E.mul(half, E.z());
  Fq2::Elt gv = E.embed(F.mul(F.inv(P.g), P.v));
  Fq2::Elt u = E.embed(P.u), v = E.embed(P.v);
  Fq2::Elt xh = E.add(E.mul(gv, zh), E.mul(u, half));
  Fq2::Elt xl = E.add(E.neg(E.mul(gv, zh)), E.mul(u, half));
  Fq2::Elt yh = E.add(E.mul(u, zh), E.mul(v, half));
  Fq2::Elt yl = E.add(E.neg(E.mul(u, zh)), E.mul(v, half));

  std::vector<LaurentPoly<Fq2>> coords(f.n);
  for (std::uint32_t j = 0; j < f.n; ++j) {
    Fq2::Elt bj = E.embed(C.b[j]), cj = E.embed(C.c[j]);
    coords[j].low = -1;
    coords[j].c = {E.add(E.mul(bj, xl), E.mul(cj, yl)), E.embed(C.a[j]),
                   E.add(E.mul(bj, xh), E.mul(cj, yh))};
    coords[j] = laurent_trim<Fq2>(std::move(coords[j]));
  }
  auto L = compose_coords<Fq2>(
      E, f, coords, [&E](Fq::Elt e) { return E.embed(e); });
  return laurent_to_unipoly(E, L, f.degree());
}

Restriction restrict_conic(const Fq& F, const MultiPoly& f, const Conic& C) {
  Restriction r;
  r.kind = C.kind;
  switch (C.kind) {
    case ConicKind::parabola:
      r.shift = 0;
      r.base = restrict_parabola(F, f, C.a, C.b, C.c);
      break;
    case ConicKind::hyperbola:
      r.shift = std::max(f.degree(), 0);
      r.base = restrict_hyperbola(F, f, C.a, C.b, C.c);
      break;
    case ConicKind::ellipse: {
      r.shift = std::max(f.degree(), 0);
      r.over_ext = true;
      Fq2 E(F, C.ellipse->g);
      r.ext = restrict_ellipse(F, E, f, C);
      break;
    }
  }
  return r;
}

Fq::Elt direction_coefficient(const Fq& F, const MultiPoly& f,
                              const Conic& C) {
  if (f.is_zero())
    throw std::invalid_argument("direction coefficient of the zero polynomial");
  if (C.kind == ConicKind::ellipse)
    throw std::invalid_argument("an ellipse has no direction");
  std::uint32_t d = (std::uint32_t)f.degree();
  if (C.kind == ConicKind::parabola)
    return restrict_parabola(F, f, C.a, C.b, C.c).coeff(2 * d);
  return restrict_hyperbola(F, f, C.a, C.b, C.c).coeff(0);
}

Fq::Elt recover_missing_value(const Fq& F, const Conic& C,
                              const std::map<std::uint64_t, Fq::Elt>& values,
                              std::uint32_t D) {
  auto params = conic_parameters(F, C);
  std::uint64_t t0 = 0;
  std::size_t missing = 0;
  for (auto t : params)
    if (!values.count(t)) {
      t0 = t;
      ++missing;
    }
  if (missing != 1 || values.size() != params.size() - 1)
    throw std::invalid_argument(
        "values must cover the conic parameters except exactly one");
  std::uint64_t known = params.size() - 1;
  if (known <= 2 * (std::uint64_t)D)
    throw std::invalid_argument(
        "insufficient points for the degree bound: have " +
        std::to_string(known) + " known parameters, need > 2D = " +
        std::to_string(2 * D));

  if (C.kind == ConicKind::ellipse) {
    Fq2 E(F, C.ellipse->g);
    std::vector<Fq2::Elt> xs, ys;
    for (auto t : params) {
      if (t == t0) continue;
      xs.push_back(t);
      ys.push_back(E.mul(E.pow(t, D), E.embed(values.at(t))));
    }
    auto G = lagrange_interpolate<Fq2>(E, xs, ys);
    if (G.degree() > 2 * (int)D)
      throw std::invalid_argument(
          "not a degree-D restriction: interpolant degree " +
          std::to_string(G.degree()) + " > 2D = " + std::to_string(2 * D));
    Fq2::Elt v = E.mul(upoly_eval(E, G, t0), E.inv(E.pow(t0, D)));
    if (!E.in_base(v))
      throw std::invalid_argument(
          "not a degree-D restriction: recovered value lies outside the "
          "base field");
    return E.alpha(v);
  }

  std::vector<Fq::Elt> xs, ys;
  for (auto t : params) {
    if (t == t0) continue;
    Fq::Elt shift =
        C.kind == ConicKind::hyperbola ? F.pow((Fq::Elt)t, D) : F.one();
    xs.push_back((Fq::Elt)t);
    ys.push_back(F.mul(shift, values.at(t)));
  }
  auto G = lagrange_interpolate<Fq>(F, xs, ys);
  if (G.degree() > 2 * (int)D)
    throw std::invalid_argument(
        "not a degree-D restriction: interpolant degree " +
        std::to_string(G.degree()) + " > 2D = " + std::to_string(2 * D));
  Fq::Elt v = upoly_eval(F, G, (Fq::Elt)t0);
  if (C.kind == ConicKind::hyperbola)
    v = F.mul(v, F.inv(F.pow((Fq::Elt)t0, D)));
  return v;
}

// --- run_trace ----------------------------------------------------------

namespace {

std::string index_str(const DerivIndex& i) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (j) os << ',';
    os << i[j];
  }
  os << ')';
  return os.str();
}

}  // namespace

TraceReport run_trace(const WitnessedSet& W, TraceMode mode,
                      const TraceOptions& opts) {
  const Fq& F = W.field;
  const std::uint32_t n = W.n;
  const std::uint64_t space = [&] {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < n; ++i) s *= F.q();
    return s;
  }();

  TraceReport R;
  R.mode = mode;
  R.total = mode == TraceMode::kakeya ? space - 1 : space;
  R.multiplicity_mode = opts.l.has_value() || opts.m.has_value();

  std::uint32_t l = 1, m = 1;
  std::int64_t d_budget;
  if (R.multiplicity_mode) {
    l = opts.l.value_or(2);
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (mode == TraceMode::kakeya)
      m = opts.m.value_or(3 * l);
    else
      m = opts.m.value_or(
          (std::uint32_t)((std::uint64_t)(3 * F.q() - 2) * l / (F.q() - 2)));
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    d_budget = (std::int64_t)l * F.q() - 1;
  } else {
    d_budget = ((std::int64_t)F.q() - 3) / 2;
  }
  R.l = R.multiplicity_mode ? l : 0;
  R.m = m;
  R.bound = d_budget;

  // Witness selection.
  std::vector<const Witness*> ws;
  for (const auto& w : W.witnesses) {
    bool take = mode == TraceMode::nikodym
                    ? w.role == WitnessRole::point
                    : w.role != WitnessRole::point;
    if (take) ws.push_back(&w);
  }
  if (ws.empty())
    throw std::invalid_argument(
        std::string("missing witnesses: the set carries no ") +
        (mode == TraceMode::kakeya ? "direction" : "point") + " witnesses");

  // Smallest degree whose dimension count is feasible, within the
  // theorem's budget.
  const auto& S = W.points;
  std::uint64_t rows =
      (std::uint64_t)S.size() * binom_u64(m + n - 1, n);
  std::int64_t d_cap = std::min<std::int64_t>(d_budget, opts.max_degree);
  std::int64_t d_solve = -1;
  for (std::int64_t d = 0; d <= d_cap; ++d)
    if (rows < count_monomials(n, d)) {
      d_solve = d;
      break;
    }
  if (d_solve < 0) {
    std::string counts = "|S|*C(m+n-1,n) = " + std::to_string(rows) +
                         " >= C(d+n,n) = " +
                         std::to_string(count_monomials(n, std::max<std::int64_t>(d_cap, 0))) +
                         " at d = " + std::to_string(d_cap);
    if (R.multiplicity_mode)
      throw std::invalid_argument("degree budget infeasible for |W|: " +
                                  counts);
    R.solved = false;
    R.reason = "solver infeasible at the theorem degree budget: " + counts +
               "; degree budget exceeds the (q-3)/2 threshold -- no "
               "contradiction derivable";
    return R;
  }

  MultiPoly f =
      m == 1 ? vanishing_polynomial(F, S, n, (std::uint32_t)d_solve, opts.exec,
                                    opts.max_degree)
             : vanishing_polynomial_with_multiplicity(
                   F, S, n, (std::uint32_t)d_solve, m, opts.exec,
                   opts.max_degree);
  R.solved = true;
  R.poly = f;
  R.degree = f.degree();
  const std::int64_t d = f.degree();
  MultiPoly fd = homogeneous_part(f, (int)d);

  // Derivative indices replayed per witness: just (0,...,0) in plain
  // mode, every weight < l in multiplicity mode.
  std::vector<DerivIndex> idxs;
  for_each_deriv_index(n, R.multiplicity_mode ? l : 1,
                       [&](const DerivIndex& i) { idxs.push_back(i); });

  // Per-witness replay; witnesses are independent, records are collected
  // in witness order.
  std::vector<std::vector<TraceRecord>> recs(ws.size());
  auto replay = [&](std::size_t wi) {
    const Witness& w = *ws[wi];
    std::vector<TraceRecord>& out = recs[wi];

    Conic C = w.conic;
    std::int64_t t0 = -1;
    if (mode == TraceMode::kakeya) {
      if (C.kind == ConicKind::ellipse) {
        out.push_back({w.key, "none (ellipse witness carries no direction)", 0,
                       0, false, false});
        return;
      }
      bool keyed = (C.kind == ConicKind::parabola && C.c == w.key) ||
                   (C.kind == ConicKind::hyperbola &&
                    (C.b == w.key || C.c == w.key));
      if (!keyed) {
        out.push_back({w.key, "none (witness conic does not carry the key)", 0,
                       0, false, false});
        return;
      }
      // Relabel t -> t^{-1} so the key appears in role c.
      if (C.kind == ConicKind::hyperbola && C.c != w.key) std::swap(C.b, C.c);
    }
    if (!linearly_independent(F, C.b, C.c)) {
      out.push_back(
          {w.key, "none (witness b, c linearly dependent)", 0, 0, false,
           false});
      return;
    }
    auto params = conic_parameters(F, C);
    if (mode == TraceMode::nikodym) {
      for (auto t : params)
        if (conic_point_at(F, C, t) == w.key) {
          t0 = (std::int64_t)t;
          break;
        }
      if (t0 < 0) {
        out.push_back(
            {w.key, "none (witness conic does not pass through the point)", 0,
             0, false, false});
        return;
      }
    }
    const std::int64_t param_count =
        (std::int64_t)params.size() - (mode == TraceMode::nikodym ? 1 : 0);

    std::optional<Fq2> Eopt;
    if (C.kind == ConicKind::ellipse) Eopt.emplace(F, C.ellipse->g);

    for (const auto& iv : idxs) {
      TraceRecord rec;
      rec.witness_key = w.key;
      std::uint32_t wt = weight(iv);
      MultiPoly fi = R.multiplicity_mode ? hasse_derivative(F, f, iv) : f;

      if (mode == TraceMode::kakeya)
        rec.deduction = R.multiplicity_mode
                            ? "(f_d)^" + index_str(iv) + "(c)=0"
                            : "f_d(c)=0";
      else
        rec.deduction = R.multiplicity_mode
                            ? "f^" + index_str(iv) + "(x)=0"
                            : "f(x)=0";

      if (!R.multiplicity_mode) {
        // Vanishing count versus the restriction degree.
        Restriction res = restrict_conic(F, fi, C);
        std::int64_t zeros = 0;
        for (auto t : params) {
          if ((std::int64_t)t == t0) continue;
          bool z = res.over_ext ? upoly_eval(*Eopt, res.ext, t) == 0
                                : upoly_eval(F, res.base, (Fq::Elt)t) == 0;
          if (z) ++zeros;
        }
        rec.zeros = zeros;
        rec.cap = res.degree();
        rec.valid = res.is_zero() || zeros > rec.cap;
      } else if (fi.is_zero()) {
        rec.zeros = -1;  // restriction identically zero
        rec.cap = -1;
        rec.valid = true;
      } else {
        Restriction res = restrict_conic(F, fi, C);
        if (res.is_zero()) {
          rec.zeros = -1;
          rec.cap = -1;
          rec.valid = true;
        } else {
          // Per-parameter multiplicities, then the inequality as stated:
          // count * (m - wt) > 2 (d - wt).
          bool premise = true;
          std::int64_t mult_sum = 0;
          for (auto t : params) {
            if ((std::int64_t)t == t0) continue;
            std::optional<std::uint32_t> mt =
                res.over_ext
                    ? upoly_multiplicity_at(*Eopt, res.ext, (Fq2::Elt)t)
                    : upoly_multiplicity_at(F, res.base, (Fq::Elt)t);
            std::uint32_t mv = mt.value_or(UINT32_MAX);
            if (mv < m - wt) premise = false;
            mult_sum += mv;
          }
          rec.zeros = mult_sum;
          rec.cap = 2 * (d - (std::int64_t)wt);
          rec.valid = premise && param_count * (std::int64_t)(m - wt) > rec.cap;
          if (rec.valid)
            throw std::logic_error(
                "multiplicity sum exceeds the degree of a nonzero "
                "restriction (internal fault)");
        }
      }

      // Re-check the deduced value directly on the solved polynomial.
      if (mode == TraceMode::kakeya) {
        MultiPoly fd_i =
            R.multiplicity_mode ? hasse_derivative(F, fd, iv) : fd;
        rec.verified = evaluate(F, fd_i, w.key) == 0;
        if (!R.multiplicity_mode && rec.valid) {
          if (direction_coefficient(F, f, C) !=
              evaluate(F, fd, w.key))
            throw std::logic_error(
                "direction coefficient disagrees with f_d(c) (internal "
                "fault)");
        }
      } else {
        rec.verified = hasse_evaluate(F, f, iv, w.key) == 0;
      }
      out.push_back(std::move(rec));
    }
  };

  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t wi = 0; wi < (std::int64_t)ws.size(); ++wi) {
      try {
        replay(wi);
      } catch (const std::exception& e) {
        recs[wi] = {{ws[wi]->key, std::string("error: ") + e.what(), 0, 0,
                     false, false}};
      }
    }
  } else {
    for (std::size_t wi = 0; wi < ws.size(); ++wi) {
      try {
        replay(wi);
      } catch (const std::exception& e) {
        recs[wi] = {{ws[wi]->key, std::string("error: ") + e.what(), 0, 0,
                     false, false}};
      }
    }
  }

  // Coverage: a key counts when some witness for it replays fully.
  std::unordered_map<std::uint64_t, bool> covered;
  for (std::size_t wi = 0; wi < ws.size(); ++wi) {
    bool all_ok = !recs[wi].empty();
    for (const auto& rec : recs[wi])
      all_ok = all_ok && rec.valid && rec.verified;
    auto code = point_code(F, ws[wi]->key);
    auto [it, inserted] = covered.emplace(code, all_ok);
    if (!inserted) it->second = it->second || all_ok;
    for (auto& rec : recs[wi]) R.records.push_back(std::move(rec));
  }
  for (const auto& [code, ok] : covered)
    if (ok) ++R.covered;
  R.full_coverage = R.covered == R.total;

  if (R.full_coverage) {
    bool final_step = R.multiplicity_mode
                          ? (std::int64_t)l * F.q() > d  // l q^n > d q^{n-1}
                          : d < (std::int64_t)F.q();
    if (final_step) {
      R.contradiction = true;
      R.reason = std::string("full coverage forces the nonzero ") +
                 (mode == TraceMode::kakeya ? "homogeneous part f_d"
                                            : "polynomial f") +
                 " to vanish identically: contradiction";
    } else {
      R.reason = "full coverage but the final vanishing step fails";
    }
  } else {
    R.reason = "partial coverage: " + std::to_string(R.covered) + " of " +
               std::to_string(R.total) +
               " keys replay fully; no contradiction claim";
  }
  return R;
}

}  // namespace conika
