#include "conika/conic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace conika {

std::string to_string(ConicKind k) {
  switch (k) {
    case ConicKind::parabola: return "parabola";
    case ConicKind::hyperbola: return "hyperbola";
    case ConicKind::ellipse: return "ellipse";
  }
  return "?";
}

std::string to_string(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::lines_intersecting: return "pair of intersecting lines";
    case DegenerateKind::lines_parallel: return "pair of parallel lines";
    case DegenerateKind::lines_identical: return "pair of identical lines";
    case DegenerateKind::single_point: return "point";
    case DegenerateKind::empty_set: return "empty set";
  }
  return "?";
}

Affine2 affine_compose(const Fq& F, const Affine2& f, const Affine2& g) {
  Affine2 r;
  r.m00 = F.add(F.mul(f.m00, g.m00), F.mul(f.m01, g.m10));
  r.m01 = F.add(F.mul(f.m00, g.m01), F.mul(f.m01, g.m11));
  r.m10 = F.add(F.mul(f.m10, g.m00), F.mul(f.m11, g.m10));
  r.m11 = F.add(F.mul(f.m10, g.m01), F.mul(f.m11, g.m11));
  auto [x, y] = f.apply(F, g.t0, g.t1);
  r.t0 = x;
  r.t1 = y;
  return r;
}

Affine2 affine_inverse(const Fq& F, const Affine2& f) {
  Fq::Elt det = F.sub(F.mul(f.m00, f.m11), F.mul(f.m01, f.m10));
  Fq::Elt di = F.inv(det);
  Affine2 r;
  r.m00 = F.mul(f.m11, di);
  r.m01 = F.mul(F.neg(f.m01), di);
  r.m10 = F.mul(F.neg(f.m10), di);
  r.m11 = F.mul(f.m00, di);
  // t' = -M^{-1} t
  r.t0 = F.neg(F.add(F.mul(r.m00, f.t0), F.mul(r.m01, f.t1)));
  r.t1 = F.neg(F.add(F.mul(r.m10, f.t0), F.mul(r.m11, f.t1)));
  return r;
}

namespace {

Fq::Elt eval_conic2d(const Fq& F, const Conic2D& Q, Fq::Elt x, Fq::Elt y) {
  Fq::Elt r = F.mul(Q.A, F.mul(x, x));
  r = F.add(r, F.mul(Q.B, F.mul(x, y)));
  r = F.add(r, F.mul(Q.C, F.mul(y, y)));
  r = F.add(r, F.mul(Q.D, x));
  r = F.add(r, F.mul(Q.E, y));
  return F.add(r, Q.F);
}

// Substitutes the affine map S into Q: returns Q(S(x, y)).
Conic2D substitute(const Fq& F, const Conic2D& Q, const Affine2& S) {
  auto& a = S.m00;
  auto& b = S.m01;
  auto& e = S.t0;
  auto& c = S.m10;
  auto& d = S.m11;
  auto& f = S.t1;
  Conic2D R;
  // X = a x + b y + e, Y = c x + d y + f
  R.A = F.add(F.add(F.mul(Q.A, F.mul(a, a)), F.mul(Q.B, F.mul(a, c))),
              F.mul(Q.C, F.mul(c, c)));
  R.C = F.add(F.add(F.mul(Q.A, F.mul(b, b)), F.mul(Q.B, F.mul(b, d))),
              F.mul(Q.C, F.mul(d, d)));
  Fq::Elt two = F.from_int(2);
  R.B = F.add(F.mul(two, F.add(F.mul(Q.A, F.mul(a, b)), F.mul(Q.C, F.mul(c, d)))),
              F.mul(Q.B, F.add(F.mul(a, d), F.mul(b, c))));
  R.D = F.add(F.add(F.mul(two, F.mul(Q.A, F.mul(a, e))),
                    F.mul(Q.B, F.add(F.mul(a, f), F.mul(c, e)))),
              F.add(F.mul(two, F.mul(Q.C, F.mul(c, f))),
                    F.add(F.mul(Q.D, a), F.mul(Q.E, c))));
  R.E = F.add(F.add(F.mul(two, F.mul(Q.A, F.mul(b, e))),
                    F.mul(Q.B, F.add(F.mul(b, f), F.mul(d, e)))),
              F.add(F.mul(two, F.mul(Q.C, F.mul(d, f))),
                    F.add(F.mul(Q.D, b), F.mul(Q.E, d))));
  R.F = eval_conic2d(F, Q, e, f);
  return R;
}

Conic2D scale_conic2d(const Fq& F, const Conic2D& Q, Fq::Elt s) {
  return {F.mul(Q.A, s), F.mul(Q.B, s), F.mul(Q.C, s),
          F.mul(Q.D, s), F.mul(Q.E, s), F.mul(Q.F, s)};
}

struct ZeroSetAnalysis {
  bool degenerate;
  DegenerateKind deg_kind;
  ConicKind kind;
  std::size_t count;
};

// Independent structural analysis of the zero set, exhaustive over F_q^2.
// A degenerate conic with >= 2 points contains a full line, and a line
// meets an absolutely irreducible conic in at most 2 points, so "3
// collinear points" cleanly separates the cases.
ZeroSetAnalysis analyze_zero_set(const Fq& F, const Conic2D& Q) {
  std::vector<std::pair<Fq::Elt, Fq::Elt>> zs;
  for (Fq::Elt x = 0; x < F.q(); ++x)
    for (Fq::Elt y = 0; y < F.q(); ++y)
      if (eval_conic2d(F, Q, x, y) == 0) zs.emplace_back(x, y);

  ZeroSetAnalysis r{};
  r.count = zs.size();
  if (zs.size() == 0) {
    r.degenerate = true;
    r.deg_kind = DegenerateKind::empty_set;
    return r;
  }
  if (zs.size() == 1) {
    r.degenerate = true;
    r.deg_kind = DegenerateKind::single_point;
    return r;
  }

  auto on_line = [&](std::pair<Fq::Elt, Fq::Elt> p0,
                     std::pair<Fq::Elt, Fq::Elt> dir,
                     std::pair<Fq::Elt, Fq::Elt> pt) {
    // (pt - p0) parallel to dir
    Fq::Elt dx = F.sub(pt.first, p0.first);
    Fq::Elt dy = F.sub(pt.second, p0.second);
    return F.sub(F.mul(dx, dir.second), F.mul(dy, dir.first)) == 0;
  };

  // Look for a full line in the zero set, pivoting on the first point.
  auto p0 = zs[0];
  std::optional<std::pair<Fq::Elt, Fq::Elt>> line_dir;
  std::map<std::pair<Fq::Elt, Fq::Elt>, int> buckets;
  for (std::size_t i = 1; i < zs.size(); ++i) {
    Fq::Elt dx = F.sub(zs[i].first, p0.first);
    Fq::Elt dy = F.sub(zs[i].second, p0.second);
    // Normalize the direction so parallel vectors collide.
    std::pair<Fq::Elt, Fq::Elt> dir;
    if (dx != 0)
      dir = {1, F.mul(dy, F.inv(dx))};
    else
      dir = {0, 1};
    if (++buckets[dir] >= 2) line_dir = dir;
  }
  if (line_dir) {
    // Verify the full line lies in the zero set.
    for (Fq::Elt t = 0; t < F.q(); ++t) {
      Fq::Elt x = F.add(p0.first, F.mul(t, line_dir->first));
      Fq::Elt y = F.add(p0.second, F.mul(t, line_dir->second));
      if (eval_conic2d(F, Q, x, y) != 0)
        throw std::logic_error(
            "zero-set analysis: 3 collinear points but no full line");
    }
    r.degenerate = true;
    if (zs.size() == F.q())
      r.deg_kind = DegenerateKind::lines_identical;
    else if (zs.size() == 2 * (std::size_t)F.q() - 1)
      r.deg_kind = DegenerateKind::lines_intersecting;
    else if (zs.size() == 2 * (std::size_t)F.q()) {
      // Distinguish parallel from intersecting by checking the leftover
      // points form a line parallel to the first.
      r.deg_kind = DegenerateKind::lines_parallel;
      for (const auto& pt : zs)
        if (!on_line(p0, *line_dir, pt)) {
          // fine: the second line; parallelism is implied by the count
          break;
        }
    } else {
      throw std::logic_error("zero-set analysis: unexpected degenerate count");
    }
    return r;
  }

  r.degenerate = false;
  if (zs.size() == (std::size_t)F.q() - 1)
    r.kind = ConicKind::hyperbola;
  else if (zs.size() == (std::size_t)F.q())
    r.kind = ConicKind::parabola;
  else if (zs.size() == (std::size_t)F.q() + 1)
    r.kind = ConicKind::ellipse;
  else
    throw std::logic_error("zero-set analysis: unexpected point count");
  return r;
}

}  // namespace

Conic2DClass classify_conic2d(const Fq& F, const Conic2D& Qin) {
  if (Qin.A == 0 && Qin.B == 0 && Qin.C == 0)
    throw std::invalid_argument("degree < 2: A, B, C are all zero");

  Fq::Elt half = F.inv(F.from_int(2));
  Conic2D Q = Qin;
  // T carries Z(Qin) to the zero set of the current Q; updated as
  // T <- S^{-1} o T whenever we substitute S into Q.
  Affine2 T = Affine2::identity();
  auto apply_subst = [&](const Affine2& S) {
    Q = substitute(F, Q, S);
    T = affine_compose(F, affine_inverse(F, S), T);
  };

  Conic2DClass out;

  if (Q.A == 0 && Q.C == 0) {
    // Q = B XY + D X + E Y + F, B != 0.
    Q = scale_conic2d(F, Q, F.inv(Q.B));
    Affine2 shift;  // X -> X - E, Y -> Y - D
    shift.t0 = F.neg(Q.E);
    shift.t1 = F.neg(Q.D);
    apply_subst(shift);
    // Now Q = XY + F'.
    Fq::Elt c = F.neg(Q.F);
    if (c == 0) {
      out.degenerate = true;
      out.deg_kind = DegenerateKind::lines_intersecting;
    } else {
      Affine2 sc;  // X -> c X
      sc.m00 = c;
      apply_subst(sc);
      Q = scale_conic2d(F, Q, F.inv(c));
      out.degenerate = false;
      out.kind = ConicKind::hyperbola;
      out.to_normal = T;
    }
  } else {
    if (Q.C == 0) {
      Affine2 swap;  // exchange X and Y
      swap.m00 = 0;
      swap.m01 = 1;
      swap.m10 = 1;
      swap.m11 = 0;
      apply_subst(swap);
    }
    Q = scale_conic2d(F, Q, F.inv(Q.C));
    // Complete the square in Y: Y -> Y - (B X + E)/2.
    Affine2 cs;
    cs.m10 = F.neg(F.mul(Q.B, half));
    cs.t1 = F.neg(F.mul(Q.E, half));
    apply_subst(cs);
    // Q = alpha X^2 + Y^2 + beta X + gamma.
    Fq::Elt alpha = Q.A, beta = Q.D, gamma = Q.F;

    if (alpha == 0) {
      if (beta == 0) {
        out.degenerate = true;
        Fq::Elt ng = F.neg(gamma);
        if (gamma == 0)
          out.deg_kind = DegenerateKind::lines_identical;
        else if (F.is_square(ng))
          out.deg_kind = DegenerateKind::lines_parallel;
        else
          out.deg_kind = DegenerateKind::empty_set;
      } else {
        // Parabola: zero set Y^2 = -beta X - gamma; map it to y = x^2
        // via (x, y) -> ((-y - gamma)/beta, x).
        Affine2 S;
        Fq::Elt bi = F.inv(beta);
        S.m00 = 0;
        S.m01 = F.neg(bi);
        S.t0 = F.neg(F.mul(gamma, bi));
        S.m10 = 1;
        S.m11 = 0;
        apply_subst(S);
        out.degenerate = false;
        out.kind = ConicKind::parabola;
        out.parabola_m = 1;
        out.to_normal = T;
      }
    } else {
      // Complete the square in X.
      Affine2 cx;
      cx.t0 = F.neg(F.mul(beta, F.mul(half, F.inv(alpha))));
      apply_subst(cx);
      Fq::Elt gp = Q.F;  // Q = alpha X^2 + Y^2 + gp
      Fq::Elt nalpha = F.neg(alpha);
      auto s_opt = F.sqrt(nalpha);
      if (gp == 0) {
        out.degenerate = true;
        out.deg_kind = s_opt ? DegenerateKind::lines_intersecting
                             : DegenerateKind::single_point;
      } else if (s_opt) {
        // Hyperbola: (Y - sX)(Y + sX) = -gp; send it to xy = 1.
        Fq::Elt s = *s_opt;
        Fq::Elt lambda = F.neg(gp);
        // X = (-x + lambda y)/(2s), Y = (x + lambda y)/2.
        Affine2 S;
        Fq::Elt inv2s = F.inv(F.mul(F.from_int(2), s));
        S.m00 = F.neg(inv2s);
        S.m01 = F.mul(lambda, inv2s);
        S.m10 = half;
        S.m11 = F.mul(lambda, half);
        apply_subst(S);
        out.degenerate = false;
        out.kind = ConicKind::hyperbola;
        out.to_normal = T;
      } else {
        // Ellipse: y^2 = (-alpha) x^2 - gp with -alpha a non-square.
        // Rescale x so the canonical non-square g appears.
        Fq::Elt g = find_nonsquare(F);
        Fq::Elt ratio = F.mul(nalpha, F.inv(g));
        auto s = F.sqrt(ratio);
        if (!s)
          throw std::logic_error("ratio of non-squares is not a square");
        Affine2 S;  // X -> X / s
        S.m00 = F.inv(*s);
        apply_subst(S);
        out.degenerate = false;
        out.kind = ConicKind::ellipse;
        out.ellipse_g = g;
        out.ellipse_k = F.neg(Q.F);
        out.to_normal = T;
      }
    }
  }

  // Cross-check against the exhaustive zero-set analysis; the two
  // classifications must agree.
  ZeroSetAnalysis za = analyze_zero_set(F, Qin);
  if (za.degenerate != out.degenerate ||
      (za.degenerate && za.deg_kind != out.deg_kind) ||
      (!za.degenerate && za.kind != out.kind))
    throw std::logic_error(
        "conic classification mismatch between algebraic reduction and "
        "zero-set analysis (internal fault)");
  return out;
}

EllipseParam ellipse_parametrization(const Fq& F, Fq::Elt g, Fq::Elt k) {
  if (g == 0 || F.is_square(g))
    throw std::invalid_argument("g must be a non-square in F_q*");
  if (k == 0) throw std::invalid_argument("k must be nonzero");
  for (Fq::Elt u = 0; u < F.q(); ++u) {
    Fq::Elt rhs = F.add(F.mul(g, F.mul(u, u)), k);
    auto v = F.sqrt(rhs);
    if (v) return EllipseParam{g, k, u, *v};
  }
  throw std::logic_error("ellipse has no rational point (internal fault)");
}

std::pair<Fq::Elt, Fq::Elt> ellipse_xy(const Fq& F, const Fq2& E,
                                       const EllipseParam& P, Fq2::Elt t) {
  Fq2::Elt half = E.embed(F.inv(F.from_int(2)));
  Fq2::Elt ti = E.inv(t);
  Fq2::Elt s = E.mul(E.mul(half, E.z()), E.sub(t, ti));
  Fq2::Elt r = E.mul(half, E.add(t, ti));
  Fq2::Elt gi = E.embed(F.inv(P.g));
  Fq2::Elt x = E.add(E.mul(E.mul(gi, E.embed(P.v)), s), E.mul(E.embed(P.u), r));
  Fq2::Elt y = E.add(E.mul(E.embed(P.u), s), E.mul(E.embed(P.v), r));
  if (!E.in_base(x) || !E.in_base(y))
    throw std::logic_error("ellipse parametrization left the base field");
  return {E.alpha(x), E.alpha(y)};
}

std::vector<std::pair<Fq::Elt, Fq::Elt>> ellipse_points(const Fq& F,
                                                        const EllipseParam& P) {
  Fq2 E(F, P.g);
  std::vector<std::pair<Fq::Elt, Fq::Elt>> pts;
  for (Fq2::Elt t : norm_one_subgroup(E)) pts.push_back(ellipse_xy(F, E, P, t));
  std::set<std::pair<Fq::Elt, Fq::Elt>> uniq(pts.begin(), pts.end());
  if (uniq.size() != pts.size())
    throw std::logic_error("ellipse points are not distinct (internal fault)");
  return pts;
}

bool linearly_independent(const Fq& F, std::span<const Fq::Elt> b,
                          std::span<const Fq::Elt> c) {
  if (b.size() != c.size()) return false;
  // rank of the 2 x n matrix [b; c]
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (F.sub(F.mul(b[i], c[j]), F.mul(b[j], c[i])) != 0) return true;
  return false;
}

std::vector<std::uint64_t> conic_parameters(const Fq& F, const Conic& C) {
  std::vector<std::uint64_t> ts;
  switch (C.kind) {
    case ConicKind::parabola:
      for (Fq::Elt t = 0; t < F.q(); ++t) ts.push_back(t);
      break;
    case ConicKind::hyperbola:
      for (Fq::Elt t = 1; t < F.q(); ++t) ts.push_back(t);
      break;
    case ConicKind::ellipse: {
      if (!C.ellipse)
        throw std::invalid_argument("ellipse conic without parametrization");
      Fq2 E(F, C.ellipse->g);
      for (auto t : norm_one_subgroup(E)) ts.push_back(t);
      break;
    }
  }
  return ts;
}

Point conic_point_at(const Fq& F, const Conic& C, std::uint64_t t) {
  Point p(C.n);
  switch (C.kind) {
    case ConicKind::parabola: {
      Fq::Elt tt = (Fq::Elt)t, t2 = F.mul(tt, tt);
      for (std::uint32_t j = 0; j < C.n; ++j)
        p[j] = F.add(C.a[j], F.add(F.mul(tt, C.b[j]), F.mul(t2, C.c[j])));
      break;
    }
    case ConicKind::hyperbola: {
      Fq::Elt tt = (Fq::Elt)t, ti = F.inv(tt);
      for (std::uint32_t j = 0; j < C.n; ++j)
        p[j] = F.add(C.a[j], F.add(F.mul(tt, C.b[j]), F.mul(ti, C.c[j])));
      break;
    }
    case ConicKind::ellipse: {
      Fq2 E(F, C.ellipse->g);
      auto [x, y] = ellipse_xy(F, E, *C.ellipse, t);
      for (std::uint32_t j = 0; j < C.n; ++j)
        p[j] = F.add(C.a[j], F.add(F.mul(x, C.b[j]), F.mul(y, C.c[j])));
      break;
    }
  }
  return p;
}

std::vector<Point> conic_points(const Fq& F, const Conic& C) {
  if (C.a.size() != C.n || C.b.size() != C.n || C.c.size() != C.n)
    throw std::invalid_argument("conic vectors must have length n");
  if (!linearly_independent(F, C.b, C.c))
    throw std::invalid_argument(
        "b and c are linearly dependent: the embedding can have fewer "
        "points than the plane conic");
  std::vector<Point> pts;
  for (auto t : conic_parameters(F, C)) pts.push_back(conic_point_at(F, C, t));
  std::set<Point> uniq(pts.begin(), pts.end());
  if (uniq.size() != pts.size())
    throw std::logic_error("embedded conic points are not distinct");
  return pts;
}

std::vector<Point> conic_directions(const Conic& C) {
  switch (C.kind) {
    case ConicKind::hyperbola: return {C.b, C.c};
    case ConicKind::parabola: return {C.c};
    case ConicKind::ellipse: return {};
  }
  return {};
}

}  // namespace conika
