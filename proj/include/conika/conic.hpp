#ifndef CONIKA_CONIC_HPP_
#define CONIKA_CONIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conika/field.hpp"

namespace conika {

using Point = std::vector<Fq::Elt>;

enum class ConicKind { parabola, hyperbola, ellipse };

enum class DegenerateKind {
  lines_intersecting,
  lines_parallel,
  lines_identical,
  single_point,
  empty_set,
};

std::string to_string(ConicKind k);
std::string to_string(DegenerateKind k);

/// Q(X,Y) = A X^2 + B XY + C Y^2 + D X + E Y + F with (A,B,C) != 0.
struct Conic2D {
  Fq::Elt A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
};

/// Invertible affine map of the plane: (x, y) -> M (x, y)^T + t.
struct Affine2 {
  Fq::Elt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Fq::Elt t0 = 0, t1 = 0;

  static Affine2 identity() { return {}; }
  std::pair<Fq::Elt, Fq::Elt> apply(const Fq& F, Fq::Elt x, Fq::Elt y) const {
    return {F.add(F.add(F.mul(m00, x), F.mul(m01, y)), t0),
            F.add(F.add(F.mul(m10, x), F.mul(m11, y)), t1)};
  }
  bool operator==(const Affine2&) const = default;
};

Affine2 affine_compose(const Fq& F, const Affine2& f, const Affine2& g);  // f∘g
Affine2 affine_inverse(const Fq& F, const Affine2& f);

/// Result of classifying a plane conic.  For non-degenerate conics,
/// to_normal carries the zero set of Q onto the zero set of the normal
/// form: XY = 1 (hyperbola), Y = mX^2 (parabola), Y^2 = gX^2 + k
/// (ellipse, g the canonical non-square of the field).
struct Conic2DClass {
  bool degenerate = false;
  DegenerateKind deg_kind = DegenerateKind::empty_set;
  ConicKind kind = ConicKind::parabola;
  Affine2 to_normal;
  Fq::Elt parabola_m = 1;
  Fq::Elt ellipse_g = 0, ellipse_k = 0;
};

/// Classifies Q by the completed-square reduction, cross-checked against
/// an exhaustive analysis of the zero set; throws std::invalid_argument
/// when A = B = C = 0.
Conic2DClass classify_conic2d(const Fq& F, const Conic2D& Q);

/// Parametrization data for the plane ellipse y^2 = g x^2 + k: a fixed
/// solution (u, v) of v^2 = g u^2 + k, found by deterministic scan.
struct EllipseParam {
  Fq::Elt g = 0, k = 0, u = 0, v = 0;
  bool operator==(const EllipseParam&) const = default;
};

EllipseParam ellipse_parametrization(const Fq& F, Fq::Elt g, Fq::Elt k);

/// (x(t), y(t)) for a norm-one parameter t; both coordinates land in the
/// base field.
std::pair<Fq::Elt, Fq::Elt> ellipse_xy(const Fq& F, const Fq2& E,
                                       const EllipseParam& P, Fq2::Elt t);

/// The q+1 plane points {(x(t), y(t))}, in norm-one parameter order.
std::vector<std::pair<Fq::Elt, Fq::Elt>> ellipse_points(const Fq& F,
                                                        const EllipseParam& P);

/// A conic embedded in F_q^n via a + x*b + y*c with b, c linearly
/// independent.  Ellipses carry their plane parametrization.
struct Conic {
  ConicKind kind = ConicKind::parabola;
  std::uint32_t n = 2;
  Point a, b, c;
  std::optional<EllipseParam> ellipse;
  bool operator==(const Conic&) const = default;
};

bool linearly_independent(const Fq& F, std::span<const Fq::Elt> b,
                          std::span<const Fq::Elt> c);

/// Parameter values of the conic in canonical order: F_q for parabolae,
/// F_q* for hyperbolae, the norm-one subgroup (as Fq2 indices) for
/// ellipses.
std::vector<std::uint64_t> conic_parameters(const Fq& F, const Conic& C);

/// The point of C at parameter t (t an Fq2 index for ellipses).
Point conic_point_at(const Fq& F, const Conic& C, std::uint64_t t);

/// All points of C in parameter order: q for parabolae, q-1 for
/// hyperbolae, q+1 for ellipses, pairwise distinct.  Throws when b and c
/// are linearly dependent (the embedding can then have fewer points).
std::vector<Point> conic_points(const Fq& F, const Conic& C);

/// [b, c] for hyperbolae, [c] for parabolae, [] for ellipses.
std::vector<Point> conic_directions(const Conic& C);

}  // namespace conika

#endif  // CONIKA_CONIC_HPP_
