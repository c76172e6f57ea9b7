#ifndef CONIKA_CONSTRUCTIONS_HPP_
#define CONIKA_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conika/conic.hpp"
#include "conika/nullspace.hpp"
#include "conika/rational.hpp"

namespace conika {

enum class WitnessRole { direction, point, direction_b, direction_c };

std::string to_string(WitnessRole r);
WitnessRole witness_role_from_string(const std::string& s);

struct Witness {
  Point key;
  WitnessRole role = WitnessRole::direction;
  Conic conic;
  bool operator==(const Witness&) const = default;
};

/// A point set in F_q^n together with per-direction (Kakeya), per-point
/// (Nikodym) or per-direction-and-role (elliptic coverage) conic
/// witnesses.  Points and witnesses are kept in canonical order (by the
/// little-endian base-q index of the key).
struct WitnessedSet {
  Fq field;
  std::uint32_t n = 2;
  std::vector<Point> points;
  std::vector<Witness> witnesses;
  std::string provenance;

  bool operator==(const WitnessedSet&) const = default;
};

std::uint64_t point_code(const Fq& F, const Point& p);
Point point_from_code(const Fq& F, std::uint32_t n, std::uint64_t code);

/// Brings points/witnesses into canonical order (sorted by key code,
/// then role).
void canonicalize(WitnessedSet& W);

// --- constructions -----------------------------------------------------

/// Parabolic Kakeya set in F_q^n, n >= 3: all points with nonzero last
/// coordinate whose middle coordinates shift to squares, plus the
/// hyperplane {last = 0}; one parabola witness per direction.
WitnessedSet build_parabolic_kakeya(const Fq& F, std::uint32_t n);

/// Degree-2 Kakeya set from shifted cubes, q = 1 (mod 3): base points
/// ((c_i/3 + t)^3 - t^3)_i with parabola witnesses; directions whose
/// witness would have dependent b, c get a patch parabola instead.  Base
/// and patch sizes are recorded in the provenance string.
WitnessedSet build_degree2_kakeya(const Fq& F, std::uint32_t n);

/// The single ellipse y^2 = g x^2 + 1 in F_q^2 (q = 3 mod 4, q >= 19),
/// witnessed in both roles b and c for every nonzero direction.  Shows
/// that a set of size q+1 can carry an ellipse "in every direction".
WitnessedSet build_ellipse_pseudo_kakeya(const Fq& F);

// --- verification ------------------------------------------------------

struct VerifyOptions {
  bool exhaustive = false;
  std::uint64_t budget = 0;  // 0 = default q^n * q^2 candidates
  Exec exec = Exec::parallel;
};

struct VerifyResult {
  bool accepted = false;
  std::uint64_t checked = 0;
  std::optional<Point> failing_key;
  std::optional<Point> offending_point;
  std::string reason;
  bool exhaustive_ran = false;
  bool negative_confirmed = false;
  std::uint64_t candidates_tested = 0;
};

/// Every nonzero direction must have a witness: a parabola with c = d or
/// a hyperbola with d in {b, c}, independent b and c, all conic points
/// inside the set.  In exhaustive mode a failing direction is re-checked
/// by searching all candidate conics (budget-bounded; refuses rather than
/// truncating).
VerifyResult verify_conical_kakeya(const WitnessedSet& W,
                                   const VerifyOptions& opts = {});

/// Every point x of F_q^n must have a witness conic through x whose
/// remaining points lie in the set; ellipse witnesses are allowed.
VerifyResult verify_conical_nikodym(const WitnessedSet& W,
                                    const VerifyOptions& opts = {});

/// Every nonzero direction must carry an ellipse witness in role b and
/// one in role c, each contained in the set.  Distinct from conical
/// Kakeya: ellipses have no direction.
VerifyResult verify_elliptic_coverage(const WitnessedSet& W,
                                      const VerifyOptions& opts = {});

// --- lower bounds ------------------------------------------------------

/// The three lower-bound formulas as exact rationals.
struct BoundSheet {
  std::uint32_t q = 0, n = 0;
  Rational thm1;          // ((q-1) / 2n)^n
  Rational kakeya_mult;   // (q/3)^n
  Rational nikodym_mult;  // (3 + 4/(q-2))^{-n} q^n
  bool kakeya_ge_thm1 = false;
  bool nikodym_ge_thm1 = false;
};

/// Requires odd q >= 5 and n >= 2.
BoundSheet lower_bounds(std::uint32_t q, std::uint32_t n);

}  // namespace conika

#endif  // CONIKA_CONSTRUCTIONS_HPP_
