#ifndef CONIKA_PROOF_HPP_
#define CONIKA_PROOF_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conika/constructions.hpp"
#include "conika/poly.hpp"
#include "conika/vanishing.hpp"

namespace conika {

/// F(t) = f(a + t b + t^2 c); degree <= 2 deg f.
UniPoly<Fq> restrict_parabola(const Fq& F, const MultiPoly& f, const Point& a,
                              const Point& b, const Point& c);

/// F(t) = t^{deg f} f(a + t b + t^{-1} c); degree <= 2 deg f.
UniPoly<Fq> restrict_hyperbola(const Fq& F, const MultiPoly& f, const Point& a,
                               const Point& b, const Point& c);

/// F(t) = t^{deg f} f(a + x(t) b + y(t) c) over F_{q^2}; degree <= 2 deg f.
UniPoly<Fq2> restrict_ellipse(const Fq& F, const Fq2& E, const MultiPoly& f,
                              const Conic& C);

/// A conic restriction of f, over F_q or F_{q^2} depending on the kind.
struct Restriction {
  ConicKind kind = ConicKind::parabola;
  int shift = 0;  // 0 for parabolae, deg f for hyperbolae/ellipses
  UniPoly<Fq> base;
  UniPoly<Fq2> ext;
  bool over_ext = false;

  int degree() const { return over_ext ? ext.degree() : base.degree(); }
  bool is_zero() const { return over_ext ? ext.is_zero() : base.is_zero(); }
};

Restriction restrict_conic(const Fq& F, const MultiPoly& f, const Conic& C);

/// The coefficient of t^{2 deg f} (parabola) or the constant term
/// (hyperbola) of the restriction; equals f_d(c) where f_d is the top
/// homogeneous part.  Rejects ellipses, which have no direction.
Fq::Elt direction_coefficient(const Fq& F, const MultiPoly& f, const Conic& C);

/// Recovers f at the one conic point whose parameter is missing from
/// `values` (parameter -> value of f at the conic point, both as element
/// indices; ellipse parameters are Fq2 indices).  D bounds deg f; the
/// known parameters must number more than 2D and the values must be
/// consistent with a degree-D restriction.
Fq::Elt recover_missing_value(const Fq& F, const Conic& C,
                              const std::map<std::uint64_t, Fq::Elt>& values,
                              std::uint32_t D);

// --- proof traces -------------------------------------------------------

enum class TraceMode { kakeya, nikodym };

std::string to_string(TraceMode m);

struct TraceOptions {
  /// Setting l (or m) selects multiplicity mode; m defaults to the
  /// mode formula: 3l for Kakeya, floor((3 + 4/(q-2)) l) for Nikodym.
  std::optional<std::uint32_t> l;
  std::optional<std::uint32_t> m;
  Exec exec = Exec::parallel;
  std::uint32_t max_degree = kDegreeBudget;
};

struct TraceRecord {
  Point witness_key;
  std::string deduction;  // "f(x)=0", "f_d(c)=0", "f^(i)(x)=0", ...
  std::int64_t zeros = 0;  // vanishing count (or multiplicity sum)
  std::int64_t cap = 0;    // degree cap the count must exceed
  bool valid = false;      // count exceeds the cap, so the step deduces
  bool verified = false;   // deduced value re-checked by direct evaluation
  bool operator==(const TraceRecord&) const = default;
};

/// Replay of a polynomial-method proof over a witnessed set.  Solves for
/// a vanishing polynomial at the theorem's degree budget and replays each
/// witness deduction; never asserts the theorems, only records what the
/// replayed steps establish.
struct TraceReport {
  TraceMode mode = TraceMode::kakeya;
  bool multiplicity_mode = false;
  std::uint32_t l = 0, m = 0;
  bool solved = false;
  int degree = -1;          // degree of the solved polynomial
  std::int64_t bound = 0;   // degree budget from the theorem
  std::optional<MultiPoly> poly;
  std::vector<TraceRecord> records;
  std::uint64_t covered = 0, total = 0;
  bool full_coverage = false;
  bool contradiction = false;
  std::string reason;
  bool operator==(const TraceReport&) const = default;
};

TraceReport run_trace(const WitnessedSet& W, TraceMode mode,
                      const TraceOptions& opts = {});

}  // namespace conika

#endif  // CONIKA_PROOF_HPP_
