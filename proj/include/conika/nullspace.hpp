#ifndef CONIKA_NULLSPACE_HPP_
#define CONIKA_NULLSPACE_HPP_

#include <cstdint>
#include <vector>

#include "conika/field.hpp"

namespace conika {

enum class Exec { serial, parallel };

/// Dense row-major matrix over F_q.
struct GfMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Fq::Elt> a;

  GfMatrix() = default;
  GfMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Fq::Elt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Fq::Elt at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// First nullspace vector of M under the column order: forward
/// elimination with first-nonzero pivoting, early exit at the first
/// pivot-free column, that column's variable set to 1 and all later ones
/// to 0.  Requires rows < cols (a nullspace vector then always exists).
/// The result is a deterministic function of the input, independent of
/// the execution mode and thread count.
std::vector<Fq::Elt> nullspace_first_vector(const Fq& F, GfMatrix M,
                                            Exec exec = Exec::parallel);

/// Serial reference implementation; must produce the same vector as
/// nullspace_first_vector exactly.
std::vector<Fq::Elt> nullspace_first_vector_serial(const Fq& F, GfMatrix M);

}  // namespace conika

#endif  // CONIKA_NULLSPACE_HPP_
