#include "conika/nullspace.hpp"

#include <stdexcept>

namespace conika {

namespace {

// Forward elimination, column by column.  Stops at the first column with
// no available pivot and back-substitutes; rows beyond the free column
// never get reduced (they cannot affect the solution restricted to
// columns <= free).
template <bool Parallel>
std::vector<Fq::Elt> nullspace_impl(const Fq& F, GfMatrix& M) {
  const std::size_t rows = M.rows, cols = M.cols;
  if (rows >= cols)
    throw std::invalid_argument(
        "nullspace: need rows < cols (rows = " + std::to_string(rows) +
        ", cols = " + std::to_string(cols) + ")");

  std::vector<std::size_t> pivot_col;  // pivot column of slot r
  std::size_t r = 0;
  std::size_t free_col = cols;

  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (M.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr == rows) {
      free_col = col;
      break;
    }
    if (pr != r)
      for (std::size_t j = col; j < cols; ++j)
        std::swap(M.at(r, j), M.at(pr, j));

    // Normalize the pivot row.
    Fq::Elt pinv = F.inv(M.at(r, col));
    if (pinv != 1)
      for (std::size_t j = col; j < cols; ++j)
        M.at(r, j) = F.mul(M.at(r, j), pinv);

    // Eliminate below; rows are independent, so the result does not
    // depend on the iteration order.
    const Fq::Elt* prow = &M.a[r * cols];
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = (std::int64_t)r + 1; i < (std::int64_t)rows; ++i) {
        Fq::Elt f = M.at(i, col);
        if (f == 0) continue;
        Fq::Elt* row = &M.a[i * cols];
        for (std::size_t j = col; j < cols; ++j)
          row[j] = F.sub(row[j], F.mul(f, prow[j]));
      }
    } else {
      for (std::size_t i = r + 1; i < rows; ++i) {
        Fq::Elt f = M.at(i, col);
        if (f == 0) continue;
        Fq::Elt* row = &M.a[i * cols];
        for (std::size_t j = col; j < cols; ++j)
          row[j] = F.sub(row[j], F.mul(f, prow[j]));
      }
    }

    pivot_col.push_back(col);
    ++r;
    if (r == rows) {
      free_col = col + 1;  // col+1 < cols since rows < cols
      break;
    }
  }
  if (free_col >= cols)
    throw std::logic_error("no free column despite rows < cols");

  std::vector<Fq::Elt> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t s = pivot_col.size(); s-- > 0;) {
    std::size_t pc = pivot_col[s];
    // Pivot rows are normalized: x[pc] = -sum_{j > pc} M[s][j] x[j].
    Fq::Elt acc = 0;
    for (std::size_t j = pc + 1; j <= free_col; ++j)
      if (x[j] != 0) acc = F.add(acc, F.mul(M.at(s, j), x[j]));
    x[pc] = F.neg(acc);
  }
  return x;
}

}  // namespace

std::vector<Fq::Elt> nullspace_first_vector(const Fq& F, GfMatrix M,
                                            Exec exec) {
  if (exec == Exec::parallel) return nullspace_impl<true>(F, M);
  return nullspace_impl<false>(F, M);
}

std::vector<Fq::Elt> nullspace_first_vector_serial(const Fq& F, GfMatrix M) {
  return nullspace_impl<false>(F, M);
}

}  // namespace conika
