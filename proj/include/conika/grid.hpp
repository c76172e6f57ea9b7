#ifndef CONIKA_GRID_HPP_
#define CONIKA_GRID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "conika/constructions.hpp"

namespace conika {

struct GridCell {
  std::uint32_t q = 0, n = 0;
  std::string construction;
  bool operator==(const GridCell&) const = default;
};

/// Grid spec syntax: comma-separated key=value with keys q, n,
/// construction; q and n take single values or start..end[:step] ranges,
/// construction takes |-separated names.  Cells enumerate q, then n,
/// then construction.
std::vector<GridCell> parse_grid_spec(const std::string& spec);

/// One CSV row per cell.  Rationals render as "num/den" with a float
/// companion column; failures land in the error column and the run
/// continues.  The wall_time column stays empty unless timing is on, so
/// default output is byte-stable across runs.
std::string run_grid_csv(const std::vector<GridCell>& cells,
                         bool timing = false);

}  // namespace conika

#endif  // CONIKA_GRID_HPP_
