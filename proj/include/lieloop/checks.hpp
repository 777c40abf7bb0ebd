#pragma once

#include "lieloop/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lieloop {

// Per algebra: antisymmetry and Jacobi on every basis triple; for algebras with a transcribed
// table, agreement with the brackets of the matrix realization.
std::vector<Record> verify_catalog();

// Killing classes asserted in the text (sl2R, so3, su21) plus the brute-force Killing values.
std::vector<Record> verify_classifications();

struct ExpCheckOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  double tol = 1e-10;
  // Coordinates are scaled to Euclidean norm at most max_norm.
  double max_norm = 5;
};
// exp_closed against the series oracle on sl2R and su2, inverse and one-parameter subgroup laws,
// det = 1, C^2 - x S^2 = 1 and the fixed examples.
std::vector<Record> verify_exponentials(const ExpCheckOptions& opt = {});

// For random rational subspaces m of g1 + g2 (dim g_i = 3) with dim m = 4 or 5, the intersections
// m with g1 and m with g2 have dimension at least dim m - 3, by exact rank.
struct DimensionBoundReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  // Smallest intersection dimension seen per subspace dimension (index 0: dim 4, 1: dim 5).
  std::size_t min_intersection[2] = {99, 99};
};
DimensionBoundReport check_dimension_bounds(const std::string& algebra, std::size_t dim_m, std::size_t samples,
                                            std::uint64_t seed);
std::vector<Record> verify_dimension_bounds(std::uint64_t seed = 42, std::size_t samples = 100);

}  // namespace lieloop
