#pragma once

#include "lieloop/catalog.hpp"
#include "lieloop/report.hpp"
#include "lieloop/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lieloop {

struct ReproduceOptions {
  std::uint64_t seed = 42;
  // Subalgebra parameter samples per expected outcome.
  std::size_t samples = 3;
  SolverOptions solver;
};

// Coordinates of the complement `m` inside the family, or nullopt when m is not of the
// family's shape. `m` must be complementary to h.
std::optional<RVec> family_coordinates(const LieAlgebra& alg, const std::vector<RVec>& h, const ParamFamily& fam,
                                       const std::vector<RVec>& m);

// Runs every expected outcome of the proposition through constraints + solve_family and diffs
// the result against the transcription. One record per outcome.
std::vector<Record> reproduce(const std::string& prop, const ReproduceOptions& opt = {});

// 64-bit FNV-1a string hash used to derive per-case seeds.
std::uint64_t stable_hash(const std::string& s);

}  // namespace lieloop
