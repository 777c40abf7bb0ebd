#pragma once

#include "lieloop/algebra.hpp"

#include <string>
#include <vector>

namespace lieloop {

// Builds a fresh algebra by name: sl2R, so3, sl2C, sl3R, su21, sl2_plus_sl2, sl2_plus_so3.
// sl2R, sl3R and su21 take their brackets from the transcribed tables and carry the matrix
// realization for cross-checking; the others are derived from their realizations.
// Throws std::invalid_argument for unknown names.
LieAlgebra build_algebra(const std::string& name);

// Transcribed multiplication table as chained lines, e.g. "[e1,e6]=[e2,e5]=1/2[e2,e8]=e2".
const std::vector<std::string>& table_lines(const std::string& name);

// Sets the brackets of `alg` from chained table lines. Throws std::invalid_argument on syntax
// errors or when a pair is given twice with different values.
void apply_table(LieAlgebra& alg, const std::vector<std::string>& lines);

}  // namespace lieloop
