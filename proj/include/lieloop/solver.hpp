#pragma once

#include "lieloop/algebra.hpp"
#include "lieloop/expr.hpp"
#include "lieloop/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieloop {

// Complement family m(p) = span{ f_j + sum_s p_s d_{j,s} }, instantiated at fixed subalgebra parameters.
struct ParamFamily {
  std::string label;
  std::vector<std::string> params;
  std::vector<LinearVector> generators;

  std::vector<RVec> at(const RVec& values) const;
  std::vector<RVec> at_zero() const { return at(zeros(params.size())); }
};

struct PolySystem {
  std::vector<std::string> params;
  std::vector<Poly> equations;
  std::vector<std::string> provenance;

  // Max |value| over all equations at the given point is zero.
  bool vanishes_at(const RVec& x) const;
  std::string str() const;
};

// Builds the equations of [h, m(p)] ⊆ m(p). The h-basis is `hbasis` (need not be row-reduced).
// Throws std::invalid_argument if the family is not complementary at p = 0 or if a
// parameter direction leaves h.
PolySystem constraints(const LieAlgebra& alg, const std::vector<RVec>& hbasis, const ParamFamily& family);

struct Witness {
  RVec h_element;
  RVec m_generator;
  RVec bracket;
  RVec h_component;
};

struct PairVerdict {
  bool reductive = false;
  bool generates = false;
  std::optional<Witness> witness;
};

// Exact check of [h, m] ⊆ m. Throws std::invalid_argument when h is not a subalgebra or
// g ≠ m ⊕ h, so precondition failures never masquerade as NotReductive.
PairVerdict verify_pair(const LieAlgebra& alg, const std::vector<RVec>& h, const std::vector<RVec>& m);

// Affine family {point + sum t_i directions_i} in parameter space.
struct AffineComponent {
  RVec point;
  std::vector<RVec> directions;

  std::size_t dim() const { return directions.size(); }
  bool contains(const RVec& x) const;
  bool contains(const AffineComponent& o) const;
  RVec sample(const RVec& t) const;
  std::string str(const std::vector<std::string>& names) const;
};

enum class SolveStatus { Unsat, Solved, Unknown };
std::string to_string(SolveStatus s);

struct SolutionSet {
  SolveStatus status = SolveStatus::Unsat;
  std::vector<AffineComponent> components;
  // Systems left unresolved when status is Unknown.
  std::vector<std::string> residuals;
  std::size_t branches = 0;
};

struct SolverOptions {
  int case_depth = 12;
  std::size_t param_budget = 64;
  std::size_t branch_budget = 4096;
};

// Solves a system of polynomial equations of degree <= 2 as a finite union of rational affine
// families. Quadratics are decomposed into signed squares of linear forms; a definite form forces
// each linear form to vanish, a difference of two rational squares splits into two linear cases.
// Anything else is reported as Unknown rather than guessed.
SolutionSet solve_family(const PolySystem& sys, const SolverOptions& opt = {});

}  // namespace lieloop
