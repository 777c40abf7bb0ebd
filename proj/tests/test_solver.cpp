#include "lieloop/catalog.hpp"
#include "lieloop/poly.hpp"
#include "lieloop/solver.hpp"

#include <doctest.h>

using namespace lieloop;

namespace {

PolySystem system2(std::vector<Poly> eqs) {
  PolySystem s;
  s.params = {"x", "y"};
  s.equations = std::move(eqs);
  s.provenance.assign(s.equations.size(), "test");
  return s;
}

Poly X() { return Poly::variable(0); }
Poly Y() { return Poly::variable(1); }

std::vector<RVec> hbasis(const LieAlgebra& g, const std::vector<std::string>& gens) {
  ExprEnv env;
  env.algebra = &g;
  std::vector<RVec> out;
  for (const auto& s : gens) out.push_back(eval_vector(s, env));
  return out;
}

}  // namespace

TEST_CASE("poly arithmetic") {
  Poly p = X() * Y() + X() * Rational(3) - Poly::constant(2);
  CHECK(p.degree() == 2);
  CHECK(p.linear(0) == 3);
  CHECK(p.constant_term() == -2);
  CHECK(p.eval({2, 5}) == 14);
  CHECK_THROWS_AS(p * X(), std::domain_error);
  CHECK((p - p).is_zero());
  CHECK(X().substitute(0, Y() + Poly::constant(1)) == Y() + Poly::constant(1));
  CHECK(p.variables() == std::vector<int>{0, 1});
}

TEST_CASE("solver: linear system has a single point") {
  auto r = solve_family(system2({X() - Poly::constant(1), Y() - Poly::constant(2)}));
  REQUIRE(r.status == SolveStatus::Solved);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].dim() == 0);
  CHECK(r.components[0].point == RVec{1, 2});
}

TEST_CASE("solver: xy = 0 splits into the two axes") {
  auto sys = system2({X() * Y()});
  auto r = solve_family(sys);
  REQUIRE(r.status == SolveStatus::Solved);
  REQUIRE(r.components.size() == 2);
  AffineComponent xaxis{{0, 0}, {{1, 0}}}, yaxis{{0, 0}, {{0, 1}}};
  bool has_x = false, has_y = false;
  for (const auto& c : r.components) {
    has_x |= c.contains(xaxis) && xaxis.contains(c);
    has_y |= c.contains(yaxis) && yaxis.contains(c);
    CHECK(sys.vanishes_at(c.sample({Rational(7, 3)})));
  }
  CHECK(has_x);
  CHECK(has_y);
}

TEST_CASE("solver: definite and indefinite quadratics") {
  auto defin = solve_family(system2({X() * X() + Y() * Y()}));
  REQUIRE(defin.status == SolveStatus::Solved);
  REQUIRE(defin.components.size() == 1);
  CHECK(defin.components[0].point == RVec{0, 0});
  CHECK(defin.components[0].dim() == 0);

  auto diff = solve_family(system2({X() * X() - Y() * Y()}));
  REQUIRE(diff.status == SolveStatus::Solved);
  CHECK(diff.components.size() == 2);
  for (const auto& c : diff.components) {
    CHECK(c.dim() == 1);
    auto p = c.sample({Rational(5, 2)});
    CHECK(p[0] * p[0] == p[1] * p[1]);
  }

  CHECK(solve_family(system2({X() * X() + Poly::constant(1)})).status == SolveStatus::Unsat);
  CHECK(solve_family(system2({X() - Poly::constant(1), X() - Poly::constant(2)})).status == SolveStatus::Unsat);
}

TEST_CASE("solver: irrational roots are reported Unknown, not guessed") {
  auto r = solve_family(system2({X() * X() - Poly::constant(2)}));
  CHECK(r.status == SolveStatus::Unknown);
  CHECK_FALSE(r.residuals.empty());
}

TEST_CASE("verify_pair on sl2R") {
  const auto& g = load_algebra("sl2R");
  auto v = verify_pair(g, hbasis(g, {"e3"}), hbasis(g, {"e1", "e2"}));
  CHECK(v.reductive);
  CHECK(v.generates);
  CHECK_FALSE(v.witness);

  auto n = verify_pair(g, hbasis(g, {"e2+e3"}), hbasis(g, {"e1", "e3"}));
  CHECK_FALSE(n.reductive);
  REQUIRE(n.witness);
  CHECK_FALSE(is_zero(n.witness->h_component));

  CHECK_THROWS_AS(verify_pair(g, hbasis(g, {"e1", "e2"}), hbasis(g, {"e3"})), std::invalid_argument);
  CHECK_THROWS_AS(verify_pair(g, hbasis(g, {"e3"}), hbasis(g, {"e1", "e3"})), std::invalid_argument);
}

TEST_CASE("constraints and solve: the only SO2-invariant complement in sl2R is <e1, e2>") {
  const auto& g = load_algebra("sl2R");
  auto fam = make_family(g, "m", {"e1 + p e3", "e2 + q e3"}, {});
  auto sys = constraints(g, hbasis(g, {"e3"}), fam);
  CHECK(sys.params == std::vector<std::string>{"p", "q"});
  auto r = solve_family(sys);
  REQUIRE(r.status == SolveStatus::Solved);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].dim() == 0);
  CHECK(r.components[0].point == RVec{0, 0});
}

TEST_CASE("case depth bounds the search") {
  // Eight independent products need 2^8 branches to separate.
  PolySystem s;
  for (int i = 0; i < 16; ++i) s.params.push_back("x" + std::to_string(i));
  for (int i = 0; i < 8; ++i) s.equations.push_back(Poly::variable(2 * i) * Poly::variable(2 * i + 1));
  s.provenance.assign(s.equations.size(), "test");
  auto full = solve_family(s);
  CHECK(full.status == SolveStatus::Solved);
  CHECK(full.components.size() == 256);
  SolverOptions shallow;
  shallow.case_depth = 3;
  CHECK(solve_family(s, shallow).status == SolveStatus::Unknown);
}
