#include "lieloop/algebra.hpp"
#include "lieloop/algebras.hpp"
#include "lieloop/catalog.hpp"
#include "lieloop/expm.hpp"
#include "lieloop/expr.hpp"
#include "lieloop/field.hpp"
#include "lieloop/linalg.hpp"
#include "lieloop/rational.hpp"

#include <doctest.h>

using namespace lieloop;

namespace {

RVec random_vec(Sampler& s, std::size_t n) {
  RVec v(n);
  for (auto& x : v) x = s.draw();
  return v;
}

RVec coords(const LieAlgebra& alg, const std::string& text) {
  ExprEnv env;
  env.algebra = &alg;
  return eval_vector(text, env);
}

Num trace(const NMat& m) {
  Num t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("rationals parse to canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK(to_double(parse_rational("1/4")) == 0.25);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("Q(sqrt2, i) arithmetic") {
  Num r2 = Num::sqrt2(), i = Num::imag();
  CHECK(r2 * r2 == Num(2));
  CHECK(i * i == Num(-1));
  CHECK((Num(1) + r2).inverse() == Num(-1, 1, 0, 0));
  Num z(Rational(1, 2), 3, -2, Rational(5, 7));
  CHECK(z * z.inverse() == Num(1));
  CHECK(z / z == Num(1));
  CHECK((z * z.conj()).is_real());
  CHECK_THROWS(Num().inverse());
}

TEST_CASE("NMat determinant and inverse") {
  NMat g(3, 3);
  // Fixed matrix with det = 2 + sqrt2 computed by cofactor expansion by hand.
  g(0, 0) = 1, g(0, 1) = Num::sqrt2(), g(0, 2) = 0;
  g(1, 0) = 0, g(1, 1) = 1, g(1, 2) = 1;
  g(2, 0) = 1, g(2, 1) = 0, g(2, 2) = 2;
  CHECK(g.det() == Num(2, 1, 0, 0));
  CHECK(g * g.inverse() == NMat::identity(3));
  NMat s(2, 2);
  s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
  CHECK(s.det().is_zero());
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("rational linear algebra") {
  RMat m = RMat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  auto x = solve(m, RVec{6, 12, 2});
  REQUIRE(x);
  CHECK(m * *x == RVec{6, 12, 2});
  CHECK_FALSE(solve(m, RVec{1, 0, 0}));
  CHECK_FALSE(inverse(m));
  auto inv = inverse(RMat::from_rows({{2, 1}, {1, 1}}, 2));
  REQUIRE(inv);
  CHECK(*inv == RMat::from_rows({{1, -1}, {-1, 2}}, 2));
}

TEST_CASE("sl2R brackets and Killing values") {
  const auto& g = load_algebra("sl2R");
  auto e = [&](int i) { return unit(3, i); };
  CHECK(g.bracket(e(0), e(1)) == scale(2, e(2)));
  CHECK(g.bracket(e(0), e(2)) == scale(2, e(1)));
  CHECK(g.bracket(e(1), e(2)) == scale(-2, e(0)));
  CHECK(g.killing(e(0), e(0)) == 1);
  CHECK(g.killing(e(1), e(1)) == 1);
  CHECK(g.killing(e(2), e(2)) == -1);
  CHECK(g.classify(e(2)).kind == ElementKind::Elliptic);
  CHECK(g.classify(coords(g, "e1+e3")).kind == ElementKind::Parabolic);
  CHECK(g.classify(coords(g, "e2+e3")).kind == ElementKind::Parabolic);
  CHECK(g.classify(coords(g, "3e2")).kind == ElementKind::HyperbolicOrLoxodromic);
}

TEST_CASE("every algebra: antisymmetry and Jacobi hold") {
  for (const auto& n : algebra_names()) {
    CAPTURE(n);
    const auto& g = load_algebra(n);
    CHECK(g.antisymmetry_violations().empty());
    CHECK(g.jacobi_violations().empty());
  }
}

TEST_CASE("dimensions of the cataloged algebras") {
  CHECK(load_algebra("sl2R").dim() == 3);
  CHECK(load_algebra("so3").dim() == 3);
  CHECK(load_algebra("sl2C").dim() == 6);
  CHECK(load_algebra("sl3R").dim() == 8);
  CHECK(load_algebra("su21").dim() == 8);
  CHECK(load_algebra("sl2_plus_sl2").dim() == 6);
  CHECK(load_algebra("sl2_plus_so3").dim() == 6);
  CHECK_THROWS_AS(load_algebra("sl4R"), std::invalid_argument);
}

TEST_CASE("property: brackets agree with matrix commutators on random rational elements") {
  Sampler s(7);
  for (const auto& n : {"sl2R", "so3", "sl3R", "su21"}) {
    CAPTURE(n);
    const auto& g = load_algebra(n);
    REQUIRE(g.has_matrix_rep());
    for (int k = 0; k < 20; ++k) {
      auto x = random_vec(s, g.dim()), y = random_vec(s, g.dim());
      NMat X = g.represent(x), Y = g.represent(y);
      CHECK(g.represent(g.bracket(x, y)) == X * Y - Y * X);
    }
  }
}

TEST_CASE("property: Killing form equals half the trace form in the 2x2 and 3x3 realizations") {
  // Oracle independent of the structure constants: k(x, y) = tr(XY) / 2.
  Sampler s(11);
  for (const auto& n : {"sl2R", "so3", "sl3R", "su21"}) {
    CAPTURE(n);
    const auto& g = load_algebra(n);
    for (int k = 0; k < 20; ++k) {
      auto x = random_vec(s, g.dim()), y = random_vec(s, g.dim());
      Num t = trace(g.represent(x) * g.represent(y));
      REQUIRE(t.is_rational());
      CHECK(g.killing(x, y) == t.a / 2);
    }
  }
}

TEST_CASE("su21 Killing values on e1 +- e6") {
  const auto& g = load_algebra("su21");
  // Trace form gives -3; the printed closed form would give -4 for e1+e6 and 0 for e1-e6.
  CHECK(g.classify(coords(g, "e1+e6")).killing_value == -3);
  CHECK(g.classify(coords(g, "e1-e6")).killing_value == -1);
  CHECK(g.classify(coords(g, "e1-e6")).kind == ElementKind::Elliptic);
  CHECK(g.classify(coords(g, "e7")).kind == ElementKind::HyperbolicOrLoxodromic);
  CHECK(g.classify(coords(g, "e4")).kind == ElementKind::HyperbolicOrLoxodromic);
}

TEST_CASE("property: conjugation preserves brackets and Killing values") {
  const auto& g = load_algebra("sl2R");
  Sampler s(5);
  int used = 0;
  while (used < 30) {
    NMat m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = s.draw();
    if (m.det().is_zero()) continue;
    ++used;
    auto x = random_vec(s, 3), y = random_vec(s, 3);
    auto cx = conjugate(g, m, x), cy = conjugate(g, m, y);
    CHECK(conjugate(g, m, g.bracket(x, y)) == g.bracket(cx, cy));
    CHECK(g.killing(cx, cy) == g.killing(x, y));
    CHECK(g.classify(cx).kind == g.classify(x).kind);
  }
}

TEST_CASE("subspace operations") {
  const auto& g = load_algebra("sl2R");
  Subspace borel(g, {coords(g, "e1"), coords(g, "e2+e3")});
  Subspace plane(g, {coords(g, "e1"), coords(g, "e2")});
  CHECK(is_subalgebra(borel));
  CHECK_FALSE(is_subalgebra(plane));
  CHECK(lie_closure(plane).dim() == 3);
  CHECK(intersect(borel, plane).dim() == 1);
  CHECK(intersect(borel, plane).contains(coords(g, "e1")));
  Subspace h(g, {coords(g, "e3")});
  CHECK(direct_sum(h, plane));
  CHECK_FALSE(direct_sum(borel, plane));
  CHECK(bracket_span(plane, plane) == h);
  CHECK(Subspace(g, {coords(g, "2e1"), coords(g, "e1+e2")}) == plane);
}

TEST_CASE("expressions") {
  const auto& g = load_algebra("sl2R");
  CHECK(coords(g, "2e1 - 1/2 e3") == RVec{2, 0, Rational(-1, 2)});
  CHECK(coords(g, "(e1+e2)3") == RVec{3, 3, 0});
  ExprEnv env;
  env.algebra = &g;
  env.params["a"] = 3;
  CHECK(eval_vector("e1 + a e2", env) == RVec{1, 3, 0});
  CHECK(eval_scalar("r2^2 + i^2", env) == Num(1));
  CHECK_THROWS_AS(eval_vector("e1 +", env), std::invalid_argument);
  CHECK_THROWS_AS(eval_vector("e9", env), std::invalid_argument);
  CHECK_THROWS_AS(eval_vector("e1/(a-3)", env), std::domain_error);
  env.allow_symbols = true;
  auto lv = eval_linear_vector("e1 + x e2 + y e3", env);
  CHECK(lv.constant == RVec{1, 0, 0});
  CHECK(lv.coeff.at("x") == RVec{0, 1, 0});
  CHECK_THROWS_AS(eval_vector("x y e1", env), std::invalid_argument);
}

TEST_CASE("side conditions") {
  ExprEnv env;
  env.params = {{"a", 2}, {"b", Rational(1, 2)}};
  CHECK(Condition::parse("a != 0").holds(env));
  CHECK(Condition::parse("a b = 1").holds(env));
  CHECK_FALSE(Condition::parse("a < b").holds(env));
  CHECK(Condition::parse("a >= 2").holds(env));
}

TEST_CASE("structure constants round-trip through the text format") {
  for (const auto& n : algebra_names()) {
    CAPTURE(n);
    const auto& g = load_algebra(n);
    auto back = LieAlgebra::from_text(g.to_text());
    REQUIRE(back.dim() == g.dim());
    CHECK(back.basis_names() == g.basis_names());
    CHECK(back.killing_normalization() == g.killing_normalization());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) CHECK(back.structure(i, j) == g.structure(i, j));
    CHECK(back.to_text() == g.to_text());
  }
  CHECK_THROWS(LieAlgebra::from_text("garbage"));
}

TEST_CASE("table parser rejects conflicting entries") {
  LieAlgebra g("t", {"e1", "e2", "e3"}, Rational(1, 8));
  CHECK_THROWS_AS(apply_table(g, {"[e1,e2]=2e3", "[e1,e2]=e3"}), std::invalid_argument);
  CHECK_THROWS_AS(apply_table(g, {"[e1,e1]=e3"}), std::invalid_argument);
  CHECK_THROWS_AS(table_lines("so3"), std::invalid_argument);
}
