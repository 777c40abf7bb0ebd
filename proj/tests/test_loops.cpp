#include "lieloop/loops.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

using namespace lieloop;

namespace {

// Independent polar oracle: P = sqrt(g g^T) by symmetric eigen-factorization, O = P^-1 g.
Polar polar_eigen(const Eigen::Matrix2d& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(g * g.transpose());
  Eigen::Matrix2d p = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  return {p, p.inverse() * g};
}

Eigen::Matrix2d rot(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

Mat2 c(const Eigen::Matrix2d& m) { return m.cast<std::complex<double>>(); }

const LoopInstance& instance(const std::string& name) {
  static const auto all = loop_instances();
  for (const auto& l : all)
    if (l.name == name) return l;
  throw std::invalid_argument("no loop instance " + name);
}

}  // namespace

TEST_CASE("polar decomposition of fixed matrices") {
  auto id = polar(Eigen::Matrix2d::Identity());
  CHECK(id.p.isApprox(Eigen::Matrix2d::Identity()));
  CHECK(id.o.isApprox(Eigen::Matrix2d::Identity()));
  Eigen::Matrix2d d = Eigen::Vector2d(std::exp(1.0), std::exp(-1.0)).asDiagonal();
  auto pd = polar(d);
  CHECK((pd.p - d).norm() < 1e-15);
  CHECK((pd.o - Eigen::Matrix2d::Identity()).norm() < 1e-15);
  auto pr = polar(rot(0.4));
  CHECK((pr.p - Eigen::Matrix2d::Identity()).norm() < 1e-15);
  CHECK(rotation_angle(pr.o) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(polar(Eigen::Matrix2d::Zero()), std::invalid_argument);
  Eigen::Matrix2d bad;
  bad << NAN, 0, 0, 1;
  CHECK_THROWS_AS(polar(bad), std::invalid_argument);
}

TEST_CASE("property: polar decomposition reconstructs g and matches the eigen-factorization oracle") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2, 2);
  int done = 0;
  while (done < 100) {
    Eigen::Matrix2d g;
    g << u(rng), u(rng), u(rng), u(rng);
    if (std::abs(g.determinant()) < 0.1) continue;
    ++done;
    auto pd = polar(g);
    CHECK((pd.p * pd.o - g).norm() < 1e-12 * g.norm());
    CHECK((pd.p - pd.p.transpose()).norm() < 1e-15);
    CHECK(pd.p.determinant() > 0);
    CHECK(pd.p.trace() > 0);
    CHECK((pd.o * pd.o.transpose() - Eigen::Matrix2d::Identity()).norm() < 1e-14);
    auto oracle = polar_eigen(g);
    CHECK((pd.p - oracle.p).norm() < 1e-10 * g.norm());
    CHECK((pd.o - oracle.o).norm() < 1e-10);
  }
}

TEST_CASE("rotation angle inverts exp(t e3)") {
  for (double t : {-3.0, -1.2, 0.0, 0.5, 2.9, std::numbers::pi}) CHECK(rotation_angle(rot(t)) == doctest::Approx(t));
}

TEST_CASE("hyperbolic plane loop product") {
  Eigen::Matrix2d x = Eigen::Vector2d(std::exp(1.0), std::exp(-1.0)).asDiagonal();
  Eigen::Matrix2d xx = Eigen::Vector2d(std::exp(2.0), std::exp(-2.0)).asDiagonal();
  CHECK((h2_mult(x, x) - xx).norm() < 1e-13);
  CHECK((h2_mult(Eigen::Matrix2d::Identity(), x) - x).norm() < 1e-15);
  auto l = hyperbolic_plane_loop();
  LoopElement e = l.identity(), a = l.chart({0.3, -0.8});
  CHECK(l.distance(l.mult(e, a), a) < 1e-15);
  CHECK(l.distance(l.mult(a, e), a) < 1e-15);
  CHECK(l.chart_dim() == 2);
}

TEST_CASE("direct product is componentwise") {
  auto l = hyperbolic_plane_square();
  auto h = hyperbolic_plane_loop();
  auto a = l.chart({0.3, -0.8, 1.1, 0.2}), b = l.chart({-0.5, 0.4, 0.1, -1.3});
  auto ab = l.mult(a, b);
  auto ab0 = h.mult(LoopElement{{a.parts[0]}}, LoopElement{{b.parts[0]}});
  auto ab1 = h.mult(LoopElement{{a.parts[1]}}, LoopElement{{b.parts[1]}});
  CHECK((ab.parts[0] - ab0.parts[0]).norm() < 1e-15);
  CHECK((ab.parts[1] - ab1.parts[0]).norm() < 1e-15);
}

TEST_CASE("twist images") {
  double t = 0.3;
  CHECK((twist_image({Twist::Trivial, 1, false}, t) - Mat2::Identity()).norm() == 0);
  CHECK((twist_image({Twist::Power, 2, false}, t) - c(rot(2 * t))).norm() < 1e-15);
  Mat2 hyp = twist_image({Twist::Hyperbolic, 1, false}, t);
  CHECK(std::abs(hyp(0, 0) - std::exp(t)) < 1e-15);
  CHECK(std::abs(hyp(1, 1) - std::exp(-t)) < 1e-15);
  Mat2 par = twist_image({Twist::Parabolic, 1, false}, t);
  CHECK(std::abs(par(0, 1) - 2 * t) < 1e-15);
  CHECK(std::abs(par.determinant() - 1.0) < 1e-15);
  CHECK_THROWS_AS(twist_image({Twist::Hyperbolic, 1, true}, t), std::invalid_argument);
  CHECK_THROWS_AS(twist_image({Twist::Parabolic, 1, true}, t), std::invalid_argument);
}

TEST_CASE("trivial twist is the direct product of the loop and the group") {
  ScheererSpec s{Twist::Trivial, 1, false};
  auto l = scheerer_extension(s);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    auto x = random_element(l, rng, 1.5), y = random_element(l, rng, 1.5);
    auto xy = scheerer_mult(s, x, y);
    Eigen::Matrix2d p = h2_mult(x.parts[0].real(), y.parts[0].real());
    CHECK((xy.parts[0].real() - p).norm() < 1e-12 * p.norm());
    Mat2 g = x.parts[1] * y.parts[1];
    CHECK(std::min((xy.parts[1] - g).norm(), (xy.parts[1] + g).norm()) < 1e-12 * g.norm());
  }
}

TEST_CASE("n = 1 twist: identity pairs multiply to the identity") {
  auto l = scheerer_extension({Twist::Power, 1, false});
  auto e = l.identity();
  CHECK(l.distance(l.mult(e, e), e) == 0);
  auto lo = scheerer_extension({Twist::Power, 1, true});
  CHECK(lo.distance(lo.mult(lo.identity(), lo.identity()), lo.identity()) == 0);
}

TEST_CASE("left and right division solve the defining equations") {
  std::mt19937_64 rng(12);
  for (const auto& l : loop_instances()) {
    CAPTURE(l.name);
    for (int k = 0; k < 5; ++k) {
      auto a = random_element(l, rng, 1.5), b = random_element(l, rng, 1.5);
      auto ld = left_divide(l, a, b);
      REQUIRE(ld.converged);
      CHECK(l.distance(l.mult(a, ld.value), b) < 1e-9);
      auto rd = right_divide(l, b, a);
      REQUIRE(rd.converged);
      CHECK(l.distance(l.mult(rd.value, a), b) < 1e-9);
    }
  }
}

TEST_CASE("left inner map at x = y = e is the identity") {
  auto l = hyperbolic_plane_loop();
  auto e = l.identity(), z = l.chart({0.7, -0.2});
  auto lam = left_divide(l, l.mult(e, e), l.mult(e, l.mult(e, z)));
  REQUIRE(lam.converged);
  CHECK(l.distance(lam.value, z) < 1e-12);
}

TEST_CASE("loop identities over 100 seeded samples") {
  LoopOptions opt;
  for (const auto& l : loop_instances()) {
    CAPTURE(l.name);
    auto id = check_identity(l, opt);
    auto dv = check_division(l, opt);
    auto la = check_left_A(l, opt);
    auto bol = check_bol(l, opt);
    CHECK(id.max <= 1e-10);
    CHECK(dv.failures == 0);
    CHECK(dv.max <= 1e-8);
    CHECK(la.failures == 0);
    CHECK(la.max <= 1e-8);
    CHECK(bol.max <= 1e-8);
  }
}

TEST_CASE("Bruck checks") {
  LoopOptions opt;
  opt.samples = 30;
  auto h2 = check_bruck(instance("H2"), opt);
  CHECK(h2.tangent);
  CHECK(h2.bol_tangent);
  CHECK(h2.automorphic_inverse < 1e-8);
  auto n1 = check_bruck(instance("Scheerer H2 by PSL2, phi x -> x^1"), opt);
  CHECK_FALSE(n1.tangent);
  CHECK(n1.bol_tangent);
  CHECK(n1.automorphic_inverse > 1e-3);
}

TEST_CASE("tangent pair checks") {
  auto t6 = tangent_checks("sl3R", {"e1-e3", "e2-e4", "e7-e6"}, {"e5", "e8", "e1+e3", "e2+e4", "e7+e6"});
  CHECK(t6.direct_sum);
  CHECK(t6.reductive);
  CHECK(t6.bruck);
  CHECK(t6.bol);
  auto h2 = tangent_checks("sl2R", {"e3"}, {"e1", "e2"});
  CHECK(h2.bruck);
  auto bad = tangent_checks("sl2R", {"e2+e3"}, {"e1", "e3"});
  CHECK(bad.direct_sum);
  CHECK_FALSE(bad.reductive);
}

TEST_CASE("hyperbolic plane loop invariants") {
  LoopOptions opt;
  CHECK(h2_reconstruction(opt) <= 1e-12);
  CHECK(h2_conjugation_invariance(opt) <= 1e-12);
  CHECK(h2_sharp_transitivity(opt) <= 1e-8);
  CHECK(h2_tangent() <= 1e-6);
}

TEST_CASE("loop suite is deterministic per seed") {
  LoopOptions opt;
  opt.samples = 10;
  CHECK(to_json(verify_loops(opt)).dump() == to_json(verify_loops(opt)).dump());
}
