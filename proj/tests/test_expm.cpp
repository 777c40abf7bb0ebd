#include "lieloop/catalog.hpp"
#include "lieloop/expm.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

using namespace lieloop;

namespace {

// exp by diagonalization; valid for the semisimple samples drawn below.
CMat exp_eigen(const CMat& x) {
  Eigen::ComplexEigenSolver<CMat> es(x);
  CMat d = es.eigenvalues().array().exp().matrix().asDiagonal();
  return es.eigenvectors() * d * es.eigenvectors().inverse();
}

std::vector<double> random_coords(std::mt19937_64& rng, double max_norm) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> x(3);
  double n = 0;
  for (auto& v : x) {
    v = u(rng);
    n += v * v;
  }
  double s = max_norm * u(rng) / std::sqrt(n);
  for (auto& v : x) v *= s;
  return x;
}

}  // namespace

TEST_CASE("C and S") {
  CHECK(C(0) == 1);
  CHECK(S(0) == 1);
  CHECK(C(1) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(S(4) == doctest::Approx(std::sinh(2.0) / 2).epsilon(1e-15));
  CHECK(C(-1) == doctest::Approx(std::cos(1.0)).epsilon(1e-15));
  CHECK(S(-std::numbers::pi * std::numbers::pi) == doctest::Approx(0).epsilon(1e-15));
  // Near the origin S must follow 1 + x/6 instead of cancelling.
  CHECK(S(1e-9) == doctest::Approx(1 + 1e-9 / 6).epsilon(1e-16));
  CHECK(S(-1e-9) == doctest::Approx(1 - 1e-9 / 6).epsilon(1e-16));
  for (double x : {-30.0, -1e-7, 1e-7, 0.3, 12.0}) CHECK(C(x) * C(x) - x * S(x) * S(x) == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("exp_closed on sl2R one-parameter subgroups") {
  const auto& g = load_algebra("sl2R");
  for (double t : {0.3, 1.0, 2.5}) {
    CMat r = exp_closed(g, {0, 0, t});
    CHECK(std::abs(r(0, 0) - std::cos(t)) < 1e-14);
    CHECK(std::abs(r(0, 1) - std::sin(t)) < 1e-14);
    CHECK(std::abs(r(1, 0) + std::sin(t)) < 1e-14);
    CMat d = exp_closed(g, {t, 0, 0});
    CHECK(std::abs(d(0, 0) - std::exp(t)) < 1e-13);
    CHECK(std::abs(d(1, 1) - std::exp(-t)) < 1e-14);
    CHECK(std::abs(d(0, 1)) < 1e-15);
  }
  CMat p = exp_closed(g, {1, 0, 1});  // nilpotent: exp = I + X
  CHECK((p - (CMat::Identity(2, 2) + represent_numeric(g, {1, 0, 1}))).norm() < 1e-15);
}

TEST_CASE("exp_closed on su2") {
  const auto& g = load_algebra("so3");
  double t = 0.7;
  CMat d = exp_closed(g, {t, 0, 0});  // f1 = i e1
  CHECK(std::abs(d(0, 0) - std::polar(1.0, t)) < 1e-15);
  CHECK(std::abs(d(1, 1) - std::polar(1.0, -t)) < 1e-15);
  CMat full = exp_closed(g, {0, 0, 2 * std::numbers::pi});
  CHECK((full - CMat::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("property: exp_closed agrees with diagonalization and with the series") {
  std::mt19937_64 rng(2024);
  for (const auto& n : {"sl2R", "so3"}) {
    CAPTURE(n);
    const auto& g = load_algebra(n);
    for (int k = 0; k < 100; ++k) {
      auto x = random_coords(rng, 5);
      CMat e = exp_closed(g, x);
      CMat X = represent_numeric(g, x);
      double scale = 1 + e.norm();
      CHECK((e - exp_series(X)).norm() / scale < 1e-10);
      if (std::abs(killing_numeric(g, x)) > 1e-3) CHECK((e - exp_eigen(X)).norm() / scale < 1e-10);
      CHECK(std::abs(e.determinant() - 1.0) < 1e-12 * std::max(1.0, e.squaredNorm() / 2));
    }
  }
}

TEST_CASE("exp_series handles 3x3 and rejects bad tolerances") {
  const auto& g = load_algebra("sl3R");
  CMat X = represent_numeric(g, {0, 0, 0, 0, 1, 0, 0, -1});
  CMat e = exp_series(X);
  CHECK((e - exp_eigen(X)).norm() < 1e-12);
  CHECK_THROWS_AS(exp_series(X, 0), std::invalid_argument);
  CHECK_THROWS_AS(exp_closed(g, std::vector<double>(8, 0.1)), std::invalid_argument);
}

TEST_CASE("sl2 canonical forms") {
  auto check = [](const std::vector<double>& x, ElementKind kind, std::vector<double> canon) {
    auto c = sl2_canonical(x);
    CHECK(c.kind == kind);
    CHECK(c.mu > 0);
    Eigen::Matrix2d X;
    X << x[0], x[1] + x[2], x[1] - x[2], -x[0];
    Eigen::Matrix2d Y;
    Y << c.canonical[0], c.canonical[1] + c.canonical[2], c.canonical[1] - c.canonical[2], -c.canonical[0];
    CHECK((c.g.inverse() * X * c.g - Y).norm() < 1e-10);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.canonical[i] == doctest::Approx(canon[i] * c.mu));
  };
  check({0, 0, 1}, ElementKind::Elliptic, {0, 0, 1});
  check({0, 1, 0}, ElementKind::HyperbolicOrLoxodromic, {1, 0, 0});
  check({1, 0, 1}, ElementKind::Parabolic, {0, 1, 1});
  check({0.3, -2, 1.1}, ElementKind::HyperbolicOrLoxodromic, {1, 0, 0});
  check({0.3, -0.2, 1.1}, ElementKind::Elliptic, {0, 0, 1});
  CHECK(sl2_canonical({0, 0, 1}).g.isApprox(Eigen::Matrix2d::Identity()));
  CHECK_THROWS_AS(sl2_canonical({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("numeric conjugation pulls back with small residual") {
  const auto& g = load_algebra("sl2R");
  CMat rot(2, 2);
  double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
  rot << c, s, -s, c;
  auto r = conjugate_numeric(g, rot, {0, 1, 0});
  CHECK(r.residual < 1e-14);
  CHECK(std::abs(std::abs(r.coords[0]) - 1) < 1e-14);
  CHECK(std::abs(r.coords[1]) < 1e-14);
}
