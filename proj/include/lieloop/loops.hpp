#pragma once

#include "lieloop/report.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace lieloop {

using Mat2 = Eigen::Matrix2cd;

// Polar decomposition g = P O with P symmetric positive definite and O orthogonal, from the
// closed 2x2 form of the orthogonal factor. Throws std::invalid_argument for singular or
// non-finite input.
struct Polar {
  Eigen::Matrix2d p;
  Eigen::Matrix2d o;
};
Polar polar(const Eigen::Matrix2d& g);
// Angle t with O = exp(t e3) = [[cos t, sin t], [-sin t, cos t]], t in (-pi, pi].
double rotation_angle(const Eigen::Matrix2d& o);

// Factors of a loop element. Spd: symmetric positive definite with det 1 (the section image of
// the hyperbolic plane loop). Group: SL2R or SU2 matrix taken modulo -I.
enum class PartKind { Spd, Sl2, Su2 };

struct LoopElement {
  std::vector<Mat2> parts;
};

// Loop realized as a section of G/H: multiplication x * y = sigma(x y H) with identity e = (I,...,I).
struct LoopInstance {
  std::string name;
  std::vector<PartKind> kinds;
  // sigma: group element (one matrix per part) to its section representative.
  std::function<LoopElement(const LoopElement&)> section;
  // Tangent data in a cataloged algebra: h and m as expressions in its basis.
  std::string algebra;
  std::vector<std::string> h, m;
  std::string citation;
  // Expected verdict of the Bruck check.
  bool bruck = false;

  LoopElement mult(const LoopElement& x, const LoopElement& y) const;
  LoopElement identity() const;
  std::size_t chart_dim() const;
  // exp of a coordinate vector: Spd parts use exp(a e1 + b e2), group parts exp of the sl2R or
  // su2 coordinates.
  LoopElement chart(const std::vector<double>& c) const;
  // Frobenius distance, group parts compared up to sign.
  double distance(const LoopElement& a, const LoopElement& b) const;
};

// sigma-part of x y for the hyperbolic plane loop: the positive definite polar factor.
Eigen::Matrix2d h2_mult(const Eigen::Matrix2d& x, const Eigen::Matrix2d& y);

LoopInstance hyperbolic_plane_loop();
LoopInstance hyperbolic_plane_square();

// Scheerer extension of G2 by the hyperbolic plane loop: elements (P, g) in M x G2,
// H = {(exp(t e3), phi(t))}. (P1, g1) * (P2, g2) = (P, g1 g2 phi(t)^-1) with P1 P2 = P exp(t e3).
enum class Twist { Trivial, Power, Hyperbolic, Parabolic };
std::string to_string(Twist t);
struct ScheererSpec {
  Twist twist = Twist::Trivial;
  int n = 1;  // exponent for Twist::Power
  bool so3 = false;  // G2 = SO3 (via SU2) instead of PSL2
};
// phi(t) for the given twist, in SL2R or SU2.
Mat2 twist_image(const ScheererSpec& s, double t);
LoopElement scheerer_mult(const ScheererSpec& s, const LoopElement& x, const LoopElement& y);
LoopInstance scheerer_extension(const ScheererSpec& s);

// The instances checked by the loop suite.
std::vector<LoopInstance> loop_instances();

struct DivisionResult {
  LoopElement value;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};
// a \ b: the x with a * x = b, by damped Gauss-Newton on the chart around the current iterate
// with a finite-difference Jacobian, started at the sigma-part of a^-1 b. At most 50 iterations.
DivisionResult left_divide(const LoopInstance& l, const LoopElement& a, const LoopElement& b, double tol = 1e-12);
// b / a: the x with x * a = b.
DivisionResult right_divide(const LoopInstance& l, const LoopElement& b, const LoopElement& a, double tol = 1e-12);

struct LoopOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  double tol = 1e-8;
  // Chart coordinates are drawn uniformly from [-radius, radius].
  double radius = 1.5;
};

struct Deviation {
  double max = 0;
  std::size_t failures = 0;  // division failures
};
LoopElement random_element(const LoopInstance& l, std::mt19937_64& rng, double radius);
Deviation check_identity(const LoopInstance& l, const LoopOptions& opt);
Deviation check_division(const LoopInstance& l, const LoopOptions& opt);
// max |lambda(u * v) - lambda(u) * lambda(v)| with lambda(z) = (x * y) \ (x * (y * z)).
Deviation check_left_A(const LoopInstance& l, const LoopOptions& opt);
// max |x * (y * (x * z)) - (x * (y * x)) * z|.
Deviation check_bol(const LoopInstance& l, const LoopOptions& opt);
struct BruckReport {
  bool tangent = false;  // exact [m, m] in h
  bool bol_tangent = false;  // exact [[m, m], m] in m
  double automorphic_inverse = 0;  // max |(x * y)^-1 - x^-1 * y^-1|
};
BruckReport check_bruck(const LoopInstance& l, const LoopOptions& opt);

// Exact [m, m] in h, [h, m] in m and g = h + m for a cataloged pair.
struct TangentReport {
  bool direct_sum = false;
  bool reductive = false;
  bool bruck = false;
  bool bol = false;
};
TangentReport tangent_checks(const std::string& algebra, const std::vector<std::string>& h,
                             const std::vector<std::string>& m);

// Hyperbolic plane loop invariants: decomposition reconstruction, H-conjugation invariance of
// the section, sharp transitivity and the tangent space at the identity.
double h2_reconstruction(const LoopOptions& opt);
double h2_conjugation_invariance(const LoopOptions& opt);
double h2_sharp_transitivity(const LoopOptions& opt);
double h2_tangent(double step = 1e-6);

std::vector<Record> verify_loops(const LoopOptions& opt = {});

}  // namespace lieloop
