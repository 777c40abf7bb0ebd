#pragma once

#include "lieloop/algebra.hpp"

#include <Eigen/Dense>

#include <vector>

namespace lieloop {

using CMat = Eigen::MatrixXcd;

// C(x) = cosh sqrt(x) for x >= 0 and cos sqrt(-x) for x < 0.
double C(double x);
// S(x) = sinh sqrt(x) / sqrt(x) for x > 0, sin sqrt(-x) / sqrt(-x) for x < 0, S(0) = 1.
double S(double x);

// Coordinates as floats; the algebra's rational Killing matrix is evaluated in double.
double killing_numeric(const LieAlgebra& alg, const std::vector<double>& x);
CMat represent_numeric(const LieAlgebra& alg, const std::vector<double>& x);
CMat to_cmat(const NMat& m);

// exp X = C(k(X)) I + S(k(X)) X for 3-dimensional algebras realized by 2x2 matrices with
// X^2 = k(X) I (sl2R and so3). Throws std::invalid_argument otherwise.
CMat exp_closed(const LieAlgebra& alg, const std::vector<double>& x);

// Scaling and squaring with a truncated Taylor series whose remainder bound is below tol.
// Throws std::invalid_argument for tol <= 0 and std::runtime_error when the term budget runs out.
CMat exp_series(const CMat& x, double tol = 1e-14);
CMat exp_series(const LieAlgebra& alg, const std::vector<double>& x, double tol = 1e-14);

// Ad_g x = g^-1 X g pulled back to exact coordinates. Throws std::domain_error when g is
// singular or the conjugate leaves the realized algebra.
RVec conjugate(const LieAlgebra& alg, const NMat& g, const RVec& x);

struct NumericConjugate {
  std::vector<double> coords;
  // Frobenius norm of g^-1 X g minus the represented pull-back.
  double residual = 0;
};
// Float fallback: least-squares pull-back of g^-1 X g.
NumericConjugate conjugate_numeric(const LieAlgebra& alg, const CMat& g, const std::vector<double>& x);

struct Sl2Canonical {
  ElementKind kind;
  // Real 2x2 with det g = +1 or -1 and g^-1 X g = canonical.
  Eigen::Matrix2d g;
  double mu = 0;
  // mu e3, mu e1 or mu (e2 + e3), mu > 0.
  std::vector<double> canonical;
};
// Throws std::invalid_argument for x = 0.
Sl2Canonical sl2_canonical(const std::vector<double>& x, double zero_tol = 1e-12);

}  // namespace lieloop
