#include "lieloop/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace lieloop {

double C(double x) { return x >= 0 ? std::cosh(std::sqrt(x)) : std::cos(std::sqrt(-x)); }

double S(double x) {
  // sinh(r)/r and sin(r)/r lose accuracy near 0; the series in x converges fast there.
  if (std::abs(x) < 1e-8) return 1 + x / 6 + x * x / 120;
  double r = std::sqrt(std::abs(x));
  return x > 0 ? std::sinh(r) / r : std::sin(r) / r;
}

double killing_numeric(const LieAlgebra& alg, const std::vector<double>& x) {
  if (x.size() != alg.dim()) throw std::invalid_argument("killing_numeric: dimension mismatch");
  const RMat& k = alg.killing_matrix();
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * to_double(k(i, j)) * x[j];
  return s;
}

CMat to_cmat(const NMat& m) {
  CMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

CMat represent_numeric(const LieAlgebra& alg, const std::vector<double>& x) {
  if (!alg.has_matrix_rep()) throw std::invalid_argument(alg.name() + " has no matrix realization");
  if (x.size() != alg.dim()) throw std::invalid_argument("represent_numeric: dimension mismatch");
  const std::size_t n = alg.rep_size();
  CMat out = CMat::Zero(n, n);
  for (std::size_t k = 0; k < x.size(); ++k) out += x[k] * to_cmat(alg.rep_basis()[k]);
  return out;
}

CMat exp_closed(const LieAlgebra& alg, const std::vector<double>& x) {
  if (alg.dim() != 3 || alg.rep_size() != 2)
    throw std::invalid_argument("exp_closed needs a 3-dimensional algebra realized by 2x2 matrices");
  double k = killing_numeric(alg, x);
  return C(k) * CMat::Identity(2, 2) + S(k) * represent_numeric(alg, x);
}

CMat exp_series(const CMat& x, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("exp_series: tolerance must be positive");
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMat a = x / std::ldexp(1.0, s);
  const double na = norm / std::ldexp(1.0, s);
  CMat sum = CMat::Identity(x.rows(), x.cols());
  CMat term = sum;
  // Squaring s times multiplies the error of exp(a) by about 2^s; budget the Taylor
  // remainder accordingly.
  const double target = tol / std::ldexp(1.0, s + 1);
  double bound = na;
  bool done = na == 0;
  for (int n = 1; n <= 60 && !done; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
    bound = bound * na / (n + 1);
    // Remainder after n terms is at most na^(n+1)/(n+1)! * 1/(1 - na/(n+2)) <= 2 * bound.
    done = 2 * bound < target;
  }
  if (!done) throw std::runtime_error("exp_series: tolerance not reached within 60 terms");
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

CMat exp_series(const LieAlgebra& alg, const std::vector<double>& x, double tol) {
  return exp_series(represent_numeric(alg, x), tol);
}

RVec conjugate(const LieAlgebra& alg, const NMat& g, const RVec& x) {
  NMat y = g.inverse() * alg.represent(x) * g;
  auto c = alg.pull_back(y);
  if (!c) throw std::domain_error("conjugate: g^-1 X g is not in the image of " + alg.name());
  return *c;
}

NumericConjugate conjugate_numeric(const LieAlgebra& alg, const CMat& g, const std::vector<double>& x) {
  const std::size_t n = alg.rep_size(), d = alg.dim();
  CMat y = g.inverse() * represent_numeric(alg, x) * g;
  Eigen::MatrixXd a(2 * n * n, d);
  Eigen::VectorXd b(2 * n * n);
  for (std::size_t k = 0; k < d; ++k) {
    CMat bk = to_cmat(alg.rep_basis()[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(2 * (i * n + j), k) = bk(i, j).real();
        a(2 * (i * n + j) + 1, k) = bk(i, j).imag();
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b(2 * (i * n + j)) = y(i, j).real();
      b(2 * (i * n + j) + 1) = y(i, j).imag();
    }
  Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  NumericConjugate out;
  out.coords.assign(c.data(), c.data() + c.size());
  out.residual = (a * c - b).norm();
  return out;
}

namespace {

Eigen::Matrix2d unit_det(Eigen::Matrix2d g) {
  double det = g.determinant();
  if (det == 0) throw std::logic_error("sl2_canonical: singular conjugator");
  return g / std::sqrt(std::abs(det));
}

}  // namespace

Sl2Canonical sl2_canonical(const std::vector<double>& x, double zero_tol) {
  if (x.size() != 3) throw std::invalid_argument("sl2_canonical: expected sl2R coordinates");
  const double l1 = x[0], l2 = x[1], l3 = x[2];
  if (std::abs(l1) + std::abs(l2) + std::abs(l3) <= zero_tol)
    throw std::invalid_argument("sl2_canonical: zero element");
  Eigen::Matrix2d m;
  m << l1, l2 + l3, l2 - l3, -l1;
  const double k = l1 * l1 + l2 * l2 - l3 * l3;
  const double scale = l1 * l1 + l2 * l2 + l3 * l3;
  Sl2Canonical out;
  if (k < -zero_tol * scale) {
    out.kind = ElementKind::Elliptic;
    out.mu = std::sqrt(-k);
    // With u = (0,1) and w = Xu/mu: X w = -mu u, so g = [w u] carries X to mu e3.
    Eigen::Vector2d u(0, 1);
    Eigen::Vector2d w = m * u / out.mu;
    Eigen::Matrix2d g;
    g << w, u;
    out.g = unit_det(g);
    out.canonical = {0, 0, out.mu};
  } else if (k > zero_tol * scale) {
    out.kind = ElementKind::HyperbolicOrLoxodromic;
    out.mu = std::sqrt(k);
    // Eigenvectors for +mu and -mu from either row of X - lambda I.
    auto eigvec = [&](double lambda) {
      Eigen::Vector2d p(m(0, 1), lambda - m(0, 0)), q(lambda - m(1, 1), m(1, 0));
      return p.norm() >= q.norm() ? p : q;
    };
    Eigen::Vector2d vp = eigvec(out.mu), vm = eigvec(-out.mu);
    Eigen::Matrix2d g;
    g << vp, vm;
    if (g.determinant() < 0) g.col(1) = -vm;
    out.g = unit_det(g);
    out.canonical = {out.mu, 0, 0};
  } else {
    out.kind = ElementKind::Parabolic;
    out.mu = 1;
    Eigen::Vector2d u(0, 1);
    if ((m * u).norm() <= zero_tol * std::sqrt(scale)) u = Eigen::Vector2d(1, 0);
    Eigen::Vector2d w = m * u;
    // [w u] carries X to [[0,1],[0,0]]; rescaling by diag(1/sqrt2, sqrt2) gives e2 + e3.
    Eigen::Matrix2d g;
    g << w / std::sqrt(2.0), u * std::sqrt(2.0);
    out.g = unit_det(g);
    out.canonical = {0, 1, 1};
  }
  return out;
}

}  // namespace lieloop
