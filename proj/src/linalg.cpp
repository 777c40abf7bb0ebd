#include "lieloop/linalg.hpp"

#include <stdexcept>

namespace lieloop {

RVec zeros(std::size_t n) { return RVec(n, Rational(0)); }

RVec unit(std::size_t n, std::size_t i) {
  RVec v = zeros(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

static void check_len(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

RVec add(const RVec& a, const RVec& b) {
  check_len(a, b);
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec sub(const RVec& a, const RVec& b) {
  check_len(a, b);
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec scale(const Rational& s, const RVec& v) {
  RVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(RVec& a, const Rational& s, const RVec& b) {
  check_len(a, b);
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] += s * b[i];
}

Rational dot(const RVec& a, const RVec& b) {
  check_len(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RMat::RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RMat RMat::identity(std::size_t n) {
  RMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMat RMat::from_rows(const std::vector<RVec>& rows, std::size_t cols) {
  RMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RMat RMat::from_cols(const std::vector<RVec>& cols, std::size_t rows) {
  RMat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RVec RMat::row(std::size_t r) const { return RVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

RVec RMat::col(std::size_t c) const {
  RVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RMat RMat::transpose() const {
  RMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RMat RMat::operator*(const RMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RMat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
    }
  return p;
}

RVec RMat::operator*(const RVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RVec r = zeros(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

RMat RMat::operator+(const RMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RMat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

RMat RMat::operator-(const RMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RMat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

bool RMat::operator==(const RMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

Rational RMat::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<std::size_t> rref(RMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RMat m) { return rref(m).size(); }

std::vector<RVec> nullspace(const RMat& m) {
  RMat a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<RVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    RVec v = zeros(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve(const RMat& m, const RVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  RMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RVec x = zeros(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return x;
}

std::optional<RMat> inverse(const RMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  std::size_t n = m.rows();
  RMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RVec> row_reduce(const std::vector<RVec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  RMat m = RMat::from_rows(vs, dim);
  auto piv = rref(m);
  std::vector<RVec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace lieloop
