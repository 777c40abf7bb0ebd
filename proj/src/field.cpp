#include "lieloop/field.hpp"

#include <cmath>
#include <stdexcept>

namespace lieloop {

Num& Num::operator+=(const Num& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Num& Num::operator-=(const Num& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

namespace {
// (p + q sqrt2)(r + s sqrt2)
void mul2(const Rational& p, const Rational& q, const Rational& r, const Rational& s, Rational& x, Rational& y) {
  x = p * r + 2 * q * s;
  y = p * s + q * r;
}
}  // namespace

Num operator*(const Num& x, const Num& y) {
  Rational re1, re2, im1, im2, t1, t2;
  mul2(x.a, x.b, y.a, y.b, re1, re2);
  mul2(x.c, x.d, y.c, y.d, t1, t2);
  mul2(x.a, x.b, y.c, y.d, im1, im2);
  Rational u1, u2;
  mul2(x.c, x.d, y.a, y.b, u1, u2);
  return Num(re1 - t1, re2 - t2, im1 + u1, im2 + u2);
}

Num Num::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,i)");
  // |x|^2 = p^2 + q^2 with p = a + b sqrt2, q = c + d sqrt2
  Rational s1, s2, t1, t2;
  mul2(a, b, a, b, s1, s2);
  mul2(c, d, c, d, t1, t2);
  Rational n1 = s1 + t1, n2 = s2 + t2;  // n = n1 + n2 sqrt2, real
  Rational norm = n1 * n1 - 2 * n2 * n2;
  Num ninv(n1 / norm, -n2 / norm, 0, 0);
  return conj() * ninv;
}

Num operator/(const Num& x, const Num& y) { return x * y.inverse(); }

std::complex<double> Num::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {a.get_d() + b.get_d() * r2, c.get_d() + d.get_d() * r2};
}

std::string Num::str() const {
  std::string s;
  auto term = [&s](const Rational& q, const std::string& unit) {
    if (q == 0) return;
    std::string v = to_string(q);
    if (!s.empty()) s += (q > 0) ? "+" : "";
    if (unit.empty()) {
      s += v;
    } else if (q == 1) {
      s += unit;
    } else if (q == -1) {
      s += "-" + unit;
    } else {
      s += v + "*" + unit;
    }
  };
  term(a, "");
  term(b, "r2");
  term(c, "i");
  term(d, "i*r2");
  return s.empty() ? "0" : s;
}

NMat NMat::identity(std::size_t n) {
  NMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

NMat NMat::operator*(const NMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("NMat shape mismatch");
  NMat p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
    }
  return p;
}

NMat NMat::operator+(const NMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("NMat shape mismatch");
  NMat s(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

NMat NMat::operator-(const NMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("NMat shape mismatch");
  NMat s(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

NMat NMat::scaled(const Num& s) const {
  NMat m = *this;
  for (auto& x : m.a_) x = x * s;
  return m;
}

bool NMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Num NMat::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  NMat m = *this;
  Num d = 1;
  for (std::size_t c = 0; c < c_; ++c) {
    std::size_t p = c;
    while (p < r_ && m(p, c).is_zero()) ++p;
    if (p == r_) return Num(0);
    if (p != c) {
      for (std::size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d = d * m(c, c);
    Num inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < r_; ++i) {
      if (m(i, c).is_zero()) continue;
      Num f = m(i, c) * inv;
      for (std::size_t j = c; j < c_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

NMat NMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = r_;
  NMat m = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Num pinv = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * pinv;
      inv(c, j) = inv(c, j) * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Num f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::string NMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace lieloop
