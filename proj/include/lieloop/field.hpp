#pragma once

#include "lieloop/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace lieloop {

// Exact element (a + b*sqrt2) + i*(c + d*sqrt2) of Q(sqrt2, i).
struct Num {
  Rational a = 0, b = 0, c = 0, d = 0;

  Num() = default;
  Num(const Rational& r) : a(r) {}  // NOLINT: implicit from rationals is intended
  Num(int r) : a(r) {}              // NOLINT
  Num(Rational a_, Rational b_, Rational c_, Rational d_) : a(a_), b(b_), c(c_), d(d_) {}

  static Num sqrt2() { return Num(0, 1, 0, 0); }
  static Num imag() { return Num(0, 0, 1, 0); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }
  bool is_real() const { return c == 0 && d == 0; }
  Num conj() const { return Num(a, b, -c, -d); }
  std::complex<double> to_complex() const;
  std::string str() const;

  Num operator-() const { return Num(-a, -b, -c, -d); }
  Num& operator+=(const Num& o);
  Num& operator-=(const Num& o);
  Num& operator*=(const Num& o) { return *this = *this * o; }
  friend Num operator+(Num x, const Num& y) { return x += y; }
  friend Num operator-(Num x, const Num& y) { return x -= y; }
  friend Num operator*(const Num& x, const Num& y);
  friend Num operator/(const Num& x, const Num& y);
  friend bool operator==(const Num& x, const Num& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  Num inverse() const;
};

// Dense square-or-rectangular matrix over Num.
class NMat {
 public:
  NMat() = default;
  NMat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static NMat identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Num& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Num& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  NMat operator*(const NMat& o) const;
  NMat operator+(const NMat& o) const;
  NMat operator-(const NMat& o) const;
  NMat scaled(const Num& s) const;
  bool operator==(const NMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool is_zero() const;
  Num det() const;
  // Throws std::domain_error when singular.
  NMat inverse() const;
  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Num> a_;
};

}  // namespace lieloop
