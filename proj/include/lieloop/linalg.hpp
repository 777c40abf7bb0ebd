#pragma once

#include "lieloop/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lieloop {

using RVec = std::vector<Rational>;

RVec zeros(std::size_t n);
RVec unit(std::size_t n, std::size_t i);
bool is_zero(const RVec& v);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rational& s, const RVec& v);
// a += s * b
void axpy(RVec& a, const Rational& s, const RVec& b);
Rational dot(const RVec& a, const RVec& b);

// Dense row-major rational matrix.
class RMat {
 public:
  RMat() = default;
  RMat(std::size_t rows, std::size_t cols);
  static RMat identity(std::size_t n);
  static RMat from_rows(const std::vector<RVec>& rows, std::size_t cols);
  static RMat from_cols(const std::vector<RVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RVec row(std::size_t r) const;
  RVec col(std::size_t c) const;
  RMat transpose() const;
  RMat operator*(const RMat& o) const;
  RVec operator*(const RVec& v) const;
  RMat operator+(const RMat& o) const;
  RMat operator-(const RMat& o) const;
  bool operator==(const RMat& o) const;
  Rational trace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form with leading entries 1. Returns pivot columns.
std::vector<std::size_t> rref(RMat& m);
std::size_t rank(RMat m);
// Basis of {x : m x = 0}.
std::vector<RVec> nullspace(const RMat& m);
// Some x with m x = b, or nullopt when inconsistent.
std::optional<RVec> solve(const RMat& m, const RVec& b);
std::optional<RMat> inverse(const RMat& m);

// Row-reduced basis of span(vs); zero rows dropped.
std::vector<RVec> row_reduce(const std::vector<RVec>& vs, std::size_t dim);

std::string to_string(const RVec& v);

}  // namespace lieloop
