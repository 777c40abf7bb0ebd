#pragma once

#include "lieloop/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lieloop {

// Monomial of degree <= 2 as a sorted index pair; -1 marks an absent factor.
using Monomial = std::pair<int, int>;

// Sparse polynomial of degree at most 2 in indexed variables with rational coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(int i, const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const { return t_; }
  void add_term(Monomial m, const Rational& c);
  int degree() const;
  bool is_zero() const { return t_.empty(); }
  Rational constant_term() const;
  // Linear coefficient of variable i.
  Rational linear(int i) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  // Throws std::domain_error if the product exceeds degree 2.
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  Rational eval(const RVec& x) const;
  // Replace variable v by the polynomial p (degree of result must stay <= 2).
  Poly substitute(int v, const Poly& p) const;
  std::vector<int> variables() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::map<Monomial, Rational> t_;
};

Monomial make_monomial(int i, int j);

}  // namespace lieloop
