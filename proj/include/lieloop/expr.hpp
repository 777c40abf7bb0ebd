#pragma once

#include "lieloop/algebra.hpp"
#include "lieloop/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieloop {

// Result of evaluating an expression: a scalar in Q(sqrt2,i) or an algebra vector,
// each affine-linear in the free symbols. The key "" holds the constant part.
struct Value {
  bool is_vector = false;
  std::map<std::string, Num> scalar;
  std::map<std::string, RVec> vector;

  bool is_constant() const;
  std::vector<std::string> symbols() const;
};

struct ExprEnv {
  const LieAlgebra* algebra = nullptr;
  std::map<std::string, Rational> params;
  std::map<std::string, Value> named;
  // Unknown identifiers become free symbols instead of raising an error.
  bool allow_symbols = false;
};

// Grammar: sums of implicit or explicit products of numbers, identifiers, parentheses and
// integer powers. Identifiers are one letter plus optional digits; "i" is the imaginary unit,
// "r2" is sqrt(2). Throws std::invalid_argument on syntax errors or nonlinear use of symbols and
// std::domain_error on division by zero.
Value parse_expr(const std::string& text, const ExprEnv& env);

RVec eval_vector(const std::string& text, const ExprEnv& env);
Num eval_scalar(const std::string& text, const ExprEnv& env);
Rational eval_rational(const std::string& text, const ExprEnv& env);

// Vector affine in symbols: constant + sum_s coeff[s] * s.
struct LinearVector {
  RVec constant;
  std::map<std::string, RVec> coeff;
};
LinearVector eval_linear_vector(const std::string& text, const ExprEnv& env);

// Parameter side condition "lhs op rhs" with op among = != < <= > >=.
struct Condition {
  std::string text;
  std::string lhs, op, rhs;
  static Condition parse(const std::string& text);
  bool holds(const ExprEnv& env) const;
};

}  // namespace lieloop
