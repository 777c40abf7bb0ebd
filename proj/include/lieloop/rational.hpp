#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lieloop {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

// Canonical text form: "p" for integers, otherwise "p/q".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace lieloop
