#include "lieloop/algebras.hpp"

#include "lieloop/expr.hpp"

#include <map>
#include <stdexcept>

namespace lieloop {

namespace {

NMat mat2(Num a, Num b, Num c, Num d) {
  NMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

std::vector<NMat> sl2_matrices() {
  return {mat2(1, 0, 0, -1), mat2(0, 1, 1, 0), mat2(0, 1, -1, 0)};
}

NMat block_diag(const NMat& a, const NMat& b) {
  NMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Matrix with entries given as affine functions of the coordinates lambda_1..lambda_n;
// returns the partial derivative in each coordinate.
std::vector<NMat> realization(std::size_t n, std::size_t dim,
                              const std::vector<std::vector<std::map<int, Num>>>& entries) {
  std::vector<NMat> out(dim, NMat(n, n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [k, v] : entries[r][c]) out[static_cast<std::size_t>(k - 1)](r, c) += v;
  return out;
}

std::vector<NMat> sl3r_matrices() {
  const Num o(1);
  return realization(3, 8,
                     {{{{5, -o}, {8, -o}}, {{1, o}}, {{2, o}}},
                      {{{3, o}}, {{5, o}}, {{6, o}}},
                      {{{4, o}}, {{7, o}}, {{8, o}}}});
}

std::vector<NMat> su21_matrices() {
  const Num o(1), i = Num::imag();
  return realization(3, 8,
                     {{{{1, -i}}, {{2, -o}, {3, -i}}, {{4, o}, {5, i}}},
                      {{{2, o}, {3, -i}}, {{1, i}, {6, i}}, {{7, o}, {8, i}}},
                      {{{4, o}, {5, -i}}, {{7, o}, {8, -i}}, {{6, -i}}}});
}

std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> r;
  for (std::size_t k = 1; k <= n; ++k) r.push_back(prefix + std::to_string(k));
  return r;
}

LieAlgebra sl2_plus(const std::string& name, bool so3) {
  const Num eps = so3 ? Num::imag() : Num(1);
  auto e = sl2_matrices();
  NMat z(2, 2);
  std::vector<NMat> mats = {block_diag(e[0], z), block_diag(e[1], z), block_diag(e[2], z),
                            block_diag(z, e[0].scaled(eps)), block_diag(z, e[1].scaled(eps)), block_diag(z, e[2])};
  return LieAlgebra::from_matrices(name, {"u1", "u2", "u3", "v1", "v2", "v3"}, Rational(1, 8), mats);
}

// Parses "[x,y]" possibly preceded by a rational factor; returns the factor.
Rational parse_bracket_term(const std::string& term, const LieAlgebra& alg, std::size_t& i, std::size_t& j) {
  auto lb = term.find('[');
  auto comma = term.find(',', lb);
  auto rb = term.find(']', comma);
  if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos || rb + 1 != term.size())
    throw std::invalid_argument("table: malformed bracket term '" + term + "'");
  std::string coef = term.substr(0, lb);
  Rational f = 1;
  if (coef == "-") f = -1;
  else if (!coef.empty()) f = parse_rational(coef);
  int a = alg.basis_index(term.substr(lb + 1, comma - lb - 1));
  int b = alg.basis_index(term.substr(comma + 1, rb - comma - 1));
  if (a < 0 || b < 0 || a == b) throw std::invalid_argument("table: bad basis pair in '" + term + "'");
  i = static_cast<std::size_t>(a);
  j = static_cast<std::size_t>(b);
  return f;
}

}  // namespace

void apply_table(LieAlgebra& alg, const std::vector<std::string>& lines) {
  ExprEnv env;
  env.algebra = &alg;
  std::map<std::pair<std::size_t, std::size_t>, RVec> seen;
  for (const auto& raw : lines) {
    std::string line;
    for (char ch : raw)
      if (ch != ' ') line += ch;
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t p; (p = line.find('=', start)) != std::string::npos; start = p + 1)
      parts.push_back(line.substr(start, p - start));
    parts.push_back(line.substr(start));
    if (parts.size() < 2) throw std::invalid_argument("table: no '=' in '" + raw + "'");
    RVec rhs = eval_vector(parts.back(), env);
    for (std::size_t t = 0; t + 1 < parts.size(); ++t) {
      std::size_t i = 0, j = 0;
      Rational f = parse_bracket_term(parts[t], alg, i, j);
      RVec v = scale(1 / f, rhs);
      if (i > j) {
        std::swap(i, j);
        v = scale(Rational(-1), v);
      }
      auto it = seen.find({i, j});
      if (it != seen.end() && it->second != v)
        throw std::invalid_argument("table: conflicting values for [" + alg.basis_names()[i] + "," +
                                    alg.basis_names()[j] + "]");
      seen[{i, j}] = v;
      alg.set_bracket(i, j, v);
    }
  }
}

const std::vector<std::string>& table_lines(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> tables = {
      {"sl2R", {"[e1,e2]=2e3", "[e1,e3]=2e2", "[e3,e2]=2e1"}},
      {"sl3R",
       {"[e1,e2]=[e1,e7]=[e2,e6]=[e3,e4]=[e3,e6]=[e4,e7]=[e5,e8]=0", "[e1,e6]=[e2,e5]=1/2[e2,e8]=e2",
        "[e1,e8]=[e2,e7]=1/2[e1,e5]=e1", "[e4,e6]=[e3,e8]=1/2[e3,e5]=-e3", "[e3,e7]=[e4,e5]=1/2[e4,e8]=-e4",
        "[e6,e8]=[e5,e6]=[e3,e2]=e6", "[e1,e4]=[e5,e7]=[e7,e8]=-e7", "[e1,e3]=-e5", "[e2,e4]=-e8",
        "[e6,e7]=e5-e8"}},
      {"su21",
       {"[e1,e6]=0", "[e3,e2]=2e1", "[e4,e5]=2(e1-e6)", "[e8,e7]=2e6", "[e6,e3]=[e7,e4]=[e8,e5]=1/2[e1,e3]=e2",
        "[e2,e6]=[e4,e8]=[e7,e5]=1/2[e2,e1]=e3", "[e7,e2]=[e3,e8]=[e5,e6]=[e1,e5]=e4",
        "[e8,e2]=[e7,e3]=[e6,e4]=[e4,e1]=e5", "[e2,e4]=[e3,e5]=[e8,e1]=1/2[e8,e6]=e7",
        "[e2,e5]=[e4,e3]=[e1,e7]=1/2[e6,e7]=e8"}},
  };
  auto it = tables.find(name);
  if (it == tables.end()) throw std::invalid_argument("no transcribed table for " + name);
  return it->second;
}

LieAlgebra build_algebra(const std::string& name) {
  if (name == "sl2R") {
    LieAlgebra alg(name, names("e", 3), Rational(1, 8));
    apply_table(alg, table_lines(name));
    alg.set_matrix_rep(sl2_matrices());
    alg.finalize();
    return alg;
  }
  if (name == "so3") {
    auto e = sl2_matrices();
    return LieAlgebra::from_matrices(name, names("f", 3), Rational(1, 8),
                                     {e[0].scaled(Num::imag()), e[1].scaled(Num::imag()), e[2]});
  }
  if (name == "sl2C") {
    auto e = sl2_matrices();
    std::vector<NMat> mats = e;
    for (const auto& m : e) mats.push_back(m.scaled(Num::imag()));
    auto alg = LieAlgebra::from_matrices(name, {"e1", "e2", "e3", "ie1", "ie2", "ie3"}, Rational(1, 16), mats);
    RMat j(6, 6);
    for (std::size_t k = 0; k < 3; ++k) {
      j(k + 3, k) = 1;
      j(k, k + 3) = -1;
    }
    alg.set_complex_structure(j);
    return alg;
  }
  if (name == "sl3R" || name == "su21") {
    LieAlgebra alg(name, names("e", 8), Rational(1, 12));
    apply_table(alg, table_lines(name));
    alg.set_matrix_rep(name == "sl3R" ? sl3r_matrices() : su21_matrices());
    alg.finalize();
    return alg;
  }
  if (name == "sl2_plus_sl2") return sl2_plus(name, false);
  if (name == "sl2_plus_so3") return sl2_plus(name, true);
  throw std::invalid_argument("unknown algebra: " + name);
}

}  // namespace lieloop
