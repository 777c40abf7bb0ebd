#pragma once

#include "lieloop/field.hpp"
#include "lieloop/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieloop {

enum class ElementKind { Elliptic, Parabolic, HyperbolicOrLoxodromic };

struct ElementClass {
  ElementKind kind;
  Rational killing_value;
};

std::string to_string(ElementKind k);

// Finite-dimensional real Lie algebra over exact rational structure constants.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_names, Rational nu);

  // Structure constants computed by pulling back commutators of the given basis matrices.
  static LieAlgebra from_matrices(std::string name, std::vector<std::string> basis_names, Rational nu,
                                  std::vector<NMat> basis_matrices);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  // Index of a basis name, or -1.
  int basis_index(const std::string& n) const;
  const Rational& killing_normalization() const { return nu_; }

  // c[i][j] as a coordinate vector: [e_i, e_j] = sum_k c[i][j][k] e_k.
  const RVec& structure(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }
  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const RVec& v);
  // Must be called after all brackets are set; caches the Killing matrix.
  void finalize();

  RVec bracket(const RVec& x, const RVec& y) const;
  RMat ad_matrix(const RVec& x) const;
  Rational killing(const RVec& x, const RVec& y) const;
  ElementClass classify(const RVec& x) const;
  const RMat& killing_matrix() const { return killing_; }

  // Each entry describes one failing basis triple/pair; empty when the identity holds.
  std::vector<std::string> antisymmetry_violations() const;
  std::vector<std::string> jacobi_violations() const;

  bool has_matrix_rep() const { return !rep_.empty(); }
  std::size_t rep_size() const { return rep_.empty() ? 0 : rep_[0].rows(); }
  const std::vector<NMat>& rep_basis() const { return rep_; }
  void set_matrix_rep(std::vector<NMat> mats);
  NMat represent(const RVec& x) const;
  // Rational coordinates of a matrix in the image of the realization, or nullopt.
  std::optional<RVec> pull_back(const NMat& m) const;
  // Structure constants recomputed from the matrix realization.
  std::vector<std::string> rep_mismatches() const;

  // Optional linear map used by expressions for multiplication by i on realified algebras.
  void set_complex_structure(RMat j) { j_ = std::move(j); }
  const std::optional<RMat>& complex_structure() const { return j_; }

  // Text format: header lines then "i j k p/q" for nonzero constants, 1-indexed.
  std::string to_text() const;
  static LieAlgebra from_text(const std::string& text);

  std::string format(const RVec& x) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  Rational nu_;
  std::vector<RVec> c_;
  RMat killing_;
  std::vector<NMat> rep_;
  std::optional<RMat> j_;
};

// Coordinate vector tied to an algebra; operations check that both operands share it.
class Element {
 public:
  Element(const LieAlgebra& alg, RVec coords);
  static Element basis(const LieAlgebra& alg, std::size_t i);
  const LieAlgebra& algebra() const { return *alg_; }
  const RVec& coords() const { return c_; }
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Rational& s) const;
  bool operator==(const Element& o) const { return alg_ == o.alg_ && c_ == o.c_; }
  std::string str() const { return alg_->format(c_); }

 private:
  const LieAlgebra* alg_;
  RVec c_;
};

Element bracket(const Element& x, const Element& y);
RMat ad_matrix(const Element& x);
Rational killing(const Element& x, const Element& y);
ElementClass classify(const Element& x);

// Subspace stored by its canonical reduced row echelon basis.
class Subspace {
 public:
  Subspace(const LieAlgebra& alg, const std::vector<RVec>& spanning);
  static Subspace whole(const LieAlgebra& alg);
  const LieAlgebra& algebra() const { return *alg_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RVec>& basis() const { return basis_; }
  bool contains(const RVec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return alg_ == o.alg_ && basis_ == o.basis_; }
  std::string str() const;

 private:
  const LieAlgebra* alg_;
  std::vector<RVec> basis_;
};

Subspace lie_closure(const Subspace& s);
bool is_subalgebra(const Subspace& s);
bool direct_sum(const Subspace& h, const Subspace& m);
Subspace intersect(const Subspace& a, const Subspace& b);
// span of [a_i, b_j]
Subspace bracket_span(const Subspace& a, const Subspace& b);

}  // namespace lieloop
