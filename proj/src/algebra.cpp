#include "lieloop/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace lieloop {

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Elliptic: return "Elliptic";
    case ElementKind::Parabolic: return "Parabolic";
    case ElementKind::HyperbolicOrLoxodromic: return "HyperbolicOrLoxodromic";
  }
  return "?";
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, Rational nu)
    : name_(std::move(name)), names_(std::move(basis_names)), nu_(nu) {
  if (names_.empty()) throw std::invalid_argument("algebra needs a nonempty basis");
  c_.assign(dim() * dim(), zeros(dim()));
}

int LieAlgebra::basis_index(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<int>(i);
  return -1;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RVec& v) {
  if (i >= dim() || j >= dim() || v.size() != dim()) throw std::out_of_range("set_bracket index");
  c_[i * dim() + j] = v;
  c_[j * dim() + i] = scale(Rational(-1), v);
}

void LieAlgebra::finalize() {
  std::vector<RMat> ads;
  ads.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) ads.push_back(ad_matrix(unit(dim(), i)));
  killing_ = RMat(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      Rational t = nu_ * (ads[i] * ads[j]).trace();
      killing_(i, j) = t;
      killing_(j, i) = t;
    }
}

RVec LieAlgebra::bracket(const RVec& x, const RVec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("algebra mismatch in bracket");
  RVec r = zeros(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0 || i == j) continue;
      axpy(r, x[i] * y[j], structure(i, j));
    }
  }
  return r;
}

RMat LieAlgebra::ad_matrix(const RVec& x) const {
  RMat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    RVec col = bracket(x, unit(dim(), j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

Rational LieAlgebra::killing(const RVec& x, const RVec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("algebra mismatch in killing");
  return dot(x, killing_ * y);
}

ElementClass LieAlgebra::classify(const RVec& x) const {
  Rational k = killing(x, x);
  ElementKind kind = k < 0 ? ElementKind::Elliptic : (k == 0 ? ElementKind::Parabolic : ElementKind::HyperbolicOrLoxodromic);
  return {kind, k};
}

std::vector<std::string> LieAlgebra::antisymmetry_violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      if (!is_zero(add(structure(i, j), structure(j, i))))
        out.push_back("[" + names_[i] + "," + names_[j] + "] + [" + names_[j] + "," + names_[i] + "] != 0");
  return out;
}

std::vector<std::string> LieAlgebra::jacobi_violations() const {
  std::vector<std::string> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RVec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        RVec s = bracket(ei, structure(j, k));
        s = add(s, bracket(ej, structure(k, i)));
        s = add(s, bracket(ek, structure(i, j)));
        if (!is_zero(s))
          out.push_back("Jacobi fails on (" + names_[i] + "," + names_[j] + "," + names_[k] + ")");
      }
  return out;
}

void LieAlgebra::set_matrix_rep(std::vector<NMat> mats) {
  if (mats.size() != dim()) throw std::invalid_argument("matrix realization needs one matrix per basis vector");
  for (const auto& m : mats)
    if (m.rows() != mats[0].rows() || m.cols() != mats[0].rows())
      throw std::invalid_argument("realization matrices must be square and equal-sized");
  rep_ = std::move(mats);
}

NMat LieAlgebra::represent(const RVec& x) const {
  if (rep_.empty()) throw std::logic_error(name_ + " has no matrix realization");
  if (x.size() != dim()) throw std::invalid_argument("algebra mismatch in represent");
  std::size_t n = rep_size();
  NMat m(n, n);
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != 0) m = m + rep_[i].scaled(Num(x[i]));
  return m;
}

std::optional<RVec> LieAlgebra::pull_back(const NMat& m) const {
  if (rep_.empty()) throw std::logic_error(name_ + " has no matrix realization");
  std::size_t n = rep_size();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("pull_back: wrong matrix size");
  // Four real components per entry.
  RMat a(4 * n * n, dim());
  RVec b = zeros(4 * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t row = 4 * (r * n + c);
      for (std::size_t k = 0; k < dim(); ++k) {
        const Num& e = rep_[k](r, c);
        a(row, k) = e.a;
        a(row + 1, k) = e.b;
        a(row + 2, k) = e.c;
        a(row + 3, k) = e.d;
      }
      b[row] = m(r, c).a;
      b[row + 1] = m(r, c).b;
      b[row + 2] = m(r, c).c;
      b[row + 3] = m(r, c).d;
    }
  return solve(a, b);
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> basis_names, Rational nu,
                                     std::vector<NMat> basis_matrices) {
  LieAlgebra alg(std::move(name), std::move(basis_names), nu);
  alg.set_matrix_rep(std::move(basis_matrices));
  const auto& b = alg.rep_basis();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      NMat comm = b[i] * b[j] - b[j] * b[i];
      auto v = alg.pull_back(comm);
      if (!v) throw std::domain_error("realization is not closed under the commutator");
      alg.set_bracket(i, j, *v);
    }
  alg.finalize();
  return alg;
}

std::vector<std::string> LieAlgebra::rep_mismatches() const {
  std::vector<std::string> out;
  if (rep_.empty()) return out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      NMat comm = rep_[i] * rep_[j] - rep_[j] * rep_[i];
      auto v = pull_back(comm);
      if (!v) {
        out.push_back("[" + names_[i] + "," + names_[j] + "] leaves the realization");
      } else if (*v != structure(i, j)) {
        out.push_back("[" + names_[i] + "," + names_[j] + "]: table " + format(structure(i, j)) + ", matrices " +
                      format(*v));
      }
    }
  return out;
}

std::string LieAlgebra::to_text() const {
  std::ostringstream os;
  os << "name " << name_ << "\n";
  os << "dim " << dim() << "\n";
  os << "killing_normalization " << lieloop::to_string(nu_) << "\n";
  os << "basis";
  for (const auto& n : names_) os << " " << n;
  os << "\n";
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        const Rational& q = structure(i, j)[k];
        if (q != 0) os << i + 1 << " " << j + 1 << " " << k + 1 << " " << lieloop::to_string(q) << "\n";
      }
  return os.str();
}

LieAlgebra LieAlgebra::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line, name;
  std::size_t n = 0;
  Rational nu = 1;
  std::vector<std::string> names;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "name") {
      ls >> name;
    } else if (key == "dim") {
      ls >> n;
    } else if (key == "killing_normalization") {
      std::string q;
      ls >> q;
      nu = parse_rational(q);
    } else if (key == "basis") {
      std::string b;
      while (ls >> b) names.push_back(b);
    } else {
      std::size_t i = std::stoul(key), j, k;
      std::string q;
      if (!(ls >> j >> k >> q)) throw std::invalid_argument("bad structure constant line: " + line);
      entries.emplace_back(i, j, k, parse_rational(q));
    }
  }
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  if (names.size() != n) throw std::invalid_argument("basis size does not match dim");
  LieAlgebra alg(name, names, nu);
  for (auto& [i, j, k, q] : entries) {
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n) throw std::out_of_range("structure index");
    alg.c_[(i - 1) * n + (j - 1)][k - 1] = q;
  }
  alg.finalize();
  return alg;
}

std::string LieAlgebra::format(const RVec& x) const {
  std::string s;
  for (std::size_t i = 0; i < x.size() && i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational q = x[i];
    if (!s.empty()) s += q > 0 ? " + " : " - ";
    else if (q < 0) s += "-";
    Rational a = abs(q);
    if (a != 1) s += lieloop::to_string(a) + " ";
    s += names_[i];
  }
  return s.empty() ? "0" : s;
}

Element::Element(const LieAlgebra& alg, RVec coords) : alg_(&alg), c_(std::move(coords)) {
  if (c_.size() != alg.dim()) throw std::invalid_argument("coordinate length does not match algebra dimension");
}

Element Element::basis(const LieAlgebra& alg, std::size_t i) { return Element(alg, unit(alg.dim(), i)); }

Element Element::operator+(const Element& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("algebra mismatch");
  return Element(*alg_, add(c_, o.c_));
}

Element Element::operator-(const Element& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("algebra mismatch");
  return Element(*alg_, sub(c_, o.c_));
}

Element Element::operator*(const Rational& s) const { return Element(*alg_, scale(s, c_)); }

Element bracket(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra()) throw std::invalid_argument("algebra mismatch in bracket");
  return Element(x.algebra(), x.algebra().bracket(x.coords(), y.coords()));
}

RMat ad_matrix(const Element& x) { return x.algebra().ad_matrix(x.coords()); }

Rational killing(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra()) throw std::invalid_argument("algebra mismatch in killing");
  return x.algebra().killing(x.coords(), y.coords());
}

ElementClass classify(const Element& x) { return x.algebra().classify(x.coords()); }

Subspace::Subspace(const LieAlgebra& alg, const std::vector<RVec>& spanning) : alg_(&alg) {
  for (const auto& v : spanning)
    if (v.size() != alg.dim()) throw std::invalid_argument("spanning vector has wrong length");
  basis_ = row_reduce(spanning, alg.dim());
}

Subspace Subspace::whole(const LieAlgebra& alg) {
  std::vector<RVec> b;
  for (std::size_t i = 0; i < alg.dim(); ++i) b.push_back(unit(alg.dim(), i));
  return Subspace(alg, b);
}

bool Subspace::contains(const RVec& v) const {
  if (v.size() != alg_->dim()) throw std::invalid_argument("algebra mismatch in contains");
  RVec r = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (r[p] != 0) axpy(r, -r[p], b);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis())
    if (!contains(v)) return false;
  return true;
}

std::string Subspace::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += alg_->format(basis_[i]);
  }
  return s + ">";
}

Subspace lie_closure(const Subspace& s) {
  const LieAlgebra& alg = s.algebra();
  Subspace cur = s;
  for (std::size_t iter = 0; iter <= alg.dim(); ++iter) {
    std::vector<RVec> span = cur.basis();
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = i + 1; j < cur.dim(); ++j) span.push_back(alg.bracket(cur.basis()[i], cur.basis()[j]));
    Subspace next(alg, span);
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
  return cur;
}

bool is_subalgebra(const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(s.algebra().bracket(b[i], b[j]))) return false;
  return true;
}

bool direct_sum(const Subspace& h, const Subspace& m) {
  if (&h.algebra() != &m.algebra()) throw std::invalid_argument("algebra mismatch in direct_sum");
  if (h.dim() + m.dim() != h.algebra().dim()) return false;
  std::vector<RVec> all = h.basis();
  all.insert(all.end(), m.basis().begin(), m.basis().end());
  return Subspace(h.algebra(), all).dim() == h.algebra().dim();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const LieAlgebra& alg = a.algebra();
  if (&alg != &b.algebra()) throw std::invalid_argument("algebra mismatch in intersect");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(alg, {});
  std::vector<RVec> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(scale(Rational(-1), v));
  RMat m = RMat::from_cols(cols, alg.dim());
  std::vector<RVec> out;
  for (const auto& k : nullspace(m)) {
    RVec v = zeros(alg.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, k[i], a.basis()[i]);
    out.push_back(v);
  }
  return Subspace(alg, out);
}

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  const LieAlgebra& alg = a.algebra();
  std::vector<RVec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.push_back(alg.bracket(x, y));
  return Subspace(alg, out);
}

}  // namespace lieloop
