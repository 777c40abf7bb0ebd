#include "lieloop/poly.hpp"

#include <set>
#include <stdexcept>

namespace lieloop {

Monomial make_monomial(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i >= 0 && j < 0) std::swap(i, j);
  return {i, j};
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term({-1, -1}, c);
  return p;
}

Poly Poly::variable(int i, const Rational& c) {
  Poly p;
  p.add_term({-1, i}, c);
  return p;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  m = make_monomial(m.first, m.second);
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, (m.first >= 0 ? 1 : 0) + (m.second >= 0 ? 1 : 0));
  return d;
}

Rational Poly::constant_term() const {
  auto it = t_.find({-1, -1});
  return it == t_.end() ? Rational(0) : it->second;
}

Rational Poly::linear(int i) const {
  auto it = t_.find({-1, i});
  return it == t_.end() ? Rational(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r;
  if (s == 0) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      std::vector<int> f;
      for (int v : {m1.first, m1.second, m2.first, m2.second})
        if (v >= 0) f.push_back(v);
      if (f.size() > 2) throw std::domain_error("product exceeds degree 2");
      Monomial m{-1, -1};
      if (f.size() == 1) m = {-1, f[0]};
      if (f.size() == 2) m = make_monomial(f[0], f[1]);
      r.add_term(m, c1 * c2);
    }
  return r;
}

Rational Poly::eval(const RVec& x) const {
  Rational s = 0;
  for (const auto& [m, c] : t_) {
    Rational t = c;
    if (m.first >= 0) t *= x.at(m.first);
    if (m.second >= 0) t *= x.at(m.second);
    s += t;
  }
  return s;
}

Poly Poly::substitute(int v, const Poly& p) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Poly a = m.first < 0 ? constant(1) : (m.first == v ? p : variable(m.first));
    Poly b = m.second < 0 ? constant(1) : (m.second == v ? p : variable(m.second));
    r = r + (a * b) * c;
  }
  return r;
}

std::vector<int> Poly::variables() const {
  std::set<int> s;
  for (const auto& [m, c] : t_) {
    if (m.first >= 0) s.insert(m.first);
    if (m.second >= 0) s.insert(m.second);
  }
  return {s.begin(), s.end()};
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  auto name = [&names](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
  };
  std::string s;
  // Quadratic terms first, then linear, then the constant.
  std::vector<std::pair<Monomial, Rational>> ordered;
  for (int pass = 2; pass >= 0; --pass)
    for (const auto& [m, c] : t_) {
      int deg = (m.first >= 0) + (m.second >= 0);
      if (deg == pass) ordered.emplace_back(m, c);
    }
  for (const auto& [m, c] : ordered) {
    std::string mono;
    if (m.first >= 0) mono = name(m.first) == name(m.second) ? name(m.first) + "^2" : name(m.first) + "*" + name(m.second);
    else if (m.second >= 0) mono = name(m.second);
    Rational a = abs(c);
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    if (mono.empty()) s += to_string(a);
    else if (a == 1) s += mono;
    else s += to_string(a) + "*" + mono;
  }
  return s;
}

}  // namespace lieloop
