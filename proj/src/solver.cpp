#include "lieloop/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lieloop {

std::vector<RVec> ParamFamily::at(const RVec& values) const {
  if (values.size() != params.size()) throw std::invalid_argument("family parameter count mismatch");
  std::vector<RVec> out;
  for (const auto& g : generators) {
    RVec v = g.constant;
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto it = g.coeff.find(params[i]);
      if (it != g.coeff.end()) axpy(v, values[i], it->second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool PolySystem::vanishes_at(const RVec& x) const {
  for (const auto& e : equations)
    if (e.eval(x) != 0) return false;
  return true;
}

std::string PolySystem::str() const {
  std::string s;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    s += equations[i].str(params) + " = 0";
    if (i < provenance.size()) s += "    # " + provenance[i];
    s += "\n";
  }
  return s;
}

PolySystem constraints(const LieAlgebra& alg, const std::vector<RVec>& hbasis, const ParamFamily& family) {
  const std::size_t n = alg.dim(), r = hbasis.size(), s = family.generators.size();
  if (r + s != n) throw std::invalid_argument("family size plus subalgebra dimension must equal dim g");
  std::vector<RVec> cols;
  for (const auto& g : family.generators) cols.push_back(g.constant);
  for (const auto& h : hbasis) cols.push_back(h);
  auto binv = inverse(RMat::from_cols(cols, n));
  if (!binv) throw std::invalid_argument("family " + family.label + " is not complementary at zero parameters");

  const std::size_t np = family.params.size();
  // h-coordinates of every direction d_{j,p}
  std::vector<std::vector<RVec>> dir(s, std::vector<RVec>(np));
  std::vector<std::vector<bool>> has_dir(s, std::vector<bool>(np, false));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t p = 0; p < np; ++p) {
      auto it = family.generators[j].coeff.find(family.params[p]);
      if (it == family.generators[j].coeff.end() || is_zero(it->second)) continue;
      RVec c = (*binv) * it->second;
      for (std::size_t l = 0; l < s; ++l)
        if (c[l] != 0)
          throw std::invalid_argument("direction of " + family.params[p] + " in " + family.label + " leaves h");
      dir[j][p] = RVec(c.begin() + s, c.end());
      has_dir[j][p] = true;
    }

  PolySystem sys;
  sys.params = family.params;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < s; ++j) {
      // Coordinates of [h_a, X_j(p)] in the basis (f, h), affine in p.
      std::vector<Poly> coord(n);
      RVec c0 = (*binv) * alg.bracket(hbasis[a], family.generators[j].constant);
      for (std::size_t k = 0; k < n; ++k) coord[k] = Poly::constant(c0[k]);
      for (std::size_t p = 0; p < np; ++p) {
        auto it = family.generators[j].coeff.find(family.params[p]);
        if (it == family.generators[j].coeff.end()) continue;
        RVec cp = (*binv) * alg.bracket(hbasis[a], it->second);
        for (std::size_t k = 0; k < n; ++k) coord[k] = coord[k] + Poly::variable(static_cast<int>(p), cp[k]);
      }
      // Subtract the part absorbed by sum_l alpha_l X_l with alpha_l the f-coordinates.
      for (std::size_t m = 0; m < r; ++m) {
        Poly eq = coord[s + m];
        for (std::size_t l = 0; l < s; ++l)
          for (std::size_t p = 0; p < np; ++p)
            if (has_dir[l][p] && dir[l][p][m] != 0)
              eq = eq - coord[l] * Poly::variable(static_cast<int>(p), dir[l][p][m]);
        if (eq.is_zero()) continue;
        sys.equations.push_back(eq);
        sys.provenance.push_back("[" + alg.format(hbasis[a]) + ", " + family.label + std::to_string(j + 1) +
                                 "] h-coordinate " + std::to_string(m + 1));
      }
    }
  return sys;
}

PairVerdict verify_pair(const LieAlgebra& alg, const std::vector<RVec>& h, const std::vector<RVec>& m) {
  Subspace hs(alg, h), ms(alg, m);
  if (hs.dim() != h.size()) throw std::invalid_argument("h generators are dependent");
  if (ms.dim() != m.size()) throw std::invalid_argument("m generators are dependent");
  if (!is_subalgebra(hs)) throw std::invalid_argument("h is not a subalgebra");
  if (!direct_sum(hs, ms)) throw std::invalid_argument("g is not the direct sum of m and h");
  std::vector<RVec> cols = m;
  cols.insert(cols.end(), h.begin(), h.end());
  RMat binv = *inverse(RMat::from_cols(cols, alg.dim()));
  PairVerdict v;
  v.reductive = true;
  for (const auto& x : h) {
    for (const auto& y : m) {
      RVec b = alg.bracket(x, y);
      RVec c = binv * b;
      RVec hc = zeros(alg.dim());
      for (std::size_t k = 0; k < h.size(); ++k) axpy(hc, c[m.size() + k], h[k]);
      if (!is_zero(hc)) {
        v.reductive = false;
        v.witness = Witness{x, y, b, hc};
        break;
      }
    }
    if (!v.reductive) break;
  }
  v.generates = lie_closure(ms).dim() == alg.dim();
  return v;
}

bool AffineComponent::contains(const RVec& x) const {
  std::vector<RVec> span = directions;
  RVec d = sub(x, point);
  if (is_zero(d)) return true;
  if (span.empty()) return false;
  return solve(RMat::from_cols(span, point.size()), d).has_value();
}

bool AffineComponent::contains(const AffineComponent& o) const {
  if (!contains(o.point)) return false;
  for (const auto& d : o.directions) {
    if (directions.empty()) return false;
    if (!solve(RMat::from_cols(directions, point.size()), d)) return false;
  }
  return true;
}

RVec AffineComponent::sample(const RVec& t) const {
  RVec x = point;
  for (std::size_t i = 0; i < directions.size() && i < t.size(); ++i) axpy(x, t[i], directions[i]);
  return x;
}

std::string AffineComponent::str(const std::vector<std::string>& names) const {
  // Render as pinned values and free parameters in the reduced form.
  std::vector<bool> free(point.size(), false);
  std::vector<std::size_t> pivots;
  for (const auto& d : directions) {
    std::size_t p = 0;
    while (d[p] == 0) ++p;
    pivots.push_back(p);
    free[p] = true;
  }
  std::string s;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (free[i]) continue;
    Poly e = Poly::constant(point[i]);
    for (std::size_t k = 0; k < directions.size(); ++k)
      if (directions[k][i] != 0) e = e + Poly::variable(static_cast<int>(pivots[k]), directions[k][i]);
    if (!s.empty()) s += ", ";
    s += names[i] + "=" + e.str(names);
  }
  std::string fr;
  for (std::size_t k = 0; k < pivots.size(); ++k) fr += (k ? "," : "") + names[pivots[k]];
  if (!fr.empty()) s += (s.empty() ? "" : "; ") + std::string("free: ") + fr;
  return s.empty() ? "all parameters free" : s;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Solved: return "Solved";
    case SolveStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct State {
  std::vector<std::optional<Poly>> fixed;
  std::vector<Poly> eqs;
};

struct Ctx {
  std::size_t nvars;
  std::vector<std::size_t> rank;  // position of each variable in name order
  const SolverOptions* opt;
  const std::vector<std::string>* names;
  SolutionSet* out;
  bool unknown = false;
};

Poly reduce(const Poly& p, const State& st) {
  Poly r = p;
  for (int v : p.variables())
    if (st.fixed[v]) r = r.substitute(v, *st.fixed[v]);
  return r;
}

// Eliminates linear equations; returns false on inconsistency.
bool eliminate(State& st, const std::vector<Poly>& lin, const Ctx& ctx) {
  std::vector<int> vars;
  for (const auto& p : lin)
    for (int v : p.variables())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), [&](int a, int b) { return ctx.rank[a] < ctx.rank[b]; });
  RMat m(lin.size(), vars.size() + 1);
  for (std::size_t i = 0; i < lin.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) m(i, j) = lin[i].linear(vars[j]);
    m(i, vars.size()) = lin[i].constant_term();
  }
  auto piv = rref(m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == vars.size()) return false;
    int v = vars[piv[i]];
    Poly e = Poly::constant(-m(i, vars.size()));
    for (std::size_t j = piv[i] + 1; j < vars.size(); ++j)
      if (m(i, j) != 0) e = e + Poly::variable(vars[j], -m(i, j));
    for (auto& f : st.fixed)
      if (f) *f = f->substitute(v, e);
    st.fixed[v] = e;
  }
  return true;
}

// q(x) = sum d_i (l_i . (x,1))^2 over rationals, by symmetric elimination.
struct SquareForm {
  Rational d;
  Poly l;
};

std::vector<SquareForm> diagonalize(const Poly& q) {
  std::vector<int> vs = q.variables();
  const std::size_t k = vs.size();
  auto idx = [&vs](int v) { return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
  RMat a(k + 1, k + 1);
  for (const auto& [m, c] : q.terms()) {
    if (m.first >= 0) {
      std::size_t i = idx(m.first), j = idx(m.second);
      if (i == j) a(i, i) += c;
      else {
        a(i, j) += c / 2;
        a(j, i) += c / 2;
      }
    } else if (m.second >= 0) {
      std::size_t i = idx(m.second);
      a(i, k) += c / 2;
      a(k, i) += c / 2;
    } else {
      a(k, k) += c;
    }
  }
  auto to_poly = [&](const RVec& row) {
    Poly p = Poly::constant(row[k]);
    for (std::size_t i = 0; i < k; ++i) p = p + Poly::variable(vs[i], row[i]);
    return p;
  };
  std::vector<SquareForm> out;
  for (;;) {
    std::size_t pi = k + 1, pj = k + 1;
    for (std::size_t i = 0; i <= k && pi > k; ++i)
      if (a(i, i) != 0) pi = i;
    if (pi <= k) {
      RVec row = a.row(pi);
      Rational d = 1 / a(pi, pi);
      for (std::size_t r = 0; r <= k; ++r)
        for (std::size_t c = 0; c <= k; ++c) a(r, c) -= d * row[r] * row[c];
      out.push_back({d, to_poly(row)});
      continue;
    }
    for (std::size_t i = 0; i <= k && pi > k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi > k) break;
    RVec ri = a.row(pi), rj = a.row(pj);
    Rational aij = a(pi, pj);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c <= k; ++c) a(r, c) -= (ri[r] * rj[c] + rj[r] * ri[c]) / aij;
    out.push_back({1 / (2 * aij), to_poly(add(ri, rj))});
    out.push_back({-1 / (2 * aij), to_poly(sub(ri, rj))});
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

AffineComponent make_component(const State& st, std::size_t n) {
  AffineComponent c;
  c.point = zeros(n);
  std::vector<std::size_t> freev;
  for (std::size_t v = 0; v < n; ++v) {
    if (st.fixed[v]) c.point[v] = st.fixed[v]->constant_term();
    else freev.push_back(v);
  }
  std::vector<RVec> dirs;
  for (auto f : freev) {
    RVec d = zeros(n);
    d[f] = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (st.fixed[v]) d[v] = st.fixed[v]->linear(static_cast<int>(f));
    dirs.push_back(d);
  }
  c.directions = row_reduce(dirs, n);
  for (const auto& d : c.directions) {
    std::size_t p = 0;
    while (d[p] == 0) ++p;
    if (c.point[p] != 0) axpy(c.point, -c.point[p], d);
  }
  return c;
}

void branch(State st, int depth, Ctx& ctx) {
  if (++ctx.out->branches > ctx.opt->branch_budget) {
    ctx.unknown = true;
    ctx.out->residuals.push_back("branch budget exhausted");
    return;
  }
  for (;;) {
    std::vector<Poly> lin, quad;
    for (const auto& e : st.eqs) {
      Poly r = reduce(e, st);
      if (r.is_zero()) continue;
      int deg = r.degree();
      if (deg == 0) return;  // nonzero constant: no solutions
      (deg == 1 ? lin : quad).push_back(r);
    }
    if (!lin.empty()) {
      if (!eliminate(st, lin, ctx)) return;
      st.eqs = quad;
      continue;
    }
    if (quad.empty()) {
      ctx.out->components.push_back(make_component(st, ctx.nvars));
      return;
    }
    // Row-reduce in monomial space, quadratic monomials first.
    std::vector<Monomial> monos;
    for (const auto& q : quad)
      for (const auto& [m, c] : q.terms())
        if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
    auto key = [&ctx](const Monomial& m) {
      int deg = (m.first >= 0) + (m.second >= 0);
      std::size_t a = m.first >= 0 ? ctx.rank[m.first] : 0, b = m.second >= 0 ? ctx.rank[m.second] : 0;
      return std::make_tuple(-deg, a, b);
    };
    std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return key(x) < key(y); });
    RMat mm(quad.size(), monos.size());
    for (std::size_t i = 0; i < quad.size(); ++i)
      for (std::size_t j = 0; j < monos.size(); ++j) {
        auto it = quad[i].terms().find(monos[j]);
        if (it != quad[i].terms().end()) mm(i, j) = it->second;
      }
    auto piv = rref(mm);
    std::vector<Poly> reduced;
    bool got_linear = false;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      Poly p;
      for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], mm(i, j));
      if (p.degree() < 2) got_linear = true;
      reduced.push_back(p);
    }
    st.eqs = reduced;
    if (got_linear) continue;

    // Decompose quadratics into signed squares.
    bool progressed = false;
    for (const auto& q : reduced) {
      auto forms = diagonalize(q);
      int pos = 0, neg = 0;
      for (const auto& f : forms) (f.d > 0 ? pos : neg)++;
      if (pos == 0 || neg == 0) {
        for (const auto& f : forms) st.eqs.push_back(f.l);
        progressed = true;
        break;
      }
      if (pos == 1 && neg == 1) {
        const SquareForm& p = forms[0].d > 0 ? forms[0] : forms[1];
        const SquareForm& n = forms[0].d > 0 ? forms[1] : forms[0];
        auto s = rational_sqrt(-n.d / p.d);
        if (!s) continue;
        if (depth >= ctx.opt->case_depth) {
          ctx.unknown = true;
          ctx.out->residuals.push_back("case depth exceeded");
          return;
        }
        for (int sgn : {1, -1}) {
          State child = st;
          child.eqs.push_back(p.l - n.l * (*s * sgn));
          branch(child, depth + 1, ctx);
        }
        return;
      }
    }
    if (progressed) continue;
    ctx.unknown = true;
    std::string res;
    for (const auto& q : reduced) res += q.str(*ctx.names) + " = 0; ";
    ctx.out->residuals.push_back(res);
    return;
  }
}

}  // namespace

SolutionSet solve_family(const PolySystem& sys, const SolverOptions& opt) {
  SolutionSet out;
  const std::size_t n = sys.params.size();
  for (const auto& e : sys.equations)
    if (e.degree() > 2) throw std::invalid_argument("equation of degree > 2");
  if (n > opt.param_budget) {
    out.status = SolveStatus::Unknown;
    out.residuals.push_back("parameter budget exceeded");
    return out;
  }
  Ctx ctx;
  ctx.nvars = n;
  ctx.opt = &opt;
  ctx.names = &sys.params;
  ctx.out = &out;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sys.params[a] < sys.params[b]; });
  ctx.rank.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) ctx.rank[order[i]] = i;

  State st;
  st.fixed.assign(n, std::nullopt);
  st.eqs = sys.equations;
  branch(st, 0, ctx);

  // Canonical, deduplicated, without components contained in others.
  std::vector<AffineComponent> kept;
  for (const auto& c : out.components) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.contains(c)) redundant = true;
    if (redundant) continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(), [&](const AffineComponent& k) { return c.contains(k); }),
               kept.end());
    kept.push_back(c);
  }
  out.components = kept;
  if (ctx.unknown) out.status = SolveStatus::Unknown;
  else out.status = out.components.empty() ? SolveStatus::Unsat : SolveStatus::Solved;
  return out;
}

}  // namespace lieloop
