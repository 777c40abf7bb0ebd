#include "lieloop/reproduce.hpp"

#include <stdexcept>

namespace lieloop {

using json = nlohmann::ordered_json;

std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a 64
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<RVec> family_coordinates(const LieAlgebra& alg, const std::vector<RVec>& h, const ParamFamily& fam,
                                       const std::vector<RVec>& m) {
  const std::size_t n = alg.dim(), s = m.size(), r = h.size(), np = fam.params.size();
  if (s + r != n || fam.generators.size() != s) throw std::invalid_argument("family_coordinates: dimension mismatch");
  std::vector<RVec> cols = m;
  cols.insert(cols.end(), h.begin(), h.end());
  auto binv = inverse(RMat::from_cols(cols, n));
  if (!binv) throw std::invalid_argument("family_coordinates: m is not complementary to h");
  // h-coordinates of X_j(theta) must vanish for every generator j.
  RMat a(s * r, np);
  RVec rhs = zeros(s * r);
  for (std::size_t j = 0; j < s; ++j) {
    RVec c0 = (*binv) * fam.generators[j].constant;
    for (std::size_t k = 0; k < r; ++k) rhs[j * r + k] = -c0[s + k];
    for (std::size_t p = 0; p < np; ++p) {
      auto it = fam.generators[j].coeff.find(fam.params[p]);
      if (it == fam.generators[j].coeff.end()) continue;
      RVec cp = (*binv) * it->second;
      for (std::size_t k = 0; k < r; ++k) a(j * r + k, p) = cp[s + k];
    }
  }
  auto theta = np ? solve(a, rhs) : (is_zero(rhs) ? std::optional<RVec>(RVec{}) : std::nullopt);
  if (!theta) return std::nullopt;
  if (!(Subspace(alg, fam.at(*theta)) == Subspace(alg, m))) return std::nullopt;
  return theta;
}

namespace {

json values_json(const std::map<std::string, Rational>& v) {
  json j = json::object();
  for (const auto& [k, x] : v) j[k] = to_string(x);
  return j;
}

bool generates(const LieAlgebra& alg, const std::vector<RVec>& m) {
  return lie_closure(Subspace(alg, m)).dim() == alg.dim();
}

RVec random_vec(Sampler& smp, std::size_t n) {
  RVec t(n);
  for (auto& x : t) x = smp.draw();
  return t;
}

AffineComponent hull(const std::vector<RVec>& pts) {
  AffineComponent c;
  c.point = pts.front();
  std::vector<RVec> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts.front()));
  c.directions = row_reduce(d, c.point.size());
  return c;
}

struct SampleEval {
  Expect found = Expect::Unknown;
  std::vector<std::string> problems;
  json detail = json::object();
};

json witness_json(const LieAlgebra& alg, const Witness& w) {
  return {{"h_element", alg.format(w.h_element)},
          {"m_generator", alg.format(w.m_generator)},
          {"bracket", alg.format(w.bracket)},
          {"h_component", alg.format(w.h_component)}};
}

void check_paper_witness(const ExpectedOutcome& o, const LieAlgebra& alg, const std::vector<RVec>& h,
                         const std::vector<RVec>& m0, SampleEval& ev) {
  ExprEnv env;
  env.algebra = &alg;
  RVec w = eval_vector(o.witness_h, env);
  std::size_t k = o.witness_generator;
  if (k == 0 || k > m0.size()) throw std::logic_error(o.subalgebra_id + ": witness generator index out of range");
  RVec b = alg.bracket(w, m0[k - 1]);
  std::vector<RVec> cols = m0;
  cols.insert(cols.end(), h.begin(), h.end());
  auto c = solve(RMat::from_cols(cols, alg.dim()), b);
  RVec hc = zeros(alg.dim());
  for (std::size_t i = 0; i < h.size(); ++i) axpy(hc, (*c)[m0.size() + i], h[i]);
  ev.detail["paper_witness"] = {{"h_element", alg.format(w)},
                                {"m_generator", "X" + std::to_string(k) + " = " + alg.format(m0[k - 1])},
                                {"bracket", alg.format(b)},
                                {"h_component", alg.format(hc)}};
  if (!Subspace(alg, h).contains(w)) ev.problems.push_back("paper witness " + o.witness_h + " is not in h");
  if (is_zero(hc)) ev.problems.push_back("paper witness bracket has no h-component");
}

void check_families(const ExpectedOutcome& o, const LieAlgebra& alg, const std::vector<RVec>& h,
                    const std::map<std::string, Rational>& values, const ParamFamily& fam,
                    const std::vector<AffineComponent>& gen, Sampler& smp, SampleEval& ev) {
  std::vector<RVec> all;
  std::vector<AffineComponent> hulls;
  json fams = json::array();
  for (const auto& f : o.families) {
    std::vector<RVec> pts;
    // Generic draws; only points that raise the affine rank are kept. Every draw is verified.
    const std::size_t count = f.params.names.size() + 3;
    std::size_t stall = 0;
    for (std::size_t q = 0; q < 10 * count && pts.size() < count && stall < count; ++q) {
      auto p = smp.sample(f.params, {}, values, false);
      ExprEnv env;
      env.algebra = &alg;
      env.params = values;
      env.params.insert(p.begin(), p.end());
      std::vector<RVec> m;
      for (const auto& g : f.generators) m.push_back(eval_vector(g, env));
      std::string at = f.label + " at " + values_json(env.params).dump();
      PairVerdict pv;
      try {
        pv = verify_pair(alg, h, m);
      } catch (const std::invalid_argument& e) {
        ev.problems.push_back(at + ": " + e.what());
        continue;
      }
      if (!pv.reductive) ev.problems.push_back(at + ": [h,m] is not contained in m");
      if (!pv.generates) ev.problems.push_back(at + ": m does not generate g");
      auto theta = family_coordinates(alg, h, fam, m);
      if (!theta) {
        ev.problems.push_back(at + ": not of the shape of the proof's complement family");
        continue;
      }
      bool inside = false;
      for (const auto& c : gen) inside = inside || c.contains(*theta);
      if (!inside) ev.problems.push_back(at + ": not found among the solver's generating solutions");
      pts.push_back(*theta);
      if (pts.size() > 1 && hull(pts).dim() + 1 < pts.size()) {
        pts.pop_back();
        ++stall;
      } else {
        stall = 0;
      }
    }
    if (pts.empty()) continue;
    hulls.push_back(hull(pts));
    all.insert(all.end(), pts.begin(), pts.end());
    fams.push_back({{"family", f.label}, {"points", pts.size()}, {"dim", hulls.back().dim()}});
  }
  ev.detail["expected_families"] = fams;
  if (all.empty()) return;
  AffineComponent joint = hull(all);
  bool exact = true;
  for (const auto& c : gen) {
    if (!joint.contains(c))
      ev.problems.push_back("solver component " + c.str(fam.params) + " is not covered by the listed families");
    bool one = false;
    for (const auto& hf : hulls) one = one || (hf.contains(c) && c.contains(hf));
    exact = exact && one;
  }
  ev.detail["coverage"] = exact ? "exact" : "spanned";
}

SampleEval evaluate(const ExpectedOutcome& o, const SubalgebraSpec& spec, const LieAlgebra& alg, Sampler& smp,
                    const ReproduceOptions& opt) {
  SampleEval ev;
  auto values = smp.sample(spec.params, o.regime);
  ev.detail["params"] = values_json(values);
  auto h = spec.instantiate(values);
  if (!is_subalgebra(Subspace(alg, h)))
    throw std::logic_error(spec.id + " is not a subalgebra at " + ev.detail["params"].dump());
  auto fam = complement_family(spec.id, values);
  auto sys = constraints(alg, h, fam);
  auto sol = solve_family(sys, opt.solver);
  ev.detail["family_params"] = fam.params.size();
  ev.detail["equations"] = sys.equations.size();
  ev.detail["solver"] = to_string(sol.status);
  ev.detail["branches"] = sol.branches;

  std::vector<AffineComponent> gen;
  json comps = json::array();
  for (const auto& c : sol.components) {
    for (int k = 0; k < 5; ++k) {
      auto pv = verify_pair(alg, h, fam.at(c.sample(random_vec(smp, c.dim()))));
      if (!pv.reductive) {
        ev.problems.push_back("unsound solver component " + c.str(fam.params));
        break;
      }
    }
    bool g = false;
    for (int k = 0; k < 2 && !g; ++k) g = generates(alg, fam.at(c.sample(random_vec(smp, c.dim()))));
    comps.push_back({{"solution", c.str(fam.params)}, {"dim", c.dim()}, {"generates", g}});
    if (g) gen.push_back(c);
  }
  ev.detail["components"] = comps;

  if (sol.status == SolveStatus::Unknown) {
    ev.found = Expect::Unknown;
    ev.detail["residuals"] = sol.residuals;
  } else {
    ev.found = gen.empty() ? Expect::NotReductive : Expect::Reductive;
  }

  if (ev.found == Expect::NotReductive) {
    auto m0 = fam.at_zero();
    auto pv = verify_pair(alg, h, m0);
    if (pv.witness) ev.detail["witness"] = witness_json(alg, *pv.witness);
    if (sol.status == SolveStatus::Solved) ev.detail["reason"] = "reductive complements exist but none generates g";
    if (!o.witness_h.empty()) check_paper_witness(o, alg, h, m0, ev);
  }
  if (o.verdict == Expect::Reductive && ev.found == Expect::Reductive)
    check_families(o, alg, h, values, fam, gen, smp, ev);
  return ev;
}

}  // namespace

std::vector<Record> reproduce(const std::string& prop, const ReproduceOptions& opt) {
  std::vector<Record> out;
  for (const auto& o : expected_outcomes(prop)) {
    const auto& spec = subalgebra(o.subalgebra_id);
    const auto& alg = load_algebra(spec.algebra);
    Sampler smp(opt.seed ^ stable_hash(o.prop + "/" + o.subalgebra_id + "/" + o.case_label));
    Record r;
    r.suite = prop;
    r.case_id = o.subalgebra_id + (o.case_label == spec.label ? "" : " [" + o.case_label + "]");
    r.expected = to_string(o.verdict);
    r.details["citation"] = o.citation;
    if (!o.regime.empty()) r.details["regime"] = o.regime;
    std::vector<std::string> problems;
    std::vector<Expect> found;
    json samples = json::array();
    const std::size_t n = spec.params.empty() && o.families.empty() ? 1 : std::max<std::size_t>(1, opt.samples);
    for (std::size_t s = 0; s < n; ++s) {
      SampleEval ev = evaluate(o, spec, alg, smp, opt);
      found.push_back(ev.found);
      problems.insert(problems.end(), ev.problems.begin(), ev.problems.end());
      samples.push_back(ev.detail);
    }
    bool uniform = true;
    for (auto f : found) uniform = uniform && f == found.front();
    if (o.verdict == Expect::Unknown) {
      // The paper states no verdict here; report it as such and keep the solver's findings.
      r.verdict = "Unknown";
      r.match = problems.empty() ? MatchState::Match : MatchState::Mismatch;
      r.details["note"] = o.note;
      std::vector<std::string> solver_found;
      for (auto f : found) solver_found.push_back(to_string(f));
      r.details["solver_found"] = solver_found;
    } else if (!uniform) {
      r.verdict = "Mixed";
      r.match = MatchState::Mismatch;
      problems.push_back("verdict differs between parameter samples");
    } else {
      r.verdict = to_string(found.front());
      if (found.front() == Expect::Unknown) r.match = MatchState::Unknown;
      else if (found.front() != o.verdict || !problems.empty()) r.match = MatchState::Mismatch;
    }
    if (!problems.empty()) r.details["problems"] = problems;
    r.details["samples"] = samples;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lieloop
