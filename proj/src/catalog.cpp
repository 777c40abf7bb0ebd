#include "lieloop/catalog.hpp"

#include "lieloop/algebras.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieloop {

std::string to_string(Expect e) {
  switch (e) {
    case Expect::Reductive: return "Reductive";
    case Expect::NotReductive: return "NotReductive";
    case Expect::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

const std::vector<std::string> kAlgebras = {"sl2R", "so3", "sl2C", "sl3R", "su21", "sl2_plus_sl2", "sl2_plus_so3"};

const std::map<std::string, std::unique_ptr<LieAlgebra>>& registry() {
  static const auto reg = [] {
    std::map<std::string, std::unique_ptr<LieAlgebra>> r;
    for (const auto& n : kAlgebras) r[n] = std::make_unique<LieAlgebra>(build_algebra(n));
    return r;
  }();
  return reg;
}

const CatalogData& data() {
  static const CatalogData all = [] {
    CatalogData d;
    for (auto part : {detail::sl2c_data(), detail::sl3r_data(), detail::su21_data(), detail::sl2g2_data()}) {
      d.subalgebras.insert(d.subalgebras.end(), part.subalgebras.begin(), part.subalgebras.end());
      d.families.insert(d.families.end(), part.families.begin(), part.families.end());
      d.outcomes.insert(d.outcomes.end(), part.outcomes.begin(), part.outcomes.end());
    }
    return d;
  }();
  return all;
}

const std::vector<std::string> kProps = {"Prop3", "Prop4", "Prop5", "Prop6", "Prop7",
                                         "Prop8", "Prop9", "Prop10", "Prop11", "Prop16"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(' ');
  auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

bool conditions_hold(const std::vector<std::string>& conds, const ExprEnv& env) {
  for (const auto& c : conds)
    if (!Condition::parse(c).holds(env)) return false;
  return true;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
  return r;
}

}  // namespace

const LieAlgebra& load_algebra(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown algebra: " + name);
  return *it->second;
}

std::vector<std::string> algebra_names() { return kAlgebras; }

std::vector<RVec> SubalgebraSpec::instantiate(const std::map<std::string, Rational>& values) const {
  ExprEnv env;
  env.algebra = &load_algebra(algebra);
  env.params = values;
  for (const auto& p : params.names)
    if (!values.count(p)) throw std::invalid_argument(id + ": missing value for parameter " + p);
  std::vector<RVec> out;
  for (const auto& b : basis) out.push_back(eval_vector(b, env));
  return out;
}

const std::vector<SubalgebraSpec>& subalgebras(const std::string& algebra) {
  static const auto by_alg = [] {
    std::map<std::string, std::vector<SubalgebraSpec>> m;
    for (const auto& n : kAlgebras) m[n];
    for (const auto& s : data().subalgebras) m[s.algebra].push_back(s);
    return m;
  }();
  auto it = by_alg.find(algebra);
  if (it == by_alg.end()) throw std::invalid_argument("unknown algebra: " + algebra);
  return it->second;
}

const SubalgebraSpec& subalgebra(const std::string& id) {
  for (const auto& s : data().subalgebras)
    if (s.id == id) return s;
  throw std::invalid_argument("unknown subalgebra id: " + id);
}

const FamilySpec& family_spec(const std::string& subalgebra_id, const std::map<std::string, Rational>& values) {
  const auto& spec = subalgebra(subalgebra_id);
  ExprEnv env;
  env.algebra = &load_algebra(spec.algebra);
  env.params = values;
  bool any = false;
  for (const auto& f : data().families) {
    if (f.subalgebra_id != subalgebra_id) continue;
    any = true;
    if (f.applies_when.empty() || conditions_hold(f.applies_when, env)) return f;
  }
  throw std::invalid_argument(any ? subalgebra_id + ": no listed family applies at these parameters"
                                  : subalgebra_id + " has no listed complement family");
}

ParamFamily complement_family(const std::string& subalgebra_id, const std::map<std::string, Rational>& values) {
  const auto& f = family_spec(subalgebra_id, values);
  return make_family(load_algebra(f.algebra), f.symbol, f.generators, values);
}

ParamFamily make_family(const LieAlgebra& alg, const std::string& label, const std::vector<std::string>& generators,
                        const std::map<std::string, Rational>& values, const std::map<std::string, Value>& named) {
  ExprEnv env;
  env.algebra = &alg;
  env.params = values;
  env.named = named;
  ParamFamily fam;
  fam.label = label;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    LinearVector lv = eval_linear_vector(g, env);
    for (const auto& [s, v] : lv.coeff)
      if (seen.insert(s).second) fam.params.push_back(s);
    fam.generators.push_back(std::move(lv));
  }
  return fam;
}

std::vector<std::string> proposition_ids() { return kProps; }

std::vector<ExpectedOutcome> expected_outcomes(const std::string& prop) {
  if (std::find(kProps.begin(), kProps.end(), prop) == kProps.end())
    throw std::invalid_argument("unknown proposition: " + prop);
  std::vector<ExpectedOutcome> out;
  for (const auto& o : data().outcomes)
    if (o.prop == prop) out.push_back(o);
  return out;
}

Rational Sampler::draw() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Rational r(num(rng_), den(rng_));
  r.canonicalize();
  return r;
}

Rational Sampler::draw_nonzero() {
  for (;;) {
    Rational r = draw();
    if (r != 0) return r;
  }
}

std::map<std::string, Rational> Sampler::sample(const ParamSlots& slots, const std::vector<std::string>& extra,
                                                const std::map<std::string, Rational>& fixed, bool favor_zero) {
  std::vector<std::string> conds = slots.conditions;
  conds.insert(conds.end(), extra.begin(), extra.end());
  std::vector<std::pair<std::string, std::string>> assigns;
  std::vector<Condition> checks;
  for (const auto& c : conds) {
    Condition cond = Condition::parse(c);
    std::string lhs = trim(cond.lhs);
    bool is_slot = std::find(slots.names.begin(), slots.names.end(), lhs) != slots.names.end();
    if (cond.op == "=" && is_slot) assigns.emplace_back(lhs, cond.rhs);
    else checks.push_back(cond);
  }
  for (int attempt = 0; attempt < 2000; ++attempt) {
    ExprEnv env;
    env.params = fixed;
    std::map<std::string, Rational> out;
    for (const auto& n : slots.names) {
      bool assigned = std::any_of(assigns.begin(), assigns.end(), [&](const auto& a) { return a.first == n; });
      if (assigned) continue;
      // Zero and small values hit the special loci the propositions split on; draw them often.
      out[n] = (favor_zero && rng_() % 5 == 0) ? Rational(0) : draw();
      env.params[n] = out[n];
    }
    bool ok = true;
    try {
      for (const auto& [n, expr] : assigns) {
        out[n] = eval_rational(expr, env);
        env.params[n] = out[n];
      }
      for (const auto& c : checks)
        if (!c.holds(env)) {
          ok = false;
          break;
        }
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (ok) return out;
  }
  throw std::runtime_error("sampler: could not satisfy conditions {" + join(conds, ", ") + "}");
}

namespace detail {

std::vector<std::string> grid(const std::vector<std::string>& fixed, const std::vector<std::string>& dirs,
                              const std::string& letters, bool row_mode) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < fixed.size(); ++j) {
    std::string g = fixed[j];
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      char letter = row_mode ? letters.at(j) : letters.at(k);
      std::size_t index = row_mode ? k + 1 : j + 1;
      g += "+" + std::string(1, letter) + std::to_string(index) + "(" + dirs[k] + ")";
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace detail

std::string dump_catalog() {
  std::ostringstream os;
  for (const auto& n : kAlgebras) {
    os << "[algebra]\n" << load_algebra(n).to_text();
    for (const auto& s : subalgebras(n)) {
      os << "subalgebra " << s.id << " params(" << join(s.params.names, ",") << ")";
      if (!s.params.conditions.empty()) os << " where " << join(s.params.conditions, "; ");
      os << " basis <" << join(s.basis, ", ") << ">";
      if (!s.note.empty()) os << " note: " << s.note;
      os << "\n";
    }
    for (const auto& f : data().families) {
      if (f.algebra != n) continue;
      os << "family " << f.subalgebra_id;
      if (!f.applies_when.empty()) os << " when " << join(f.applies_when, "; ");
      os << " generators <" << join(f.generators, ", ") << ">\n";
    }
  }
  for (const auto& p : kProps)
    for (const auto& o : expected_outcomes(p)) {
      os << "outcome " << o.prop << " " << o.subalgebra_id << " [" << o.case_label << "] " << to_string(o.verdict);
      if (!o.regime.empty()) os << " when " << join(o.regime, "; ");
      for (const auto& f : o.families) {
        os << " " << f.label << "(" << join(f.params.names, ",") << ")=<" << join(f.generators, ", ") << ">";
      }
      if (!o.witness_h.empty()) os << " witness [" << o.witness_h << ", X" << o.witness_generator << "]";
      os << " cite: " << o.citation;
      if (!o.note.empty()) os << " note: " << o.note;
      os << "\n";
    }
  return os.str();
}

}  // namespace lieloop
