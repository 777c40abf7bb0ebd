#include "lieloop/catalog.hpp"
#include "lieloop/checks.hpp"
#include "lieloop/expr.hpp"
#include "lieloop/loops.hpp"
#include "lieloop/reproduce.hpp"
#include "lieloop/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace lieloop;
using json = nlohmann::ordered_json;

struct Config {
  std::string command;
  std::string algebra;
  std::string prop;
  std::uint64_t seed = 42;
  std::size_t samples = 0;  // 0: the suite's default
  double tol = 0;           // 0: the suite's default
  int case_depth = SolverOptions{}.case_depth;
  std::string format = "text";
  std::string out;
  bool details = false;
  bool witness_table = false;
  std::string table;
  std::vector<std::string> elements;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path " + cfg.out);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + cfg.out);
}

std::string render(const Config& cfg, const std::vector<Record>& rs) {
  if (cfg.format == "json") {
    json doc;
    doc["command"] = cfg.command;
    doc["seed"] = cfg.seed;
    const auto body = to_json(rs);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    return doc.dump(2) + "\n";
  }
  return to_text(rs, cfg.details);
}

std::vector<std::string> props_for(const std::string& sel) {
  if (sel.empty() || sel == "all") return proposition_ids();
  expected_outcomes(sel);  // validates the selector
  return {sel};
}

std::vector<Record> run_props(const Config& cfg) {
  ReproduceOptions opt;
  opt.seed = cfg.seed;
  if (cfg.samples) opt.samples = cfg.samples;
  opt.solver.case_depth = cfg.case_depth;
  if (!cfg.algebra.empty()) load_algebra(cfg.algebra);
  std::vector<Record> out;
  for (const auto& p : props_for(cfg.prop))
    for (auto& r : reproduce(p, opt))
      if (cfg.algebra.empty() || r.case_id.rfind(cfg.algebra + ".", 0) == 0) out.push_back(std::move(r));
  return out;
}

WitnessOptions witness_options(const Config& cfg) {
  WitnessOptions opt;
  opt.seed = cfg.seed;
  if (cfg.samples) opt.samples = cfg.samples;
  if (cfg.tol > 0) opt.tol = cfg.tol;
  return opt;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Record> run_witnesses(const Config& cfg) {
  auto opt = witness_options(cfg);
  if (cfg.table.empty()) return verify_all_witnesses(opt);
  std::vector<Record> out;
  for (const auto& w : parse_witnesses(read_file(cfg.table))) out.push_back(verify_witness(w, opt));
  return out;
}

std::vector<Record> run_classify(const Config& cfg) {
  if (cfg.elements.empty()) {
    auto rs = verify_classifications();
    if (cfg.algebra.empty()) return rs;
    load_algebra(cfg.algebra);
    std::vector<Record> out;
    for (auto& r : rs)
      if (r.case_id.rfind(cfg.algebra + ":", 0) == 0) out.push_back(std::move(r));
    return out;
  }
  if (cfg.algebra.empty()) throw std::invalid_argument("classify: --algebra is required with elements");
  const auto& alg = load_algebra(cfg.algebra);
  ExprEnv env;
  env.algebra = &alg;
  std::vector<Record> out;
  for (const auto& e : cfg.elements) {
    auto x = eval_vector(e, env);
    auto c = alg.classify(x);
    Record r;
    r.suite = "classify";
    r.case_id = alg.name() + ": " + e;
    r.verdict = to_string(c.kind);
    r.expected = "-";
    r.details["killing"] = to_string(c.killing_value);
    r.details["coordinates"] = alg.format(x);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> run_exp(const Config& cfg) {
  ExpCheckOptions opt;
  opt.seed = cfg.seed;
  if (cfg.samples) opt.samples = cfg.samples;
  if (cfg.tol > 0) opt.tol = cfg.tol;
  return verify_exponentials(opt);
}

std::vector<Record> run_loops(const Config& cfg) {
  LoopOptions opt;
  opt.seed = cfg.seed;
  if (cfg.samples) opt.samples = cfg.samples;
  if (cfg.tol > 0) opt.tol = cfg.tol;
  return verify_loops(opt);
}

std::vector<Record> run_lemma(const Config& cfg) { return verify_dimension_bounds(cfg.seed, cfg.samples ? cfg.samples : 100); }

std::vector<Record> run_report_all(const Config& cfg) {
  Config base = cfg;
  base.samples = 0;
  base.tol = 0;
  base.prop.clear();
  base.algebra.clear();
  std::vector<Record> out;
  auto add = [&](std::vector<Record> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  add(verify_catalog());
  add(verify_classifications());
  add(run_props(base));
  add(run_witnesses(base));
  add(run_exp(base));
  add(run_loops(base));
  add(run_lemma(base));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string run_list(const Config& cfg) {
  json doc = json::array();
  std::ostringstream os;
  if (!cfg.algebra.empty()) {
    const auto& alg = load_algebra(cfg.algebra);
    const auto& subs = subalgebras(alg.name());
    os << alg.name() << ": " << subs.size() << " subalgebras\n";
    for (const auto& s : subs) {
      os << s.id << " params(" << join(s.params.names, ",") << ")";
      if (!s.params.conditions.empty()) os << " where " << join(s.params.conditions, "; ");
      os << " <" << join(s.basis, ", ") << ">\n";
      doc.push_back({{"id", s.id}, {"params", s.params.names}, {"conditions", s.params.conditions}, {"basis", s.basis}});
    }
  } else if (!cfg.prop.empty()) {
    for (const auto& o : expected_outcomes(cfg.prop)) {
      os << o.prop << " " << o.subalgebra_id << " [" << o.case_label << "] " << to_string(o.verdict) << "\n";
      doc.push_back({{"prop", o.prop}, {"subalgebra", o.subalgebra_id}, {"case", o.case_label},
                     {"verdict", to_string(o.verdict)}});
    }
  } else {
    for (const auto& n : algebra_names()) {
      const auto& alg = load_algebra(n);
      os << "algebra " << n << " dim " << alg.dim() << " subalgebras " << subalgebras(n).size() << "\n";
      doc.push_back({{"algebra", n}, {"dim", alg.dim()}, {"subalgebras", subalgebras(n).size()}});
    }
    for (const auto& p : proposition_ids()) {
      os << "proposition " << p << " outcomes " << expected_outcomes(p).size() << "\n";
      doc.push_back({{"proposition", p}, {"outcomes", expected_outcomes(p).size()}});
    }
  }
  return cfg.format == "json" ? doc.dump(2) + "\n" : os.str();
}

std::string run_dump(const Config& cfg) {
  if (cfg.witness_table) return dump_witnesses(conjugacy_witnesses());
  if (!cfg.algebra.empty()) return load_algebra(cfg.algebra).to_text();
  return dump_catalog();
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Reductive complement classification and loop checks"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool sampled) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write the report to this path instead of stdout");
    sub->add_flag("--details", cfg.details, "Include record details in text output");
    sub->add_option("--seed", cfg.seed, "Seed for all sampled rationals and floats");
    if (sampled) {
      sub->add_option("--samples", cfg.samples, "Samples per check (0: suite default)");
      sub->add_option("--tol", cfg.tol, "Float tolerance (0: suite default)")->check(CLI::NonNegativeNumber);
    }
  };

  auto* list = app.add_subcommand("list", "List algebras, subalgebras of an algebra, or outcomes of a proposition");
  list->add_option("--algebra", cfg.algebra, "Algebra name");
  list->add_option("--prop", cfg.prop, "Proposition id");
  list->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  list->add_option("--out", cfg.out, "Output path");

  auto* dump = app.add_subcommand("dump", "Dump the catalog, one structure table, or the witness table");
  dump->add_option("--algebra", cfg.algebra, "Dump only this algebra's structure constants");
  dump->add_flag("--witnesses", cfg.witness_table, "Dump the conjugacy witness table");
  dump->add_option("--out", cfg.out, "Output path");

  auto* prop = app.add_subcommand("verify-prop", "Reproduce proposition verdicts");
  prop->add_option("prop,--prop", cfg.prop, "Proposition id or 'all'");
  prop->add_option("--algebra", cfg.algebra, "Restrict to one algebra");
  prop->add_option("--case-depth", cfg.case_depth, "Solver case-split depth")->check(CLI::PositiveNumber);
  common(prop, false);
  prop->add_option("--samples", cfg.samples, "Parameter samples per outcome (0: default)");

  auto* wit = app.add_subcommand("verify-witnesses", "Check conjugating matrices and exponential identities");
  wit->add_option("--table", cfg.table, "Verify the witnesses in this table file instead of the built-in ones");
  common(wit, true);

  auto* cls = app.add_subcommand("classify", "Check asserted Killing classes, or classify given elements");
  cls->add_option("--algebra", cfg.algebra, "Algebra name");
  cls->add_option("elements", cfg.elements, "Element expressions in the algebra's basis");
  common(cls, false);

  auto* ex = app.add_subcommand("exp-check", "Closed-form exponential against the series oracle");
  common(ex, true);

  auto* loop = app.add_subcommand("loop-check", "Loop axioms, left A, Bol and Bruck checks");
  common(loop, true);

  auto* cat = app.add_subcommand("check-catalog", "Jacobi, antisymmetry and table-versus-matrix checks");
  common(cat, false);

  auto* lem = app.add_subcommand("check-lemma", "Intersection-dimension bounds on random subspaces");
  common(lem, false);
  lem->add_option("--samples", cfg.samples, "Subspaces per dimension (0: 100)");

  auto* all = app.add_subcommand("report-all", "Every suite with default sample counts");
  all->add_option("--case-depth", cfg.case_depth, "Solver case-split depth")->check(CLI::PositiveNumber);
  common(all, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "list") {
      emit(cfg, run_list(cfg));
      return 0;
    }
    if (cfg.command == "dump") {
      emit(cfg, run_dump(cfg));
      return 0;
    }
    std::vector<Record> rs;
    if (cfg.command == "verify-prop") rs = run_props(cfg);
    else if (cfg.command == "verify-witnesses") rs = run_witnesses(cfg);
    else if (cfg.command == "classify") rs = run_classify(cfg);
    else if (cfg.command == "exp-check") rs = run_exp(cfg);
    else if (cfg.command == "loop-check") rs = run_loops(cfg);
    else if (cfg.command == "check-catalog") rs = verify_catalog();
    else if (cfg.command == "check-lemma") rs = run_lemma(cfg);
    else rs = run_report_all(cfg);
    if (rs.empty()) throw std::invalid_argument("selection matched no checks");
    emit(cfg, render(cfg, rs));
    return exit_status(rs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
