// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include "lieloop/catalog.hpp"
#include "lieloop/checks.hpp"
#include "lieloop/loops.hpp"
#include "lieloop/reproduce.hpp"
#include "lieloop/witnesses.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lieloop;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

void require_match(Outcome& o, const std::vector<Record>& rs) {
  for (const auto& r : rs)
    if (r.match != MatchState::Match) o.fail(r.suite + " " + r.case_id + ": " + to_string(r.match));
}

std::set<std::string> reductive_ids(const std::vector<Record>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs)
    if (r.verdict == "Reductive") out.insert(r.case_id.substr(0, r.case_id.find(' ')));
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

Outcome criterion_catalog() {
  Outcome o;
  auto rs = verify_catalog();
  require_match(o, rs);
  std::size_t tables = 0;
  for (const auto& r : rs) tables += r.case_id.find("transcribed table") != std::string::npos;
  if (algebra_names().size() != 7) o.fail("expected 7 algebras");
  if (tables != 3) o.fail("expected table checks for sl2R, sl3R, su21");
  o.note(std::to_string(rs.size()) + " checks");
  return o;
}

Outcome criterion_propositions() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& p : {"Prop3", "Prop4", "Prop5", "Prop6", "Prop7", "Prop8", "Prop9", "Prop10", "Prop11", "Prop16"}) {
    auto rs = reproduce(p);
    rows += rs.size();
    require_match(o, rs);
    std::string pid = p;
    if (pid == "Prop4" && reductive_ids(rs) != std::set<std::string>{"sl3R.h5"}) o.fail("Prop4 reductive set " + join(reductive_ids(rs)));
    if (pid == "Prop8" && reductive_ids(rs) != std::set<std::string>{"su21.h1", "su21.h4"})
      o.fail("Prop8 reductive set " + join(reductive_ids(rs)));
    // The pair {h26, h30} is the 2-dimensional sl3R proposition.
    if (pid == "Prop6" && reductive_ids(rs) != std::set<std::string>{"sl3R.h26", "sl3R.h30"})
      o.fail("Prop6 reductive set " + join(reductive_ids(rs)));
    if (pid == "Prop16") {
      std::size_t families = 0;
      for (const auto& e : expected_outcomes(p))
        if (e.algebra == "sl2_plus_sl2" && e.verdict == Expect::Reductive) families += e.families.size();
      if (families != 14) o.fail("Prop16 lists " + std::to_string(families) + " families");
    }
  }
  o.note(std::to_string(rows) + " case rows");
  return o;
}

Outcome criterion_witnesses() {
  Outcome o;
  auto rs = verify_all_witnesses();
  std::size_t asserted = 0, corrected_ok = 0, corrected = 0;
  for (const auto& r : rs) {
    std::string form = r.details.value("form", "");
    if (form == "corrected") {
      ++corrected;
      corrected_ok += r.match == MatchState::Match;
      continue;
    }
    ++asserted;
    if (r.match != MatchState::Match) o.fail(r.case_id);
  }
  o.note(std::to_string(asserted) + " asserted rows; corrected rows " + std::to_string(corrected_ok) + "/" +
         std::to_string(corrected) + " hold");
  return o;
}

Outcome criterion_exponentials() {
  Outcome o;
  ExpCheckOptions opt;
  if (opt.samples != 100 || opt.max_norm != 5 || opt.tol > 1e-10) o.fail("options weaker than required");
  require_match(o, verify_exponentials(opt));
  return o;
}

Outcome criterion_killing() {
  Outcome o;
  std::size_t claims = 0;
  for (const auto& r : verify_classifications()) {
    if (r.case_id.find("closed Killing form") != std::string::npos) continue;
    ++claims;
    if (r.match != MatchState::Match) o.fail(r.case_id);
  }
  std::size_t compared = 0;
  for (const auto& r : verify_all_witnesses()) {
    const auto& s = r.details.contains("samples") ? r.details["samples"] : nlohmann::ordered_json();
    if (!s.is_array()) continue;
    for (const auto& x : s) {
      if (!x.contains("k_conjugate")) continue;
      ++compared;
      if (x["k_conjugate"] != x["k_source"]) o.fail(r.case_id + ": Killing value changed under conjugation");
    }
  }
  if (compared == 0) o.fail("no conjugates compared");
  o.note(std::to_string(claims) + " class claims, " + std::to_string(compared) + " conjugates compared");
  return o;
}

Outcome criterion_loops() {
  Outcome o;
  LoopOptions opt;
  if (opt.samples != 100 || opt.tol > 1e-8) o.fail("options weaker than required");
  auto rs = verify_loops(opt);
  require_match(o, rs);
  bool n1 = false;
  for (const auto& r : rs)
    if (r.case_id == "Scheerer H2 by PSL2, phi x -> x^1: Bruck") n1 = r.verdict == "not bruck";
  if (!n1) o.fail("n = 1 extension not flagged not-Bruck");
  o.note(std::to_string(rs.size()) + " checks over " + std::to_string(loop_instances().size()) + " loops");
  return o;
}

Outcome criterion_lemma() {
  Outcome o;
  auto rs = verify_dimension_bounds(42, 100);
  require_match(o, rs);
  if (rs.size() != 4) o.fail("expected 4 records");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double budget_s;  // 0: no runtime bound
  };
  const std::vector<Criterion> criteria = {
      {1, "catalog integrity", criterion_catalog, 1},
      {2, "proposition reproduction", criterion_propositions, 60},
      {3, "witness verification", criterion_witnesses, 5},
      {4, "exponential consistency", criterion_exponentials, 0},
      {5, "Killing trichotomy", criterion_killing, 0},
      {6, "loop properties", criterion_loops, 30},
      {7, "intersection-dimension bounds", criterion_lemma, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.fail("runtime over " + std::to_string(c.budget_s) + " s");
    all &= o.pass;
    std::ostringstream notes;
    for (std::size_t i = 0; i < o.notes.size(); ++i) notes << (i ? "; " : "") << o.notes[i];
    std::printf("criterion %d %-30s %s  %.2fs  %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", secs,
                notes.str().c_str());
  }
  return all ? 0 : 1;
}
