#include "lieloop/witnesses.hpp"

#include <doctest.h>

#include <set>

using namespace lieloop;

namespace {

const ConjugacyWitness& by_id(const std::string& id) {
  for (const auto& w : conjugacy_witnesses())
    if (w.id == id) return w;
  throw std::invalid_argument("no witness " + id);
}

}  // namespace

TEST_CASE("witness ids are unique") {
  std::set<std::string> ids;
  for (const auto& w : conjugacy_witnesses()) CHECK(ids.insert(w.id).second);
  CHECK(ids.size() >= 20);
}

TEST_CASE("fixed printed witnesses hold exactly") {
  for (const auto& id : {"sl3R.h26: -e5+e8 ~ 1/2e1+2e3", "sl3R.h32: e2+e8 ~ e1+2e7-e8+2e4", "su21.h7: e7 ~ e4"}) {
    CAPTURE(id);
    auto s = check_witness(by_id(id), {});
    CHECK(s.problems.empty());
    CHECK(s.det == "1");
  }
}

TEST_CASE("h31 case 2 at (b, c, k) = (1, 1, 1): l = 3 and both target forms agree") {
  std::map<std::string, Rational> v{{"b", 1}, {"c", 1}, {"k", 1}, {"l", 3}};
  CHECK(check_witness(by_id("sl3R.h31 case 2"), v).problems.empty());
  CHECK(check_witness(by_id("sl3R.h31 case 2, target with k^2(e3+c(e5-2e8))"), v).problems.empty());
  // Away from k = 1 only the k^2 target holds.
  std::map<std::string, Rational> w{{"b", 1}, {"c", 1}, {"k", 2}, {"l", 7}};
  CHECK_FALSE(check_witness(by_id("sl3R.h31 case 2"), w).problems.empty());
  CHECK(check_witness(by_id("sl3R.h31 case 2, target with k^2(e3+c(e5-2e8))"), w).problems.empty());
}

TEST_CASE("printed h31 conjugators with typos fail, corrected rows hold") {
  WitnessOptions opt;
  for (const auto& w : conjugacy_witnesses()) {
    if (w.id.rfind("sl3R.h31", 0) != 0) continue;
    CAPTURE(w.id);
    auto r = verify_witness(w, opt);
    bool typo = w.form == WitnessForm::Printed && w.id != "sl3R.h31 case 4";
    CHECK(r.match == (typo ? MatchState::Mismatch : MatchState::Match));
  }
}

TEST_CASE("property: conjugation keeps the Killing value on every explicit witness") {
  Sampler smp(17);
  std::size_t compared = 0;
  for (const auto& w : conjugacy_witnesses()) {
    if (w.g.empty()) continue;
    for (int k = 0; k < 3; ++k) {
      auto s = check_witness(w, smp.sample(w.params));
      if (s.killing_conjugate.empty()) continue;
      CAPTURE(w.id);
      CHECK(s.killing_conjugate == s.killing_source);
      ++compared;
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("exponential representatives: identities hold, printed m3, m4 do not") {
  auto rs = verify_exp_representatives();
  REQUIRE_FALSE(rs.empty());
  std::size_t failed = 0;
  for (const auto& r : rs) {
    CAPTURE(r.case_id);
    bool printed_reps = r.case_id.find("m1..m6 = exp v, exp w (") != std::string::npos;
    CHECK(r.match == (printed_reps ? MatchState::Mismatch : MatchState::Match));
    if (printed_reps) CHECK(r.details.value("form", "") == "printed");
    failed += r.match == MatchState::Mismatch;
  }
  CHECK(failed == 2);
  CHECK(rs.size() == 8);
}

TEST_CASE("witness table dump and parse round-trip") {
  const auto& ws = conjugacy_witnesses();
  auto text = dump_witnesses(ws);
  auto back = parse_witnesses(text);
  REQUIRE(back.size() == ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) CHECK(back[i] == ws[i]);
  CHECK(dump_witnesses(back) == text);
}

TEST_CASE("witness table parser errors") {
  CHECK_THROWS_AS(parse_witnesses("witness a\nalgebra sl2R\nsource e1\ntarget e1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_witnesses("algebra sl2R\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_witnesses("witness a\ncolour red\nend\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_witnesses("witness a\nrow 1 ; 0\nrow 1\nend\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_witnesses("witness a\nform guessed\nend\n"), std::invalid_argument);
  auto ok = parse_witnesses("# comment\nwitness t\nalgebra sl2R\nrow 0 ; 1\nrow -1 ; 0\nsource e1\ntarget -e1\nend\n");
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].form == WitnessForm::Printed);
  CHECK(verify_witness(ok[0]).match == MatchState::Match);
}

TEST_CASE("characteristic polynomials") {
  NMat d(3, 3);
  d(0, 0) = 1, d(1, 1) = 2, d(2, 2) = 3;
  CHECK(char_poly(d) == std::vector<Num>{-6, 11, -6, 1});
  CHECK(squarefree(char_poly(d)));
  NMat j(2, 2);
  j(0, 1) = 1;
  CHECK(char_poly(j) == std::vector<Num>{0, 0, 1});
  CHECK_FALSE(squarefree(char_poly(j)));
  NMat r(2, 2);
  r(0, 1) = 1, r(1, 0) = -1;
  CHECK(char_poly(r) == std::vector<Num>{1, 0, 1});
  CHECK(squarefree(char_poly(r)));
}
