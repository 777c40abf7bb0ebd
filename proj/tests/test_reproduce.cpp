#include "lieloop/reproduce.hpp"

#include <doctest.h>

#include <set>

using namespace lieloop;

namespace {

std::set<std::string> reductive_ids(const std::vector<Record>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs)
    if (r.verdict == "Reductive") out.insert(r.case_id.substr(0, r.case_id.find(' ')));
  return out;
}

}  // namespace

TEST_CASE("stable_hash is 64-bit FNV-1a") {
  // Published FNV-1a 64 test vectors.
  CHECK(stable_hash("") == 0xcbf29ce484222325ULL);
  CHECK(stable_hash("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(stable_hash("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("Prop4: five cases, one reductive pair at h5") {
  auto rs = reproduce("Prop4");
  REQUIRE(rs.size() == 5);
  for (const auto& r : rs) CHECK(r.match == MatchState::Match);
  CHECK(reductive_ids(rs) == std::set<std::string>{"sl3R.h5"});
}

TEST_CASE("Prop8 yields exactly h1 and h4") {
  auto rs = reproduce("Prop8");
  for (const auto& r : rs) CHECK(r.match == MatchState::Match);
  CHECK(reductive_ids(rs) == std::set<std::string>{"su21.h1", "su21.h4"});
}

TEST_CASE("the 2-dimensional sl3R classification yields exactly h26 and h30") {
  auto rs = reproduce("Prop6");
  for (const auto& r : rs) CHECK(r.match == MatchState::Match);
  CHECK(reductive_ids(rs) == std::set<std::string>{"sl3R.h26", "sl3R.h30"});
}

TEST_CASE("Prop3 on sl2C") {
  auto rs = reproduce("Prop3");
  for (const auto& r : rs) CHECK(r.match == MatchState::Match);
  CHECK(reductive_ids(rs) == std::set<std::string>{"sl2C.h3", "sl2C.h4", "sl2C.h6"});
}

TEST_CASE("Prop16 families all match") {
  auto rs = reproduce("Prop16");
  for (const auto& r : rs) {
    CAPTURE(r.case_id);
    CHECK(r.match == MatchState::Match);
  }
}

TEST_CASE("reproduction is deterministic per seed") {
  ReproduceOptions opt;
  opt.seed = 1234;
  CHECK(to_json(reproduce("Prop5", opt)).dump() == to_json(reproduce("Prop5", opt)).dump());
}

TEST_CASE("a tiny case depth turns solved cases into Unknown, never into a wrong verdict") {
  ReproduceOptions opt;
  opt.solver.case_depth = 1;
  for (const auto& r : reproduce("Prop16", opt)) {
    CAPTURE(r.case_id);
    CHECK(r.match != MatchState::Mismatch);
  }
}

TEST_CASE("documented disagreements stay visible") {
  // The solver finds a generating reductive complement for su21.h5 that the text does not list.
  bool seen = false;
  for (const auto& r : reproduce("Prop9"))
    if (r.case_id == "su21.h5") {
      seen = true;
      CHECK(r.verdict == "Reductive");
      CHECK(r.match == MatchState::Mismatch);
    }
  CHECK(seen);
}

TEST_CASE("unknown proposition is an error") { CHECK_THROWS_AS(reproduce("Prop42"), std::invalid_argument); }
