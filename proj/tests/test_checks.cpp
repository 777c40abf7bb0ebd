#include "lieloop/checks.hpp"

#include <doctest.h>

using namespace lieloop;

TEST_CASE("catalog suite passes") {
  auto rs = verify_catalog();
  CHECK(rs.size() == 15);
  for (const auto& r : rs) {
    CAPTURE(r.case_id);
    CHECK(r.match == MatchState::Match);
  }
}

TEST_CASE("classification suite: only the printed su21 closed form fails") {
  for (const auto& r : verify_classifications()) {
    CAPTURE(r.case_id);
    bool printed = r.case_id.find("-2 l1 l6") != std::string::npos;
    CHECK(r.match == (printed ? MatchState::Mismatch : MatchState::Match));
  }
}

TEST_CASE("exponential suite passes") {
  for (const auto& r : verify_exponentials()) {
    CAPTURE(r.case_id);
    CHECK(r.match == MatchState::Match);
  }
}

TEST_CASE("dimension bounds on random subspaces of sl2 + g2") {
  for (const auto& alg : {"sl2_plus_sl2", "sl2_plus_so3"}) {
    for (std::size_t dim : {4, 5}) {
      auto r = check_dimension_bounds(alg, dim, 100, 5);
      CHECK(r.samples == 100);
      CHECK(r.violations == 0);
      CHECK(r.min_intersection[dim - 4] >= dim - 3);
    }
  }
  CHECK_THROWS(check_dimension_bounds("sl3R", 4, 1, 0));
}
