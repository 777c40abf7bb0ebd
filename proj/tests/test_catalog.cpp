#include "lieloop/algebras.hpp"
#include "lieloop/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace lieloop;

TEST_CASE("subalgebra counts per algebra") {
  CHECK(subalgebras("sl3R").size() == 35);
  CHECK(subalgebras("sl2_plus_sl2").size() == 20);
  CHECK(subalgebras("sl2_plus_so3").size() == 9);
  CHECK(subalgebra("sl3R.h5").label == "h5");
  CHECK_THROWS(subalgebra("sl3R.h99"));
}

TEST_CASE("subalgebra ids are unique and resolve to their algebra") {
  for (const auto& n : algebra_names()) {
    std::set<std::string> seen;
    for (const auto& s : subalgebras(n)) {
      CAPTURE(s.id);
      CHECK(s.algebra == n);
      CHECK(seen.insert(s.id).second);
      CHECK(s.id.rfind(n + ".", 0) == 0);
    }
  }
}

TEST_CASE("property: every listed subalgebra is closed at sampled parameters") {
  for (const auto& n : algebra_names()) {
    const auto& g = load_algebra(n);
    for (const auto& s : subalgebras(n)) {
      CAPTURE(s.id);
      Sampler smp(3);
      for (int k = 0; k < (s.params.empty() ? 1 : 3); ++k) {
        auto basis = s.instantiate(smp.sample(s.params));
        Subspace h(g, basis);
        CHECK(h.dim() == basis.size());
        CHECK(is_subalgebra(h));
      }
    }
  }
}

TEST_CASE("transcribed tables agree with the matrix realizations") {
  CHECK(load_algebra("sl3R").rep_mismatches().empty());
  CHECK(load_algebra("su21").rep_mismatches().empty());
  CHECK(load_algebra("sl2R").rep_mismatches().empty());
  CHECK_FALSE(table_lines("sl3R").empty());
}

TEST_CASE("every expected outcome names a cataloged subalgebra") {
  for (const auto& p : proposition_ids()) {
    for (const auto& o : expected_outcomes(p)) {
      CAPTURE(o.subalgebra_id);
      CHECK(o.prop == p);
      CHECK_NOTHROW(subalgebra(o.subalgebra_id));
      CHECK(subalgebra(o.subalgebra_id).algebra == o.algebra);
      if (o.verdict == Expect::Reductive) CHECK_FALSE(o.families.empty());
    }
  }
  CHECK_THROWS_AS(expected_outcomes("Prop99"), std::invalid_argument);
}

TEST_CASE("proposition ids cover the classification results") {
  auto ids = proposition_ids();
  for (const auto& p : {"Prop3", "Prop4", "Prop5", "Prop6", "Prop7", "Prop8", "Prop9", "Prop10", "Prop11", "Prop16"})
    CHECK(std::find(ids.begin(), ids.end(), p) != ids.end());
  CHECK(expected_outcomes("Prop4").size() == 5);
}

TEST_CASE("sampler is deterministic and honors side conditions") {
  ParamSlots slots{{"a", "b"}, {"a != 0", "b = 2a+1"}};
  Sampler s1(99), s2(99);
  for (int k = 0; k < 50; ++k) {
    auto v1 = s1.sample(slots), v2 = s2.sample(slots);
    CHECK(v1 == v2);
    CHECK(v1.at("a") != 0);
    CHECK(v1.at("b") == 2 * v1.at("a") + 1);
    CHECK(abs(v1.at("a")) <= 9);
  }
  ParamSlots impossible{{"a"}, {"a > 100"}};
  CHECK_THROWS_AS(s1.sample(impossible), std::runtime_error);
}

TEST_CASE("complement families apply by parameter regime") {
  auto fam = complement_family("sl3R.h5");
  CHECK_FALSE(fam.generators.empty());
  CHECK(family_spec("sl3R.h5").subalgebra_id == "sl3R.h5");
}

TEST_CASE("catalog dump is deterministic and lists every subalgebra") {
  auto d = dump_catalog();
  CHECK(d == dump_catalog());
  for (const auto& n : algebra_names())
    for (const auto& s : subalgebras(n)) CHECK(d.find("subalgebra " + s.id + " ") != std::string::npos);
}
