#include "lieloop/catalog.hpp"

namespace lieloop::detail {

CatalogData sl2c_data() {
  CatalogData d;
  auto sub = [](const std::string& label, std::vector<std::string> basis) {
    return SubalgebraSpec{"sl2C", "sl2C." + label, label, {}, std::move(basis), ""};
  };
  d.subalgebras = {
      sub("h1", {"e1", "e2+e3"}),  sub("h2", {"i(e2+e3)", "e2+e3"}), sub("h3", {"e3", "ie3"}),
      sub("h4", {"e1"}),           sub("h5", {"e2+e3"}),             sub("h6", {"e3"}),
  };

  auto fam = [](const std::string& label, const std::string& sym, std::vector<std::string> gens) {
    return FamilySpec{"sl2C", "sl2C." + label, sym, {}, std::move(gens)};
  };
  d.families = {
      fam("h1", "X", grid({"e2", "ie1", "ie2", "ie3"}, {"e1", "e2+e3"}, "ab", false)),
      fam("h2", "Y", grid({"e1", "e2", "ie1", "ie2"}, {"e2+e3", "i(e2+e3)"}, "ab", false)),
      fam("h3", "Z", grid({"e1", "e2", "ie1", "ie2"}, {"e3", "ie3"}, "ab", false)),
      fam("h4", "W", grid({"e2", "e3", "ie1", "ie2", "ie3"}, {"e1"}, "a", false)),
      fam("h5", "V", grid({"e1", "e2", "ie1", "ie2", "ie3"}, {"e2+e3"}, "a", false)),
      fam("h6", "U", grid({"e1", "e2", "ie1", "ie2", "ie3"}, {"e3"}, "a", false)),
  };

  auto out = [](const std::string& label, Expect v, std::string citation, std::vector<ExpectedFamily> fams,
                std::string wh = "", std::size_t wg = 0) {
    ExpectedOutcome o;
    o.prop = "Prop3";
    o.algebra = "sl2C";
    o.subalgebra_id = "sl2C." + label;
    o.case_label = label;
    o.verdict = v;
    o.families = std::move(fams);
    o.witness_h = std::move(wh);
    o.witness_generator = wg;
    o.citation = std::move(citation);
    return o;
  };
  const Expect R = Expect::Reductive, N = Expect::NotReductive;
  d.outcomes = {
      out("h1", N, "Prop3 proof", {}, "e2+e3", 1),
      out("h2", N, "Prop3 proof", {}, "e2+e3", 1),
      out("h3", R, "Prop3 case 1", {{"m", {"e1", "e2", "ie1", "ie2"}, {}}}),
      out("h4", R, "Prop3 case 2", {{"m_a", {"e2", "e3", "ie1+ae1", "ie2", "ie3"}, {{"a"}, {}}}}),
      out("h5", N, "Prop3 proof", {}, "e2+e3", 1),
      out("h6", R, "Prop3 case 3", {{"m_b", {"e1", "e2", "ie1", "ie2", "ie3+be3"}, {{"b"}, {}}}}),
  };
  return d;
}

}  // namespace lieloop::detail
