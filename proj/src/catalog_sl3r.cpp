#include "lieloop/catalog.hpp"

namespace lieloop::detail {

namespace {

SubalgebraSpec sub(const std::string& label, std::vector<std::string> basis, ParamSlots params = {},
                   std::string note = "") {
  return {"sl3R", "sl3R." + label, label, std::move(params), std::move(basis), std::move(note)};
}

FamilySpec fam(const std::string& label, std::vector<std::string> gens, std::vector<std::string> when = {}) {
  return {"sl3R", "sl3R." + label, "X", std::move(when), std::move(gens)};
}

ExpectedOutcome outcome(const std::string& prop, const std::string& label, Expect v, std::string citation,
                        std::vector<ExpectedFamily> fams = {}, std::vector<std::string> regime = {}) {
  ExpectedOutcome o;
  o.prop = prop;
  o.algebra = "sl3R";
  o.subalgebra_id = "sl3R." + label;
  o.case_label = label;
  o.regime = std::move(regime);
  o.verdict = v;
  o.families = std::move(fams);
  o.citation = std::move(citation);
  return o;
}

}  // namespace

CatalogData sl3r_data() {
  CatalogData d;
  auto& s = d.subalgebras;
  // dimension 4
  s.push_back(sub("h1", {"e1", "e2", "e6", "e5+ce8"}, {{"c"}, {}}));
  s.push_back(sub("h2", {"e3", "e5", "e6", "e8"}));
  s.push_back(sub("h3", {"e1", "e2", "e6", "e8"}));
  s.push_back(sub("h4", {"e2", "e5", "e6", "e8"}));
  s.push_back(sub("h5", {"e5", "e6", "e7", "e8"}, {}, "isomorphic to gl2(R)"));
  // dimension 3
  s.push_back(sub("h6", {"e1-e3", "e2-e4", "e7-e6"}, {}, "isomorphic to so3(R)"));
  s.push_back(sub("h7", {"e1+e3", "e2+e4", "e6-e7"}, {}, "isomorphic to sl2(R)"));
  s.push_back(sub("h8", {"e5-e8", "e6", "e7"}, {}, "isomorphic to sl2(R)"));
  s.push_back(sub("h9", {"a(e5+e8)+e6-e7", "e1", "e2"}, {{"a"}, {"a >= 0"}}));
  s.push_back(sub("h10", {"e5-e8", "e2+e3", "e6"}));
  s.push_back(sub("h11", {"e3", "e6", "e8+e2"}));
  s.push_back(sub("h12", {"e2", "e6", "e5+e8-e3"}));
  s.push_back(sub("h13", {"e1", "e2", "e6"}));
  s.push_back(sub("h14", {"e5", "e8", "e6"}));
  s.push_back(sub("h15", {"e2", "e5+e8", "e6"}));
  s.push_back(sub("h16", {"e3", "e6", "e8"}));
  s.push_back(sub("h17", {"e2", "e6", "(b-1)e5+be8"}, {{"b"}, {}},
                  "printed with a trailing comma after the third generator; read as three generators"));
  s.push_back(sub("h18", {"e3", "e6", "e5+ce8"}, {{"c"}, {}}));
  // dimension 2
  s.push_back(sub("h19", {"e6", "e2+e3"}));
  s.push_back(sub("h20", {"e6", "e2+e8"}));
  s.push_back(sub("h21", {"e3", "e6+e5"}));
  s.push_back(sub("h22", {"e3", "e5+ae8"}, {{"a"}, {"a != 0", "a != 1"}}));
  s.push_back(sub("h23", {"e5", "e6"}));
  s.push_back(sub("h24", {"e2", "e6"}));
  s.push_back(sub("h25", {"e6", "e3"}));
  s.push_back(sub("h26", {"e5", "e8"}));
  s.push_back(sub("h27", {"e6", "e5+e8"}));
  s.push_back(sub("h28", {"e6", "e8"}));
  s.push_back(sub("h29", {"e5-e8", "e2+e3"}));
  s.push_back(sub("h30", {"e5+e8", "e6-e7"}));
  // dimension 1
  s.push_back(sub("h31", {"e5+ae8"}, {{"a"}, {"a != 0"}}));
  s.push_back(sub("h32", {"e2+e8"}));
  s.push_back(sub("h33", {"e2+e3"}));
  s.push_back(sub("h34", {"e6"}));
  s.push_back(sub("h35", {"e6-e7+b(e5+e8)"}, {{"b"}, {"b >= 0"}}));

  auto& f = d.families;
  const std::string abcd = "abcd", abcdf = "abcdf";
  f.push_back(fam("h1", grid({"e3", "e4", "e7", "e8"}, {"e1", "e2", "e5+ce8", "e6"}, abcd, true)));
  f.push_back(fam("h2", grid({"e1", "e2", "e4", "e7"}, {"e3", "e5", "e6", "e8"}, abcd, true)));
  f.push_back(fam("h3", grid({"e3", "e4", "e5", "e7"}, {"e1", "e2", "e6", "e8"}, abcd, true)));
  f.push_back(fam("h4", grid({"e1", "e3", "e4", "e7"}, {"e2", "e5", "e6", "e8"}, abcd, true)));
  f.push_back(fam("h5", grid({"e1", "e2", "e3", "e4"}, {"e5", "e6", "e7", "e8"}, abcd, true)));

  f.push_back(fam("h6", grid({"e3", "e4", "e5", "e6", "e8"}, {"e1-e3", "e2-e4", "e7-e6"}, abcdf, true)));
  f.push_back(fam("h7", grid({"e3", "e4", "e5", "e6", "e8"}, {"e1+e3", "e2+e4", "e6-e7"}, abcdf, true)));
  f.push_back(fam("h8", grid({"e1", "e2", "e3", "e4", "e5"}, {"e5-e8", "e6", "e7"}, abcdf, true)));
  f.push_back(fam("h9", grid({"e3", "e4", "e5", "e6", "e8"}, {"e1", "e2", "e6-e7+a(e5+e8)"}, abcdf, true)));
  f.push_back(fam("h10", grid({"e1", "e2", "e4", "e5", "e7"}, {"e2+e3", "e5-e8", "e6"}, abcdf, true)));
  f.push_back(fam("h11", grid({"e1", "e2", "e4", "e5", "e7"}, {"e2+e8", "e3", "e6"}, abcdf, true)));
  f.push_back(fam("h12", grid({"e1", "e3", "e4", "e7", "e8"}, {"e2", "e6", "e5+e8-e3"}, abcdf, true)));
  f.push_back(fam("h13", grid({"e3", "e4", "e5", "e7", "e8"}, {"e1", "e2", "e6"}, abcdf, true)));
  f.push_back(fam("h14", grid({"e1", "e2", "e3", "e4", "e7"}, {"e5", "e6", "e8"}, abcdf, true)));
  f.push_back(fam("h15", grid({"e1", "e3", "e4", "e5", "e7"}, {"e2", "e5+e8", "e6"}, abcdf, true)));
  f.push_back(fam("h16", grid({"e1", "e2", "e4", "e5", "e7"}, {"e3", "e6", "e8"}, abcdf, true)));
  f.push_back(fam("h17", grid({"e1", "e3", "e4", "e5", "e7"}, {"e2", "e6", "(b-1)e5+be8"}, abcdf, true),
                  {"b != 0"}));
  f.push_back(fam("h17", grid({"e1", "e3", "e4", "e7", "e8"}, {"e2", "e6", "-e5"}, abcdf, true), {"b = 0"}));
  f.push_back(fam("h18", grid({"e1", "e2", "e4", "e7", "e8"}, {"e3", "e5+ce8", "e6"}, abcdf, true)));

  const std::string bc = "bc";
  f.push_back(fam("h19", grid({"e1", "e2", "e4", "e5", "e7", "e8"}, {"e6", "e2+e3"}, bc, false)));
  f.push_back(fam("h20", grid({"e1", "e2", "e3", "e4", "e5", "e7"}, {"e6", "e2+e8"}, bc, false)));
  f.push_back(fam("h21", grid({"e1", "e2", "e4", "e5", "e7", "e8"}, {"e3", "e6+e5"}, bc, false)));
  f.push_back(fam("h22", grid({"e1", "e2", "e4", "e6", "e7", "e8"}, {"e3", "e5+ae8"}, bc, false)));
  f.push_back(fam("h23", grid({"e1", "e2", "e3", "e4", "e7", "e8"}, {"e5", "e6"}, bc, false)));
  f.push_back(fam("h24", grid({"e1", "e3", "e4", "e5", "e7", "e8"}, {"e2", "e6"}, bc, false)));
  f.push_back(fam("h25", grid({"e1", "e2", "e4", "e5", "e7", "e8"}, {"e3", "e6"}, bc, false)));
  f.push_back(fam("h26", grid({"e1", "e2", "e3", "e4", "e6", "e7"}, {"e5", "e8"}, bc, false)));
  f.push_back(fam("h27", grid({"e1", "e2", "e3", "e4", "e5", "e7"}, {"e6", "e5+e8"}, bc, false)));
  f.push_back(fam("h28", grid({"e1", "e2", "e3", "e4", "e5", "e7"}, {"e6", "e8"}, bc, false)));
  f.push_back(fam("h29", grid({"e1", "e2", "e4", "e5", "e6", "e7"}, {"e2+e3", "e5-e8"}, bc, false)));
  f.push_back(fam("h30", grid({"e1", "e2", "e3", "e4", "e5", "e6"}, {"e5+e8", "e6-e7"}, bc, false)));

  f.push_back(fam("h31", grid({"e1", "e2", "e3", "e4", "e6", "e7", "e8"}, {"e5+ae8"}, "a", false)));
  f.push_back(fam("h32", grid({"e1", "e3", "e4", "e5", "e6", "e7", "e8"}, {"e2+e8"}, "a", false)));
  f.push_back(fam("h33", grid({"e1", "e3", "e4", "e5", "e6", "e7", "e8"}, {"e2+e3"}, "a", false)));
  f.push_back(fam("h34", grid({"e1", "e2", "e3", "e4", "e5", "e7", "e8"}, {"e6"}, "a", false)));
  f.push_back(fam("h35", grid({"e1", "e2", "e3", "e4", "e5", "e7", "e8"}, {"e6-e7+b(e5+e8)"}, "a", false)));

  auto& o = d.outcomes;
  const Expect R = Expect::Reductive, N = Expect::NotReductive;
  o.push_back(outcome("Prop4", "h1", N, "Prop4"));
  o.push_back(outcome("Prop4", "h2", N, "Prop4"));
  o.push_back(outcome("Prop4", "h3", N, "Prop4"));
  o.push_back(outcome("Prop4", "h4", N, "Prop4"));
  o.push_back(outcome("Prop4", "h5", R, "Prop4", {{"m5", {"e1", "e2", "e3", "e4"}, {}}}));

  o.push_back(outcome("Prop5", "h6", R, "Prop5 case 1", {{"m6", {"e5", "e8", "e1+e3", "e2+e4", "e7+e6"}, {}}}));
  o.push_back(outcome("Prop5", "h7", R, "Prop5 case 2", {{"m7", {"e5", "e8", "e1-e3", "e2-e4", "e7+e6"}, {}}}));
  o.push_back(outcome("Prop5", "h8", R, "Prop5 case 3", {{"m8", {"e1", "e2", "e3", "e4", "e5+e8"}, {}}}));
  for (const char* l : {"h9", "h10", "h11", "h12", "h13", "h14", "h15", "h16"}) o.push_back(outcome("Prop5", l, N, "Prop5"));
  o.push_back(outcome("Prop5", "h17", N, "Prop5", {}, {"b != 0"}));
  o.back().case_label = "h17 (b != 0)";
  o.push_back(outcome("Prop5", "h17", N, "Prop5", {}, {"b = 0"}));
  o.back().case_label = "h17 (b = 0)";
  o.push_back(outcome("Prop5", "h18", N, "Prop5"));

  for (const char* l : {"h19", "h20", "h21", "h22", "h23", "h24", "h25"}) o.push_back(outcome("Prop6", l, N, "Prop6"));
  o.push_back(outcome("Prop6", "h26", R, "Prop6 case 1", {{"m26", {"e1", "e2", "e3", "e4", "e6", "e7"}, {}}}));
  for (const char* l : {"h27", "h28", "h29"}) o.push_back(outcome("Prop6", l, N, "Prop6"));
  o.push_back(outcome("Prop6", "h30", R, "Prop6 case 2",
                      {{"m30", {"e1", "e2", "e3", "e4", "e5-e8", "e6+e7"}, {}}}));

  o.push_back(outcome("Prop7", "h31", R, "Prop7 case 1",
                      {{"m_b", {"e1", "e2", "e3", "e4", "e6", "e7", "e8+b(e5+ae8)"}, {{"b"}, {}}}},
                      {"a != 1", "a != -1/2", "a != -2"}));
  o.back().case_label = "h31,1 (a generic)";
  o.push_back(outcome("Prop7", "h31", R, "Prop7 case 2",
                      {{"m_bcd", {"e6", "e7", "e1+b(e5-2e8)", "e3+c(e5-2e8)", "e2", "e4", "e8+d(e5-2e8)"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = -2"}));
  o.back().case_label = "h31,2 (a = -2)";
  o.push_back(outcome("Prop7", "h31", R, "Prop7 case 3",
                      {{"m_bcd", {"e6", "e7", "e1", "e2+b(e5-1/2e8)", "e3", "e4+c(e5-1/2e8)", "e8+d(e5-1/2e8)"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = -1/2"}));
  o.back().case_label = "h31,3 (a = -1/2)";
  o.push_back(outcome("Prop7", "h31", R, "Prop7 case 4",
                      {{"m_bcd", {"e1", "e2", "e3", "e4", "e6+b(e5+e8)", "e7+c(e5+e8)", "e8+d(e5+e8)"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = 1"}));
  o.back().case_label = "h31,4 (a = 1)";
  o.push_back(outcome("Prop7", "h32", R, "Prop7 case 5",
                      {{"m_d", {"e1", "e2", "e3", "-e8+2e4", "e6", "e7", "e5+de8"}, {{"d"}, {}}}}));
  o.push_back(outcome("Prop7", "h33", N, "Prop7"));
  o.push_back(outcome("Prop7", "h34", N, "Prop7"));
  o.push_back(outcome("Prop7", "h35", R, "Prop7 case 6",
                      {{"m_c", {"e1", "e2", "e3", "e4", "e6+e7", "e5-e8", "e8-2ce7+2cbe8"}, {{"c"}, {}}}},
                      {"b > 0"}));
  o.back().case_label = "h35 (b > 0)";
  o.push_back(outcome("Prop7", "h35", R, "Prop7 case 6",
                      {{"m_c", {"e1", "e2", "e3", "e4", "e6+e7", "e5-e8", "e8-2ce7+2cbe8"}, {{"c"}, {}}}},
                      {"b = 0"}));
  o.back().case_label = "h35 (b = 0)";
  return d;
}

}  // namespace lieloop::detail
