#include "lieloop/catalog.hpp"

namespace lieloop::detail {

namespace {

SubalgebraSpec sub(const std::string& label, std::vector<std::string> basis, ParamSlots params = {},
                   std::string note = "") {
  return {"su21", "su21." + label, label, std::move(params), std::move(basis), std::move(note)};
}

FamilySpec fam(const std::string& label, std::vector<std::string> gens, std::vector<std::string> when = {}) {
  return {"su21", "su21." + label, "X", std::move(when), std::move(gens)};
}

ExpectedOutcome outcome(const std::string& prop, const std::string& label, Expect v, std::string citation,
                        std::vector<ExpectedFamily> fams = {}, std::vector<std::string> regime = {}) {
  ExpectedOutcome o;
  o.prop = prop;
  o.algebra = "su21";
  o.subalgebra_id = "su21." + label;
  o.case_label = label;
  o.regime = std::move(regime);
  o.verdict = v;
  o.families = std::move(fams);
  o.citation = std::move(citation);
  return o;
}

const std::string kH3 = "e1-1/2e6+ae8";
const std::string kH11a = "e1-1/2e6+3/2c(e4-e3)-3/2b(e5+e2)";
const std::string kH11b = "e8+b(e4-e3)+c(e5+e2)";
const std::string kH18a = "e6+e7+a(e4-e3)+b(e5+e2)";
const std::string kH18b = "e8+c(e4-e3)+d(e5+e2)";
const std::string kH19 = "e1-1/2e6+ae8+b(e4-e3)+c(e5+e2)";
const std::string kH20a = "e1-1/2e6+3/2a(e4-e3)-3/2b(e5+e2)-3/2(a^2+b^2)(e6+e7)";
const std::string kH20b = "e8+b(e4-e3)+a(e5+e2)+c(e6+e7)";
const std::string kH25 = "e5+e2+b(e6+e7)+ce8";
const std::string kH26 = "e4-e3+a(e5+e2)+b(e6+e7)+ce8";
const std::string kH27 = "e1-1/2e6+d(e4-e3)+a(e5+e2)+b(e6+e7)+ce8";

}  // namespace

CatalogData su21_data() {
  CatalogData d;
  auto& s = d.subalgebras;
  // dimension 4
  s.push_back(sub("h1", {"e1", "e2", "e3", "e6"}, {}, "isomorphic to so3(R) + so2(R)"));
  s.push_back(sub("h2", {"e4-e3", "e2+e5", "e6+e7", "e8"}));
  s.push_back(sub("h3", {kH3, "e4-e3", "e2+e5", "e6+e7"}, {{"a"}, {}}, "no side condition on a is stated"));
  s.push_back(sub("h4", {"e1", "e6", "e7", "e8"}, {}, "isomorphic to sl2(R) + so2(R)"));
  // dimension 3
  s.push_back(sub("h5", {"e1", "e2", "e3"}));
  s.push_back(sub("h6", {"e2", "e4", "e7"}, {}, "isomorphic to sl2(R)"));
  s.push_back(sub("h7", {"e6", "e7", "e8"}, {}, "isomorphic to sl2(R)"));
  s.push_back(sub("h8", {"e5+e2", "e6+e7", "e8"}));
  s.push_back(sub("h9", {"e4-e3+be8", "e5+e2", "e6+e7"}, {{"b"}, {}}));
  s.push_back(sub("h10", {"e4-e3+b(e5+e2)", "e6+e7", "e8+c(e5+e2)"}, {{"b", "c"}, {}}));
  s.push_back(sub("h11", {kH11a, kH11b, "e6+e7"}, {{"b", "c"}, {}}));
  // dimension 2
  s.push_back(sub("h12", {"e1", "e6"}));
  s.push_back(sub("h13", {"e4-e3", "e6+e7"}));
  s.push_back(sub("h14", {"e5+e2+b(e4-e3)", "e6+e7"}, {{"b"}, {}}));
  s.push_back(sub("h15", {"e4-e3", "e8+b(e6+e7)"}, {{"b"}, {}}));
  s.push_back(sub("h16", {"e5+e2+b(e4-e3)", "e8+c(e6+e7)"}, {{"b", "c"}, {}}));
  s.push_back(sub("h17", {"e6+e7", "e8+b(e4-e3)+c(e5+e2)"}, {{"b", "c"}, {}}));
  s.push_back(sub("h18", {kH18a, kH18b}, {{"a", "b", "c", "d"}, {"a != 0", "d = (bc-1/2)/a"}},
                  "constraint bc-ad=1/2 sampled on the chart a != 0"));
  s.push_back(sub("h19", {kH19, "e6+e7"}, {{"a", "b", "c"}, {}}));
  s.push_back(sub("h20", {kH20a, kH20b}, {{"a", "b", "c"}, {}}));
  // dimension 1
  s.push_back(sub("h21", {"e1+ae6"}, {{"a"}, {}}));
  s.push_back(sub("h22", {"e6"}));
  s.push_back(sub("h23", {"e8"}));
  s.push_back(sub("h24", {"e6+e7+ce8"}, {{"c"}, {}}));
  s.push_back(sub("h25", {kH25}, {{"b", "c"}, {}}));
  s.push_back(sub("h26", {kH26}, {{"a", "b", "c"}, {}}));
  s.push_back(sub("h27", {kH27}, {{"a", "b", "c", "d"}, {}}));

  auto& f = d.families;
  const std::string abcd = "abcd", abc = "abc", ab = "ab", a = "a";
  f.push_back(fam("h1", grid({"e4", "e5", "e7", "e8"}, {"e1", "e2", "e3", "e6"}, abcd, false)));
  f.push_back(fam("h2", grid({"e1", "e2", "e3", "e6"}, {"e4-e3", "e5+e2", "e6+e7", "e8"}, abcd, false)));
  f.push_back(fam("h3", grid({"e3", "e5", "e7", "e8"}, {kH3, "e4-e3", "e2+e5", "e6+e7"}, abcd, false)));
  // The printed fourth generator repeats e6 in the c-slot; e7 is the direction inside h4.
  f.push_back(fam("h4", grid({"e2", "e3", "e4", "e5"}, {"e1", "e6", "e7", "e8"}, abcd, false)));

  f.push_back(fam("h5", grid({"e4", "e5", "e6", "e7", "e8"}, {"e1", "e2", "e3"}, abc, false)));
  f.push_back(fam("h6", grid({"e1", "e3", "e5", "e6", "e8"}, {"e2", "e4", "e7"}, abc, false)));
  f.push_back(fam("h7", grid({"e1", "e2", "e3", "e4", "e5"}, {"e6", "e7", "e8"}, abc, false)));
  f.push_back(fam("h8", grid({"e1", "e2", "e3", "e4", "e6"}, {"e2+e5", "e6+e7", "e8"}, abc, false)));
  f.push_back(fam("h9", grid({"e1", "e2", "e3", "e6", "e8"}, {"e2+e5", "e6+e7", "e4-e3+be8"}, abc, false)));
  f.push_back(fam("h10", grid({"e1", "e2", "e3", "e5", "e6"},
                              {"e4-e3+b(e2+e5)", "e6+e7", "e8+c(e2+e5)"}, abc, false)));
  f.push_back(fam("h11", grid({"e2", "e3", "e4", "e5", "e7"}, {kH11a, kH11b, "e6+e7"}, abc, false)));

  f.push_back(fam("h12", grid({"e2", "e3", "e4", "e5", "e7", "e8"}, {"e1", "e6"}, ab, false)));
  f.push_back(fam("h13", grid({"e1", "e2", "e3", "e5", "e6", "e8"}, {"e4-e3", "e6+e7"}, ab, false)));
  f.push_back(fam("h14", grid({"e1", "e2", "e3", "e4", "e6", "e8"}, {"e2+e5+b(e4-e3)", "e6+e7"}, ab, false)));
  f.push_back(fam("h15", grid({"e1", "e2", "e3", "e5", "e6", "e7"}, {"e4-e3", "e8+b(e6+e7)"}, ab, false)));
  // The last two printed generators use b in the second direction; c keeps the direction inside h16.
  f.push_back(fam("h16", grid({"e1", "e2", "e3", "e4", "e6", "e7"}, {"e5+e2+b(e4-e3)", "e8+c(e6+e7)"}, ab,
                              false)));
  f.push_back(fam("h17", grid({"e1", "e2", "e3", "e4", "e5", "e6"}, {"e6+e7", "e8+b(e4-e3)+c(e5+e2)"}, ab,
                              false)));
  f.push_back(fam("h18", grid({"e1", "e2", "e3", "e4", "e5", "e6"}, {kH18a, kH18b}, ab, false)));
  f.push_back(fam("h19", grid({"e2", "e3", "e4", "e5", "e7", "e8"}, {kH19, "e6+e7"}, ab, false)));
  f.push_back(fam("h20", grid({"e2", "e3", "e4", "e5", "e6", "e7"}, {kH20a, kH20b}, ab, false)));

  const std::vector<std::string> all = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
  auto without = [&](const std::string& skip) {
    std::vector<std::string> r;
    for (const auto& e : all)
      if (e != skip) r.push_back(e);
    return r;
  };
  f.push_back(fam("h21", grid(without("e1"), {"e1+ae6"}, a, false)));
  f.push_back(fam("h22", grid(without("e6"), {"e6"}, a, false)));
  f.push_back(fam("h23", grid(without("e8"), {"e8"}, a, false)));
  f.push_back(fam("h24", grid(without("e6"), {"e6+e7+ce8"}, a, false)));
  f.push_back(fam("h25", grid(without("e5"), {kH25}, a, false)));
  // Printed with a6 on both of the last two generators; read as a6, a7.
  f.push_back(fam("h26", grid(without("e4"), {kH26}, a, false)));
  f.push_back(fam("h27", grid(without("e1"), {kH27}, a, false)));

  auto& o = d.outcomes;
  const Expect R = Expect::Reductive, N = Expect::NotReductive, U = Expect::Unknown;
  o.push_back(outcome("Prop8", "h1", R, "Prop8 case 1", {{"m1", {"e4", "e5", "e7", "e8"}, {}}}));
  o.push_back(outcome("Prop8", "h2", N, "Prop8"));
  o.push_back(outcome("Prop8", "h3", N, "Prop8"));
  o.push_back(outcome("Prop8", "h4", R, "Prop8 case 2", {{"m4", {"e2", "e3", "e4", "e5"}, {}}}));

  o.push_back(outcome("Prop9", "h5", N, "Prop9"));
  o.push_back(outcome("Prop9", "h6", R, "Prop9 case 1", {{"m6", {"e1", "e3", "e5", "e6", "e8"}, {}}}));
  o.push_back(outcome("Prop9", "h7", R, "Prop9 case 2", {{"m7", {"e1-1/2e6", "e2", "e3", "e4", "e5"}, {}}}));
  for (const char* l : {"h8", "h9", "h10", "h11"}) o.push_back(outcome("Prop9", l, N, "Prop9"));

  o.push_back(outcome("Prop10", "h12", R, "Prop10 case 1",
                      {{"m12", {"e2", "e3", "e4", "e5", "e7", "e8"}, {}}}));
  for (const char* l : {"h13", "h14", "h15", "h16", "h17", "h18", "h19"}) o.push_back(outcome("Prop10", l, N, "Prop10"));
  o.push_back(outcome("Prop10", "h20", R, "Prop10 case 2",
                      {{"m20",
                        {"e6+e7", "e2+e5", "e4-e3", "e4-be8+2ae1-ae6", "e2+ae8+2be1-be6", "e6+ce8+be5-ae4"},
                        {}}}));

  o.push_back(outcome("Prop11", "h21", R, "Prop11 case 1",
                      {{"m_bcd", {"e2+b(e1-2e6)", "e3+c(e1-2e6)", "e6+d(e1-2e6)", "e4", "e5", "e7", "e8"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = -2"}));
  o.back().case_label = "h21,1 (a = -2)";
  o.push_back(outcome("Prop11", "h21", R, "Prop11 case 2",
                      {{"m_bcd", {"e2", "e3", "e7", "e8", "e4+d(e1+e6)", "e5+b(e1+e6)", "e6+c(e1+e6)"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = 1"}));
  o.back().case_label = "h21,2 (a = 1)";
  o.push_back(outcome("Prop11", "h21", R, "Prop11 case 3",
                      {{"m_bcd",
                        {"e2", "e3", "e4", "e5", "e6+b(e1-1/2e6)", "e7+c(e1-1/2e6)", "e8+d(e1-1/2e6)"},
                        {{"b", "c", "d"}, {}}}},
                      {"a = -1/2"}));
  o.back().case_label = "h21,3 (a = -1/2)";
  o.push_back(outcome("Prop11", "h21", R, "Prop11 case 4",
                      {{"m_b", {"e2", "e3", "e4", "e5", "e6+b(e1+ae6)", "e7", "e8"}, {{"b"}, {}}}},
                      {"a != -1/2", "a != -2", "a != 1"}));
  o.back().case_label = "h21,4 (a generic)";
  o.push_back(outcome("Prop11", "h22", R, "Prop11 case 5",
                      {{"m_a", {"e1+ae6", "e2", "e3", "e4", "e5", "e7", "e8"}, {{"a"}, {}}}}));
  o.push_back(outcome("Prop11", "h23", R, "Prop11 case 6",
                      {{"m_a", {"e1+ae8", "e2", "e3", "e4", "e5", "e6", "e7"}, {{"a"}, {}}}}));
  o.push_back(outcome("Prop11", "h24", R, "Prop11 case 7",
                      {{"m_b", {"e1+bce8", "e2", "e3", "e4", "e5", "e6+e7", "e7-(1/c)e8"}, {{"b"}, {}}}},
                      {"c != 0"}));
  o.back().case_label = "h24 (c != 0)";
  o.push_back(outcome("Prop11", "h24", N, "Prop11, excluded by the case list", {}, {"c = 0"}));
  o.back().case_label = "h24 (c = 0)";
  o.push_back(outcome("Prop11", "h25", R, "Prop11 case 8",
                      {{"m_d",
                        {"e1-((c^3d-cd-b)/(2c))e8", "e2+(1/c)e8", "e3+cde8", "e7-((b+cd)/c)e8", "e4-e3", "e2+e5",
                         "e6+e7"},
                        {{"d"}, {}}}},
                      {"c != 0"}));
  o.back().case_label = "h25 (c != 0)";
  o.push_back(outcome("Prop11", "h25", N, "Prop11, excluded by the case list", {}, {"c = 0"}));
  o.back().case_label = "h25 (c = 0)";
  o.push_back(outcome("Prop11", "h26", R, "Prop11 case 9",
                      {{"m_d",
                        {"e2-dce8", "e3-((1+dc^2a+a^2)/c)e8", "e6-((a^3+a-bc+dc^2+dc^2a^2)/(c^2))e8", "e5+e2",
                         "e6+e7", "e4-e3", "e1+((bc+c^2a-a-a^3+c^4d-c^2d-c^2a^2d)/(2c^2))e8"},
                        {{"d"}, {}}}},
                      {"c != 0"}));
  o.back().case_label = "h26 (c != 0)";
  o.push_back(outcome("Prop11", "h26", N, "Prop11, excluded by the case list", {}, {"c = 0"}));
  o.back().case_label = "h26 (c = 0)";
  o.push_back(outcome("Prop11", "h27", R, "Prop11 case 10",
                      {{"m_f",
                        {"e6+e7", "e4-e3", "e5+e2", "e3+f(e1-1/2e6+ce8)",
                         "e2-(2c/3)e4-(4a/3)e1-(2a/3)e7+(2d/3)e8", "e7-(b/c)e8+(a/c)e4+(d/c)e2",
                         "e8-((8ac-4fc^2+24fd^2-9f+12d)/(2(8dc-3a+4ac^2)))(e1-1/2e6+ce8)"},
                        {{"f"}, {}}}},
                      {"c != 0", "8dc-3a+4ac^2 != 0"}));
  o.back().case_label = "h27 (c != 0, generic)";
  o.push_back(outcome("Prop11", "h27", U, "Prop11 case 10, excluded locus", {}, {"c = 0"}));
  o.back().case_label = "h27 (c = 0)";
  o.back().note = "the case list excludes c = 0 without stating a verdict";
  o.push_back(outcome("Prop11", "h27", U, "Prop11 case 10, excluded locus", {},
                      {"c != 0", "a = 8dc/(3-4c^2)"}));
  o.back().case_label = "h27 (8dc-3a+4ac^2 = 0)";
  o.back().note = "the case list excludes this locus without stating a verdict";
  return d;
}

}  // namespace lieloop::detail
