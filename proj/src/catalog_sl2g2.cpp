#include "lieloop/catalog.hpp"

namespace lieloop::detail {

namespace {

// Basis of sl2 + g2: u_j = (e_j, 0); v1 = (0, eps e1), v2 = (0, eps e2), v3 = (0, e3).
struct SubDef {
  std::string label;
  std::vector<std::string> basis;
  std::vector<std::string> fixed;
  bool both;  // also a subalgebra of sl2 + so3
  std::string note;
};

const std::vector<SubDef>& defs() {
  static const std::vector<SubDef> d = {
      {"h1", {"u3", "v3"}, {"u1", "u2", "v1", "v2"}, true, ""},
      {"h2", {"u3", "v2+v3"}, {"u1", "u2", "v1", "v3"}, false, ""},
      {"h3", {"u3", "v1"}, {"u1", "u2", "v2", "v3"}, false, ""},
      {"h4", {"u1", "v1"}, {"u2", "u3", "v2", "v3"}, false, ""},
      {"h5", {"u1", "v2+v3"}, {"u2", "u3", "v1", "v3"}, false, ""},
      {"h6", {"u2+u3", "v2+v3"}, {"u1", "u3", "v1", "v3"}, false, ""},
      {"h7", {"u1", "u2+u3"}, {"u3", "v1", "v2", "v3"}, true, ""},
      {"h8", {"u3"}, {"u1", "u2", "v1", "v2", "v3"}, true, ""},
      {"h9", {"u1"}, {"u2", "u3", "v1", "v2", "v3"}, true, ""},
      {"h10", {"u2+u3"}, {"u2", "u1", "v1", "v2", "v3"}, true, ""},
      {"h11", {"u1+v1", "u2+u3+v2+v3"}, {"u3", "v1", "v2", "v3"}, false, ""},
      {"h12a", {"u1+v1", "u2+u3"}, {"u3", "v1", "v2", "v3"}, false, "h12 with k = e1"},
      {"h12b", {"u1+v2+v3", "u2+u3"}, {"u3", "v1", "v2", "v3"}, false, "h12 with k = e2+e3"},
      {"h12c", {"u1+v3", "u2+u3"}, {"u3", "v1", "v2", "v3"}, true, "h12 with k = e3"},
      {"h13", {"u1+v1"}, {"u2", "u3", "v1", "v2", "v3"}, false, ""},
      {"h14", {"u1+v2+v3"}, {"u2", "u3", "v1", "v2", "v3"}, false, ""},
      {"h15", {"u2+u3+v2+v3"}, {"u2", "u1", "v1", "v2", "v3"}, false, ""},
      {"h16", {"u1+v3"}, {"u2", "u3", "v1", "v2", "v3"}, true, ""},
      {"h17", {"u2+u3+v3"}, {"u2", "u1", "v1", "v2", "v3"}, true, ""},
      {"h18", {"u3+v3"}, {"u1", "u2", "v1", "v2", "v3"}, true, ""},
  };
  return d;
}

struct Case {
  int number;
  std::string label;
  std::vector<ExpectedFamily> families;
  bool both;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {1, "h8",
       {{"m_a", {"u1", "u2", "v1", "v2", "au3+v3"}, {{"a"}, {}}},
        {"m_b", {"u1", "u2", "v1", "bu3+v2", "v3"}, {{"b"}, {}}},
        {"m_c", {"u1", "u2", "cu3+v1", "v2", "v3"}, {{"c"}, {}}}},
       true},
      {4, "h9",
       {{"m_d", {"u2", "u3", "v1", "v2", "du1+v3"}, {{"d"}, {}}},
        {"m_f", {"u2", "u3", "v1", "fu1+v2", "v3"}, {{"f"}, {}}},
        {"m_g", {"u2", "u3", "gu1+v1", "v2", "v3"}, {{"g"}, {}}}},
       true},
      {7, "h16", {{"m_h", {"u2", "u3", "v1", "v2", "hu1+(1+h)v3"}, {{"h"}, {}}}}, true},
      {8, "h17", {{"m_k", {"u3+kv3", "u1", "v1", "v2", "u2+u3"}, {{"k"}, {}}}}, true},
      {9, "h18", {{"m_l", {"lu3+(1+l)v3", "u1", "u2", "v1", "v2"}, {{"l"}, {}}}}, true},
      {10, "h1", {{"m1", {"u1", "u2", "v1", "v2"}, {}}}, true},
      {11, "h3", {{"m3", {"u1", "u2", "v2", "v3"}, {}}}, false},
      {12, "h4", {{"m4", {"u2", "u3", "v2", "v3"}, {}}}, false},
      {13, "h13", {{"m_m", {"u2", "u3", "v3", "v2", "mu1+(1+m)v1"}, {{"m"}, {}}}}, false},
      {14, "h14", {{"m_n", {"u2", "u3", "v1", "v2+v3", "nu1+v2"}, {{"n"}, {}}}}, false},
  };
  return c;
}

std::string case_range(int n, const std::string& label) {
  if (label == "h8") return "Prop16 cases 1-3";
  if (label == "h9") return "Prop16 cases 4-6";
  return "Prop16 case " + std::to_string(n);
}

void add_algebra(CatalogData& d, const std::string& alg, bool so3) {
  for (const auto& s : defs()) {
    if (so3 && !s.both) continue;
    d.subalgebras.push_back({alg, alg + "." + s.label, s.label, {}, s.basis, s.note});
    const bool one_dim = s.basis.size() == 1;
    d.families.push_back({alg, alg + "." + s.label, "X", {}, grid(s.fixed, s.basis, one_dim ? "a" : "abcd", !one_dim)});
  }
  for (const auto& s : defs()) {
    if (so3 && !s.both) continue;
    ExpectedOutcome o;
    o.prop = "Prop16";
    o.algebra = alg;
    o.subalgebra_id = alg + "." + s.label;
    o.case_label = s.label;
    o.verdict = Expect::NotReductive;
    o.citation = "Prop16, not in the case list";
    for (const auto& c : cases()) {
      if (c.label != s.label || (so3 && !c.both)) continue;
      o.verdict = Expect::Reductive;
      o.families = c.families;
      o.citation = case_range(c.number, c.label);
    }
    d.outcomes.push_back(std::move(o));
  }
}

}  // namespace

CatalogData sl2g2_data() {
  CatalogData d;
  add_algebra(d, "sl2_plus_sl2", false);
  add_algebra(d, "sl2_plus_so3", true);
  return d;
}

}  // namespace lieloop::detail
