#include "lieloop/witnesses.hpp"

#include "lieloop/expm.hpp"
#include "lieloop/reproduce.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lieloop {

using json = nlohmann::ordered_json;

std::string to_string(WitnessForm f) {
  switch (f) {
    case WitnessForm::Printed: return "printed";
    case WitnessForm::Corrected: return "corrected";
    case WitnessForm::Constructed: return "constructed";
    case WitnessForm::Spectral: return "spectral";
  }
  return "?";
}

WitnessForm parse_witness_form(const std::string& s) {
  for (auto f : {WitnessForm::Printed, WitnessForm::Corrected, WitnessForm::Constructed, WitnessForm::Spectral})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown witness form: " + s);
}

bool operator==(const ConjugacyWitness& a, const ConjugacyWitness& b) {
  return a.id == b.id && a.citation == b.citation && a.algebra == b.algebra && a.params.names == b.params.names &&
         a.params.conditions == b.params.conditions && a.g == b.g && a.source == b.source && a.target == b.target &&
         a.target_scale == b.target_scale && a.source_in == b.source_in && a.target_in == b.target_in &&
         a.form == b.form && a.note == b.note;
}

namespace {

std::string join_with(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

}  // namespace

std::string dump_witnesses(const std::vector<ConjugacyWitness>& ws) {
  std::ostringstream os;
  for (const auto& w : ws) {
    os << "witness " << w.id << "\n";
    os << "citation " << w.citation << "\n";
    os << "algebra " << w.algebra << "\n";
    os << "form " << to_string(w.form) << "\n";
    if (!w.params.names.empty()) os << "params " << join_with(w.params.names, ",") << "\n";
    for (const auto& c : w.params.conditions) os << "condition " << c << "\n";
    for (const auto& row : w.g) os << "row " << join_with(row, " ; ") << "\n";
    os << "source " << w.source << "\n";
    os << "target " << w.target << "\n";
    os << "scale " << w.target_scale << "\n";
    for (const auto& s : w.source_in) os << "source_in " << s << "\n";
    for (const auto& s : w.target_in) os << "target_in " << s << "\n";
    if (!w.note.empty()) os << "note " << w.note << "\n";
    os << "end\n";
  }
  return os.str();
}

std::vector<ConjugacyWitness> parse_witnesses(const std::string& text) {
  std::vector<ConjugacyWitness> out;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  bool open = false;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("witness table line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string val = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (key == "witness") {
      if (open) fail("missing end before new witness");
      if (val.empty()) fail("empty witness id");
      out.emplace_back();
      out.back().id = val;
      open = true;
      continue;
    }
    if (!open) fail("line outside a witness block");
    auto& w = out.back();
    if (key == "end") {
      if (w.algebra.empty() || w.source.empty() || w.target.empty()) fail("incomplete witness " + w.id);
      open = false;
    } else if (key == "citation") {
      w.citation = val;
    } else if (key == "algebra") {
      w.algebra = val;
    } else if (key == "form") {
      w.form = parse_witness_form(val);
    } else if (key == "params") {
      w.params.names = split_on(val, ",");
    } else if (key == "condition") {
      w.params.conditions.push_back(val);
    } else if (key == "row") {
      w.g.push_back(split_on(val, " ; "));
      if (w.g.back().size() != w.g.front().size()) fail("ragged matrix row");
    } else if (key == "source") {
      w.source = val;
    } else if (key == "target") {
      w.target = val;
    } else if (key == "scale") {
      w.target_scale = val;
    } else if (key == "source_in") {
      w.source_in.push_back(val);
    } else if (key == "target_in") {
      w.target_in.push_back(val);
    } else if (key == "note") {
      w.note = val;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (open) fail("unterminated witness block");
  return out;
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

ConjugacyWitness mw(std::string id, std::string citation, std::string algebra, Rows g, std::string source,
                    std::string target, std::vector<std::string> source_in, std::vector<std::string> target_in,
                    WitnessForm form = WitnessForm::Printed, ParamSlots params = {}, std::string note = "") {
  ConjugacyWitness w;
  w.id = std::move(id);
  w.citation = std::move(citation);
  w.algebra = std::move(algebra);
  w.g = std::move(g);
  w.source = std::move(source);
  w.target = std::move(target);
  w.source_in = std::move(source_in);
  w.target_in = std::move(target_in);
  w.form = form;
  w.params = std::move(params);
  w.note = std::move(note);
  return w;
}

const Rows kRot = {{"r2/2", "r2/2"}, {"-r2/2", "r2/2"}};  // g^-1 e1 g = e2 in sl2
// Unitary with det 1 and g^-1 e3 g = i e1 in su2.
const Rows kU = {{"(1+i)/2", "(1+i)/2"}, {"(-1+i)/2", "(1-i)/2"}};

Rows block_diag(const Rows& a, const Rows& b) {
  Rows out;
  for (const auto& r : a) {
    auto row = r;
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back("0");
    out.push_back(row);
  }
  for (const auto& r : b) {
    std::vector<std::string> row(a.size(), "0");
    row.insert(row.end(), r.begin(), r.end());
    out.push_back(row);
  }
  return out;
}

const Rows kI2 = {{"1", "0"}, {"0", "1"}};

std::vector<ConjugacyWitness> build_witnesses() {
  using F = WitnessForm;
  std::vector<ConjugacyWitness> w;

  w.push_back(mw("sl2C.h4: e1 ~ e2", "Prop12", "sl2C", kRot, "e1", "e2", {"e1"}, {"e2", "e3", "ie1", "ie2", "ie3"},
                 F::Constructed, {}, "hyperbolic elements e1 in h4 and e2 in m_a; rotation by pi/4"));

  w.push_back(mw("sl3R.h26: -e5+e8 ~ 1/2e1+2e3", "Prop13", "sl3R", {{"0", "0", "1"}, {"1", "-1/2", "0"}, {"1", "1/2", "0"}},
                 "-e5+e8", "1/2e1+2e3", {"e5", "e8"}, {"e1", "e2", "e3", "e4", "e6", "e7"}));
  w.push_back(mw("sl3R.h32: e2+e8 ~ e1+2e7-e8+2e4", "Prop13", "sl3R", {{"0", "0", "1"}, {"0", "-1/2", "0"}, {"2", "2", "0"}},
                 "e2+e8", "e1+2e7-e8+2e4", {"e2+e8"}, {"e1", "e2", "e3", "-e8+2e4", "e6", "e7", "e5"}));
  w.push_back(mw("sl3R.h35: e6-e7+b(e5+e8) ~ (b^2+1)e1-e3+2b(e5-e8)", "Prop13", "sl3R",
                 {{"0", "0", "1"}, {"1", "-b", "0"}, {"0", "1", "0"}}, "e6-e7+b(e5+e8)", "(b^2+1)e1-e3+2b(e5-e8)",
                 {"e6-e7+b(e5+e8)"}, {"e1", "e2", "e3", "e4", "e6+e7", "e5-e8", "e8"}, F::Printed, {{"b"}, {"b > 0"}}));

  const ParamSlots case1{{"a"}, {"a != 0", "a != 1", "a != -1/2", "a != -2"}};
  const std::string src1 = "e8+(1/a)e5", tgt1 = "((-a^2+a+1)/a^2)e1+e2+e3+e4-e6-e7";
  const std::vector<std::string> m1 = {"e1", "e2", "e3", "e4", "e6", "e7", "e8"};
  w.push_back(mw("sl3R.h31 case 1", "Prop13", "sl3R",
                 {{"1", "-1/a", "-1"}, {"1", "(a+1)/a", "-1"}, {"0", "a/(2+a)", "a/(2+a)"}}, src1, tgt1, {"e5+ae8"}, m1,
                 F::Printed, case1));
  w.push_back(mw("sl3R.h31 case 1, entry (3,2) = -a/(2+a)", "Prop13", "sl3R",
                 {{"1", "-1/a", "-1"}, {"1", "(a+1)/a", "-1"}, {"0", "-a/(2+a)", "a/(2+a)"}}, src1, tgt1, {"e5+ae8"}, m1,
                 F::Corrected, case1, "row 3 must be a left eigenvector of the target for eigenvalue 1"));

  const ParamSlots case2{{"b", "c", "k", "l"}, {"k != 0", "l = k^2c+k+b", "l != 0"}};
  const Rows g2 = {{"0", "-(3k^2c+k+3b)/(3kl)", "1"}, {"k", "1", "0"}, {"-k/(3l)", "1/(3l)", "1"}};
  const std::vector<std::string> m2 = {"e6", "e7", "e1+b(e5-2e8)", "e3+c(e5-2e8)", "e2", "e4", "e8"};
  w.push_back(mw("sl3R.h31 case 2", "Prop13", "sl3R", g2, "l(e5-2e8)",
                 "e1+b(e5-2e8)+3l(e2-ke6)+k(e3+c(e5-2e8))+((3k^2c+k+3b)/(3l))(ke4-e7)", {"e5-2e8"}, m2, F::Printed,
                 case2));
  w.push_back(mw("sl3R.h31 case 2, target with k^2(e3+c(e5-2e8))", "Prop13", "sl3R", g2, "l(e5-2e8)",
                 "e1+b(e5-2e8)+3l(e2-ke6)+k^2(e3+c(e5-2e8))+((3k^2c+k+3b)/(3l))(ke4-e7)", {"e5-2e8"}, m2,
                 F::Corrected, case2, "the printed target agrees with this one only at k = 1"));

  const ParamSlots case3{{"b", "c", "k", "n"}, {"n = k^2b-2k+c", "n != 0"}};
  const std::string tgt3 = "-ke1+k^2(e2+b(e5-1/2e8))+((3k^2b-2k+3c)/2)(e3-ke6)+e4+c(e5-1/2e8)+e7";
  const std::vector<std::string> m3 = {"e6", "e7", "e1", "e2+b(e5-1/2e8)", "e3", "e4+c(e5-1/2e8)", "e8"};
  w.push_back(mw("sl3R.h31 case 3", "Prop13", "sl3R",
                 {{"0", "2/(3n)", "(-3k^2b+2b-3c)/(3n)"}, {"1", "1", "-k"}, {"1", "0", "k"}}, "n(e5-1/2e8)", tgt3,
                 {"e5-1/2e8"}, m3, F::Printed, case3));
  w.push_back(mw("sl3R.h31 case 3, entry (1,3) with 2k for 2b", "Prop13", "sl3R",
                 {{"0", "2/(3n)", "(-3k^2b+2k-3c)/(3n)"}, {"1", "1", "-k"}, {"1", "0", "k"}}, "n(e5-1/2e8)", tgt3,
                 {"e5-1/2e8"}, m3, F::Corrected, case3, "with 2b the determinant is not 1"));

  w.push_back(mw("sl3R.h31 case 4", "Prop13", "sl3R",
                 {{"1", "1", "-k"}, {"-1/(3m)", "0", "(-3c-k-3k^2b)/(3m)"}, {"0", "1", "k"}}, "m(e5+e8)",
                 "(3c+3k^2b+k)(ke2-e1)+e4-ke3+e7+c(e5+e8)+k^2(e6+b(e5+e8))", {"e5+e8"},
                 {"e1", "e2", "e3", "e4", "e6+b(e5+e8)", "e7+c(e5+e8)", "e8"}, F::Printed,
                 {{"b", "c", "k", "m"}, {"m = k^2b+k+c", "m != 0"}}));

  const Rows u3 = {{"(1+i)/2", "(1+i)/2", "0"}, {"(-1+i)/2", "(1-i)/2", "0"}, {"0", "0", "1"}};
  const Rows u3inv = {{"(1-i)/2", "(-1-i)/2", "0"}, {"(1-i)/2", "(1+i)/2", "0"}, {"0", "0", "1"}};
  w.push_back(mw("su21.h6: e2 ~ e1", "Prop14", "su21", u3, "e2", "e1", {"e2", "e4", "e7"},
                 {"e1", "e3", "e5", "e6", "e8"}, F::Constructed, {}, "elliptic in the su2 block; g in SU(2,1)"));
  w.push_back(mw("su21.h7: e7 ~ e4", "Prop14", "su21", {{"0", "1", "0"}, {"1", "0", "r2"}, {"r2", "0", "1"}}, "e7",
                 "e4", {"e6", "e7", "e8"}, {"e1-1/2e6", "e2", "e3", "e4", "e5"}, F::Printed, {},
                 "g in SL3(C); loxodromic elements with equal eigenvalues"));
  w.push_back(mw("su21.h12: e1 ~ e2", "Prop15", "su21", u3inv, "e1", "e2", {"e1", "e6"},
                 {"e2", "e3", "e4", "e5", "e7", "e8"}, F::Constructed, {}, "elliptic in the su2 block; g in SU(2,1)"));
  w.push_back(mw("su21.h23: e8 ~ e7", "Prop15", "su21", {{"-i", "0", "0"}, {"0", "-i", "0"}, {"0", "0", "-1"}}, "e8",
                 "e7", {"e8"}, {"e1", "e2", "e3", "e4", "e5", "e6", "e7"}, F::Constructed, {},
                 "hyperbolic in <e6, e7, e8>; diagonal g in SU(2,1)"));

  // c = (t^2-1)/(2t) makes sqrt(2+2c^2) = sqrt2 (t^2+1)/(2t) lie in Q(sqrt2).
  const ParamSlots pyth{{"t", "c"}, {"t > 0", "t != 1", "c = (t^2-1)/(2t)"}};
  const std::vector<std::string> mb = {"e1", "e2", "e3", "e4", "e5", "e6+e7", "e7-(1/c)e8"};
  {
    auto x = mw("su21.h24: e6+e7+ce8 ~ -(2+2c^2)^(-1/2)(e7-(1/c)e8)", "Prop15", "su21", {}, "e6+e7+ce8",
                "e7-(1/c)e8", {"e6+e7+ce8"}, mb, F::Spectral, pyth, "eigenvalue criterion");
    x.target_scale = "-2t/(r2(t^2+1))";
    w.push_back(x);
    auto y = mw("su21.h24: e6+e7+ce8 ~ multiple of e7-(1/c)e8", "Prop15", "su21", {}, "e6+e7+ce8", "e7-(1/c)e8",
                {"e6+e7+ce8"}, mb, F::Corrected, pyth,
                "scale c^2/sqrt(1+c^2) matches the spectra; the argument only needs the line");
    y.target_scale = "-2tc^2/(t^2+1)";
    w.push_back(y);
  }

  const Rows rot_i = block_diag(kI2, kRot), rot_r = block_diag(kRot, kI2), rot_rr = block_diag(kRot, kRot);
  w.push_back(mw("sl2+sl2.h3: (0,e1) ~ (0,e2)", "Prop21", "sl2_plus_sl2", rot_i, "v1", "v2", {"u3", "v1"},
                 {"u1", "u2", "v2", "v3"}, F::Constructed));
  w.push_back(mw("sl2+sl2.h9: (e1,0) ~ (e2,0)", "Prop21", "sl2_plus_sl2", rot_r, "u1", "u2", {"u1"},
                 {"u2", "u3", "v1", "v2", "v3"}, F::Constructed));
  w.push_back(mw("sl2+sl2.h13: (e1,e1) ~ (e2,e2)", "Prop21", "sl2_plus_sl2", rot_rr, "u1+v1", "u2+v2", {"u1+v1"},
                 {"u2", "u3", "v3", "v2", "v1"}, F::Constructed));
  w.push_back(mw("sl2+sl2.h14: (e1,e2+e3) ~ (e2,e2+e3)", "Prop21", "sl2_plus_sl2", rot_r, "u1+v2+v3", "u2+v2+v3",
                 {"u1+v2+v3"}, {"u2", "u3", "v1", "v2+v3", "v2"}, F::Constructed));
  w.push_back(mw("sl2+so3.h16: (e1,e3) ~ (e2,ie1)", "Prop21", "sl2_plus_so3", block_diag(kRot, kU), "u1+v3", "u2+v1",
                 {"u1+v3"}, {"u2", "u3", "v1", "v2", "-u1"}, F::Constructed));
  w.push_back(mw("sl2+so3.h17: (e2+e3,e3) ~ (e2+e3,ie1)", "Prop21", "sl2_plus_so3", block_diag(kI2, kU),
                 "u2+u3+v3", "u2+u3+v1", {"u2+u3+v3"}, {"u3", "u1", "v1", "v2", "u2+u3"}, F::Constructed));
  w.push_back(mw("sl2+so3.h18: (e3,e3) ~ (e3,ie1)", "Prop21", "sl2_plus_so3", block_diag(kI2, kU), "u3+v3", "u3+v1",
                 {"u3+v3"}, {"-u3", "u1", "u2", "v1", "v2"}, F::Constructed));
  return w;
}

std::string values_text(const std::map<std::string, Rational>& v) {
  std::string s;
  for (const auto& [k, x] : v) s += (s.empty() ? "" : ", ") + k + "=" + to_string(x);
  return s.empty() ? "no parameters" : s;
}

Num killing_scaled(const LieAlgebra& alg, const Num& s, const RVec& v) { return s * s * Num(alg.killing(v, v)); }

int sign_of(const Num& r) { return r.a > 0 ? 1 : (r.a < 0 ? -1 : 0); }

std::vector<Num> trimmed(std::vector<Num> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::vector<Num> poly_mod(std::vector<Num> a, const std::vector<Num>& b) {
  a = trimmed(a);
  while (a.size() >= b.size() && !a.empty()) {
    Num f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trimmed(a);
  }
  return a;
}

}  // namespace

const std::vector<ConjugacyWitness>& conjugacy_witnesses() {
  static const auto w = build_witnesses();
  return w;
}

std::vector<Num> char_poly(const NMat& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("char_poly: square matrix required");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Num> c(n + 1);
  c[n] = 1;
  NMat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + NMat::identity(n).scaled(c[n - k + 1]);
    NMat am = a * m;
    Num tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Num(static_cast<int>(k));
  }
  return c;
}

bool squarefree(const std::vector<Num>& p) {
  auto a = trimmed(p);
  std::vector<Num> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Num(static_cast<int>(i)));
  d = trimmed(d);
  while (!d.empty()) {
    auto r = poly_mod(a, d);
    a = d;
    d = r;
  }
  return a.size() <= 1;
}

WitnessSample check_witness(const ConjugacyWitness& w, const std::map<std::string, Rational>& values) {
  const auto& alg = load_algebra(w.algebra);
  ExprEnv env;
  env.algebra = &alg;
  env.params = values;
  WitnessSample out;
  out.values = values;
  RVec x = eval_vector(w.source, env), y = eval_vector(w.target, env);
  Num s = eval_scalar(w.target_scale, env);
  NMat xm = alg.represent(x), ym = alg.represent(y).scaled(s);

  Num kx(alg.killing(x, x)), ky = killing_scaled(alg, s, y);
  out.killing_source = kx.str();
  out.killing_target = ky.str();
  if (!ky.is_rational()) out.problems.push_back("target Killing value is not rational");
  if (sign_of(ky) != sign(alg.classify(x).killing_value))
    out.problems.push_back("source and target lie in different Killing classes");

  if (!w.source_in.empty()) {
    std::vector<RVec> span;
    for (const auto& b : w.source_in) span.push_back(eval_vector(b, env));
    if (!Subspace(alg, span).contains(x)) out.problems.push_back("source is not in h");
  }
  if (!w.target_in.empty()) {
    std::vector<RVec> span;
    for (const auto& b : w.target_in) span.push_back(eval_vector(b, env));
    if (!Subspace(alg, span).contains(y)) out.problems.push_back("target is not in m");
  }

  if (w.g.empty()) {
    auto px = char_poly(xm), py = char_poly(ym);
    if (px != py) {
      std::string a, b;
      for (const auto& c : px) a += c.str() + " ";
      for (const auto& c : py) b += c.str() + " ";
      out.problems.push_back("characteristic polynomials differ: source [" + a + "] target [" + b + "]");
    } else if (!squarefree(px)) {
      out.problems.push_back("repeated eigenvalue; equal spectra do not decide conjugacy");
    }
    return out;
  }

  const std::size_t n = alg.rep_size();
  if (w.g.size() != n) throw std::logic_error(w.id + ": conjugator has the wrong size");
  NMat g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w.g[i].size() != n) throw std::logic_error(w.id + ": conjugator row has the wrong size");
    for (std::size_t j = 0; j < n; ++j) g(i, j) = eval_scalar(w.g[i][j], env);
  }
  Num det = g.det();
  out.det = det.str();
  if (det.is_zero()) {
    out.problems.push_back("conjugator is singular");
    return out;
  }
  NMat lhs = g.inverse() * xm * g;
  if (auto pulled = alg.pull_back(lhs)) {
    out.killing_conjugate = to_string(alg.killing(*pulled, *pulled));
    if (alg.killing(*pulled, *pulled) != alg.killing(x, x)) out.problems.push_back("conjugation changed the Killing value");
  }
  if (!(lhs == ym)) {
    auto pulled = alg.pull_back(lhs);
    out.problems.push_back("g^-1 X g = " + (pulled ? alg.format(*pulled) : lhs.str()) + ", expected " +
                           (s == Num(1) ? alg.format(y) : s.str() + " (" + alg.format(y) + ")"));
  } else if (s.is_rational()) {
    // Same identity through the coordinate pull-back.
    RVec c = conjugate(alg, g, x);
    if (c != scale(s.a, y)) out.problems.push_back("pull-back of g^-1 X g disagrees with the target");
  }
  return out;
}

Record verify_witness(const ConjugacyWitness& w, const WitnessOptions& opt) {
  Record r;
  r.suite = "witness";
  r.case_id = w.id;
  r.expected = "holds";
  r.details["citation"] = w.citation;
  r.details["form"] = to_string(w.form);
  r.details["algebra"] = w.algebra;
  r.details["source"] = w.source;
  r.details["target"] = w.target_scale == "1" ? w.target : w.target_scale + " (" + w.target + ")";
  if (!w.note.empty()) r.details["note"] = w.note;
  Sampler smp(opt.seed ^ stable_hash("witness/" + w.id));
  const std::size_t count = w.params.empty() ? 1 : opt.samples;
  json samples = json::array();
  std::vector<std::string> problems;
  for (std::size_t k = 0; k < count; ++k) {
    auto values = smp.sample(w.params);
    auto s = check_witness(w, values);
    json j = {{"params", values_text(values)}, {"k_source", s.killing_source}, {"k_target", s.killing_target}};
    if (!s.killing_conjugate.empty()) j["k_conjugate"] = s.killing_conjugate;
    if (!s.det.empty()) j["det"] = s.det;
    if (!s.problems.empty()) j["problems"] = s.problems;
    samples.push_back(j);
    for (const auto& p : s.problems) problems.push_back("at " + values_text(values) + ": " + p);
  }
  r.verdict = problems.empty() ? "holds" : "fails";
  r.match = problems.empty() ? MatchState::Match : MatchState::Mismatch;
  r.details["samples"] = samples;
  if (!problems.empty()) r.details["problems"] = problems;
  return r;
}

namespace {

using Cd = std::complex<double>;

double dist_pm(const CMat& a, const CMat& b) {
  return std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff());
}

struct GroupPair {
  CMat first, second;
};

GroupPair times(const GroupPair& x, const GroupPair& y) { return {x.first * y.first, x.second * y.second}; }

double dist_pm(const GroupPair& x, const GroupPair& y) {
  return std::max(dist_pm(x.first, y.first), dist_pm(x.second, y.second));
}

CMat mat2(Cd a, Cd b, Cd c, Cd d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

CMat rotation(double t) { return mat2(std::cos(t), std::sin(t), -std::sin(t), std::cos(t)); }

// Second factor of the printed representatives for direction j at t = k / l.
CMat printed_second(int j, double t, Cd eps, bool corrected) {
  if (j == 3) return rotation(t);
  Cd ch = std::cosh(t * eps), sh = std::sinh(t * eps);
  if (j == 2) return mat2(ch, sh, corrected ? sh : -sh, ch);
  return mat2(ch + sh, 0, 0, ch - sh);
}

}  // namespace

std::vector<Record> verify_exp_representatives(const WitnessOptions& opt) {
  std::vector<Record> out;
  const double k = opt.k;
  if (k <= 2 * std::numbers::pi) throw std::invalid_argument("exp representatives need k > 2 pi");
  const auto& sl2 = load_algebra("sl2R");
  const CMat a = rotation(k);
  for (bool so3 : {false, true}) {
    const std::string name = so3 ? "sl2_plus_so3" : "sl2_plus_sl2";
    const auto& g = load_algebra(name);
    const auto& g2 = load_algebra(so3 ? "so3" : "sl2R");
    const Cd eps = so3 ? Cd(0, 1) : Cd(1, 0);
    Sampler smp(opt.seed ^ stable_hash("witness/exp/" + name));
    const std::string tag = so3 ? "eps = i, g2 = so3" : "eps = 1, g2 = sl2";
    // Rows: representatives as printed, representatives with the j = 2 sign repaired, identities.
    std::vector<std::string> printed_problems, corrected_problems, identity_problems, member_problems;
    double worst_printed = 0, worst_corrected = 0, worst_identity = 0;
    json samples = json::array();
    for (std::size_t q = 0; q < opt.samples; ++q) {
      std::map<std::string, Rational> l = {{"a", smp.draw_nonzero()}, {"b", smp.draw_nonzero()}, {"c", smp.draw_nonzero()}};
      json js = {{"params", values_text(l)}};
      const std::vector<std::pair<int, std::string>> dirs = {{3, "a"}, {2, "b"}, {1, "c"}};
      for (std::size_t idx = 0; idx < dirs.size(); ++idx) {
        auto [j, p] = dirs[idx];
        const Rational lq = l[p];
        const double t = k / to_double(lq);
        const std::string m_odd = "m" + std::to_string(2 * idx + 1), m_even = "m" + std::to_string(2 * idx + 2);
        const std::string at = tag + ", " + values_text(l) + ", " + m_odd + "/" + m_even;

        // v = (k e3, (k/l) eps e_j) lies in m_l; w adds a multiple of (e2, 0), which lies in m_l too.
        ExprEnv env;
        env.algebra = &g;
        env.params = l;
        std::vector<RVec> ml;
        std::string last = p + "u3+v" + std::to_string(j);
        for (const std::string b : {"u1", "u2", "v1", "v2", "v3"})
          if (b != "v" + std::to_string(j)) ml.push_back(eval_vector(b, env));
        ml.push_back(eval_vector(last, env));
        Subspace msub(g, ml);
        RVec v = zeros(6);
        v[2] = k;
        v[3 + j - 1] = Rational(opt.k) / lq;
        if (!msub.contains(v)) member_problems.push_back(at + ": v is not in m_" + p);
        if (!msub.contains(unit(6, 1))) member_problems.push_back(at + ": (e2,0) is not in m_" + p);

        std::vector<double> second(3, 0.0);
        second[j - 1] = t;
        const CMat b_exp = exp_closed(g2, second);
        const CMat a_exp = exp_closed(sl2, {0, 0, k});
        const CMat i_exp = exp_closed(sl2, {0, std::sqrt(k * k - 4 * std::numbers::pi * std::numbers::pi), k});
        const GroupPair odd_exp{a_exp, b_exp}, even_exp{i_exp, b_exp};
        const CMat id = CMat::Identity(2, 2);
        for (bool corrected : {false, true}) {
          const GroupPair odd_p{a, printed_second(j, t, eps, corrected)}, even_p{id, printed_second(j, t, eps, corrected)};
          double d = std::max(dist_pm(odd_p, odd_exp), dist_pm(even_p, even_exp));
          double& worst = corrected ? worst_corrected : worst_printed;
          worst = std::max(worst, d);
          if (d > opt.tol)
            (corrected ? corrected_problems : printed_problems)
                .push_back(at + ": representative differs from exp by " + std::to_string(d));
          if (!corrected) {
            // g = m_odd h1 = m_even with h1 = (A^-1, I) = exp(-k u3), as printed.
            const GroupPair h1{a.inverse(), id};
            const GroupPair gi{id, printed_second(j, t, eps, false)};
            const GroupPair h1_exp{exp_closed(sl2, {0, 0, -k}), id};
            double e = std::max({dist_pm(times(odd_p, h1), gi), dist_pm(even_p, gi), dist_pm(h1, h1_exp)});
            worst_identity = std::max(worst_identity, e);
            if (e > opt.tol) identity_problems.push_back(at + ": g = m h1 = m' fails by " + std::to_string(e));
          }
        }
      }
      samples.push_back(js);
    }
    auto make = [&](const std::string& label, WitnessForm form, std::vector<std::string> problems, double worst,
                    const std::string& note) {
      Record r;
      r.suite = "witness";
      r.case_id = "Prop21 " + label + " (" + tag + ", k = " + std::to_string(opt.k) + ")";
      r.expected = "holds";
      r.verdict = problems.empty() ? "holds" : "fails";
      r.match = problems.empty() ? MatchState::Match : MatchState::Mismatch;
      r.details["citation"] = "Prop21";
      r.details["form"] = to_string(form);
      r.details["max_deviation"] = worst;
      r.details["tolerance"] = opt.tol;
      r.details["samples"] = samples;
      if (!note.empty()) r.details["note"] = note;
      if (!problems.empty()) r.details["problems"] = problems;
      out.push_back(std::move(r));
    };
    make("v, w in m_a, m_b, m_c", WitnessForm::Printed, member_problems, 0, "exact membership");
    make("m1..m6 = exp v, exp w", WitnessForm::Printed, printed_problems, worst_printed,
         "compared in PSL2 x G2, i.e. up to sign in each factor");
    make("m1..m6 = exp v, exp w, lower-left +sinh for j = 2", WitnessForm::Corrected, corrected_problems,
         worst_corrected, "exp(t e2) has equal off-diagonal entries");
    make("g1..g3 = m h1 = m'", WitnessForm::Printed, identity_problems, worst_identity,
         "h1 = (A^-1, I) = exp(-k (e3, 0)) lies in H");
  }
  return out;
}

std::vector<Record> verify_sl2_canonical(const WitnessOptions& opt, std::size_t per_class) {
  const auto& sl2 = load_algebra("sl2R");
  Sampler smp(opt.seed ^ stable_hash("witness/sl2_canonical"));
  std::map<ElementKind, std::vector<RVec>> pool;
  // Parabolic elements from Pythagorean triples; the other classes by rejection.
  while (pool[ElementKind::Parabolic].size() < per_class) {
    Rational t = smp.draw_nonzero(), s = smp.draw_nonzero();
    RVec x = {s * (t * t - 1), s * 2 * t, s * (t * t + 1)};
    if (smp.draw() < 0) x[2] = -x[2];
    pool[ElementKind::Parabolic].push_back(x);
  }
  while (pool[ElementKind::Elliptic].size() < per_class || pool[ElementKind::HyperbolicOrLoxodromic].size() < per_class) {
    RVec x = {smp.draw(), smp.draw(), smp.draw()};
    if (is_zero(x)) continue;
    auto kind = sl2.classify(x).kind;
    if (kind != ElementKind::Parabolic && pool[kind].size() < per_class) pool[kind].push_back(x);
  }
  std::vector<Record> out;
  for (auto kind : {ElementKind::Elliptic, ElementKind::HyperbolicOrLoxodromic, ElementKind::Parabolic}) {
    std::vector<std::string> problems;
    double worst = 0;
    for (const auto& x : pool[kind]) {
      std::vector<double> xd = {to_double(x[0]), to_double(x[1]), to_double(x[2])};
      auto c = sl2_canonical(xd);
      if (c.kind != sl2.classify(x).kind) problems.push_back(sl2.format(x) + ": class disagrees with the exact one");
      CMat g = c.g.cast<Cd>();
      auto conj = conjugate_numeric(sl2, g, xd);
      double d = 0;
      for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(conj.coords[i] - c.canonical[i]));
      d = std::max({d, conj.residual, std::abs(std::abs(c.g.determinant()) - 1)});
      double scale = std::max(1.0, std::abs(xd[0]) + std::abs(xd[1]) + std::abs(xd[2]));
      worst = std::max(worst, d / scale);
      if (d > opt.tol * scale) problems.push_back(sl2.format(x) + ": deviation " + std::to_string(d));
      if (!(c.mu > 0)) problems.push_back(sl2.format(x) + ": non-positive multiple");
    }
    Record r;
    r.suite = "witness";
    const char* target = kind == ElementKind::Elliptic ? "mu e3" : kind == ElementKind::Parabolic ? "e2+e3" : "mu e1";
    r.case_id = "sl2R canonical form: " + to_string(kind) + " -> " + target;
    r.expected = "holds";
    r.verdict = problems.empty() ? "holds" : "fails";
    r.match = problems.empty() ? MatchState::Match : MatchState::Mismatch;
    r.details["citation"] = "sl2R conjugacy classes";
    r.details["form"] = to_string(WitnessForm::Constructed);
    r.details["samples"] = pool[kind].size();
    r.details["max_relative_deviation"] = worst;
    if (!problems.empty()) r.details["problems"] = problems;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> verify_all_witnesses(const WitnessOptions& opt) {
  std::vector<Record> out;
  for (const auto& w : conjugacy_witnesses()) out.push_back(verify_witness(w, opt));
  for (auto& r : verify_exp_representatives(opt)) out.push_back(std::move(r));
  for (auto& r : verify_sl2_canonical(opt)) out.push_back(std::move(r));
  return out;
}

}  // namespace lieloop
