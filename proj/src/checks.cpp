#include "lieloop/checks.hpp"

#include "lieloop/algebras.hpp"
#include "lieloop/catalog.hpp"
#include "lieloop/expm.hpp"
#include "lieloop/reproduce.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lieloop {

namespace {

Record make(const std::string& suite, const std::string& id, bool ok, const std::string& expected = "holds") {
  Record r;
  r.suite = suite;
  r.case_id = id;
  r.expected = expected;
  r.verdict = ok ? expected : "fails";
  r.match = ok ? MatchState::Match : MatchState::Mismatch;
  return r;
}

bool has_table(const std::string& name) {
  try {
    table_lines(name);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::vector<Record> verify_catalog() {
  std::vector<Record> out;
  for (const auto& name : algebra_names()) {
    const LieAlgebra& alg = load_algebra(name);
    auto anti = alg.antisymmetry_violations();
    auto jac = alg.jacobi_violations();
    Record r = make("catalog", name + ": antisymmetry and Jacobi", anti.empty() && jac.empty());
    r.details["dim"] = alg.dim();
    r.details["triples"] = alg.dim() * alg.dim() * alg.dim();
    std::vector<std::string> problems = anti;
    problems.insert(problems.end(), jac.begin(), jac.end());
    if (!problems.empty()) r.details["problems"] = problems;
    out.push_back(std::move(r));

    if (has_table(name)) {
      auto mism = alg.rep_mismatches();
      Record t = make("catalog", name + ": transcribed table equals matrix brackets", mism.empty());
      t.details["table_lines"] = table_lines(name).size();
      if (!mism.empty()) t.details["problems"] = mism;
      out.push_back(std::move(t));
    }

    const auto& subs = subalgebras(name);
    if (subs.empty()) continue;
    Sampler smp(stable_hash("catalog/" + name));
    std::vector<std::string> bad;
    for (const auto& s : subs) {
      const std::size_t draws = s.params.empty() ? 1 : 3;
      for (std::size_t k = 0; k < draws; ++k) {
        auto values = smp.sample(s.params);
        if (!is_subalgebra(Subspace(alg, s.instantiate(values)))) {
          bad.push_back(s.label);
          break;
        }
      }
    }
    Record c = make("catalog", name + ": listed subalgebras are closed", bad.empty());
    c.details["subalgebras"] = subs.size();
    if (!bad.empty()) c.details["not_closed"] = bad;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Record> verify_classifications() {
  struct Claim {
    std::string algebra, element;
    ElementKind kind;
    std::string killing;  // empty when the text gives only the class
    std::string citation;
  };
  const std::vector<Claim> claims = {
      {"sl2R", "e3", ElementKind::Elliptic, "-1", "1.1, e3 is elliptic"},
      {"sl2R", "e1", ElementKind::HyperbolicOrLoxodromic, "1", "1.1, e1 is hyperbolic"},
      {"sl2R", "e2", ElementKind::HyperbolicOrLoxodromic, "1", "1.1, e2 is hyperbolic"},
      {"sl2R", "e2+e3", ElementKind::Parabolic, "0", "1.1, e2+e3 is parabolic"},
      {"sl2R", "e1+e3", ElementKind::Parabolic, "0", "1.1, e1+e3 is parabolic"},
      {"so3", "f3", ElementKind::Elliptic, "-1", "1.2, k = -l1^2 - l2^2 - l3^2"},
      {"su21", "e7", ElementKind::HyperbolicOrLoxodromic, "", "Prop14, e7 in h7 is loxodromic"},
      {"su21", "e4", ElementKind::HyperbolicOrLoxodromic, "", "Prop14, e4 in m7 is loxodromic"},
      {"su21", "e1+e6", ElementKind::Elliptic, "-3", "nu trace(ad X ad X) = 1/2 trace(X^2)"},
      {"su21", "e1-e6", ElementKind::Elliptic, "-1", "X = diag(-i, 0, i) is semisimple with eigenvalues 0, +-i"},
  };
  std::vector<Record> out;
  for (const auto& c : claims) {
    const LieAlgebra& alg = load_algebra(c.algebra);
    ExprEnv env;
    env.algebra = &alg;
    RVec x = eval_vector(c.element, env);
    ElementClass cls = alg.classify(x);
    // Brute-force nu * trace(ad x ad x), independent of the cached Killing matrix.
    RMat ad = alg.ad_matrix(x);
    Rational tr = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) tr += ad(i, j) * ad(j, i);
    const Rational brute = alg.killing_normalization() * tr;
    bool ok = cls.kind == c.kind && brute == cls.killing_value;
    if (!c.killing.empty()) ok = ok && cls.killing_value == parse_rational(c.killing);
    Record r;
    r.suite = "classify";
    r.case_id = c.algebra + ": " + c.element;
    r.verdict = to_string(cls.kind);
    r.expected = to_string(c.kind);
    r.match = ok ? MatchState::Match : MatchState::Mismatch;
    r.details["citation"] = c.citation;
    r.details["killing"] = to_string(cls.killing_value);
    r.details["nu_trace"] = to_string(brute);
    if (!c.killing.empty()) r.details["expected_killing"] = c.killing;
    out.push_back(std::move(r));
  }

  // The closed su21 Killing form as printed and with the cross term halved, compared entrywise
  // with the Killing matrix.
  const LieAlgebra& su = load_algebra("su21");
  for (const bool printed : {true, false}) {
    RMat q(8, 8);
    for (std::size_t i : {0, 1, 2, 5}) q(i, i) = -1;
    for (std::size_t i : {3, 4, 6, 7}) q(i, i) = 1;
    const Rational cross = printed ? Rational(-1) : Rational(-1, 2);
    q(0, 5) = q(5, 0) = cross;
    std::vector<std::string> diff;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i; j < 8; ++j)
        if (q(i, j) != su.killing_matrix()(i, j))
          diff.push_back("k(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") = " +
                         to_string(su.killing_matrix()(i, j)) + ", closed form gives " + to_string(q(i, j)));
    Record r = make("classify", printed ? "su21: closed Killing form with -2 l1 l6 equals nu trace(ad ad)"
                                        : "su21: closed Killing form with -l1 l6 equals nu trace(ad ad)",
                    diff.empty());
    r.details["citation"] = "su21 normalized Killing form";
    r.details["form"] = printed ? "printed" : "corrected";
    if (!diff.empty()) r.details["problems"] = diff;
    if (printed) r.details["note"] = "the printed form makes e1-e6 = diag(-i, 0, i) parabolic";
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<double> random_element(std::mt19937_64& rng, double max_norm) {
  std::uniform_real_distribution<double> u(-1, 1), radius(0, max_norm);
  std::vector<double> c(3);
  double n = 0;
  do {
    for (auto& x : c) x = u(rng);
    n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  } while (n < 1e-3);
  const double r = radius(rng);
  for (auto& x : c) x *= r / n;
  return c;
}

std::vector<double> scaled(const std::vector<double>& x, double s) {
  std::vector<double> out = x;
  for (auto& v : out) v *= s;
  return out;
}

Record numeric(const std::string& id, double dev, double tol, std::size_t samples, const std::string& measure) {
  Record r = make("exp", id, dev <= tol);
  r.details["max_deviation"] = dev;
  r.details["tol"] = tol;
  r.details["samples"] = samples;
  r.details["measure"] = measure;
  return r;
}

}  // namespace

std::vector<Record> verify_exponentials(const ExpCheckOptions& opt) {
  std::vector<Record> out;
  for (const std::string name : {"sl2R", "so3"}) {
    const LieAlgebra& alg = load_algebra(name);
    const std::string label = name == "so3" ? "su2" : name;
    std::mt19937_64 rng(opt.seed ^ stable_hash("exp/" + name));
    std::uniform_real_distribution<double> st(-1, 1);
    double series = 0, inverse = 0, group = 0, det = 0;
    for (std::size_t k = 0; k < opt.samples; ++k) {
      auto x = random_element(rng, opt.max_norm);
      const CMat e = exp_closed(alg, x);
      const double scale = std::max(1.0, e.norm());
      series = std::max(series, (e - exp_series(alg, x)).norm() / scale);
      inverse = std::max(inverse, (e * exp_closed(alg, scaled(x, -1)) - CMat::Identity(2, 2)).norm());
      const double s = st(rng), t = st(rng);
      const CMat lhs = exp_closed(alg, scaled(x, s)) * exp_closed(alg, scaled(x, t));
      group = std::max(group, (lhs - exp_closed(alg, scaled(x, s + t))).norm() / std::max(1.0, lhs.norm()));
      // det = C^2 - k S^2 cancels terms of size |e|^2 / 2.
      det = std::max(det, std::abs(e.determinant() - 1.0) / std::max(1.0, e.squaredNorm() / 2));
    }
    const std::string rel = "Frobenius, relative to max(1, |exp X|)";
    out.push_back(numeric(label + ": exp_closed = series oracle, |X| <= 5", series, opt.tol, opt.samples, rel));
    out.push_back(numeric(label + ": exp X exp(-X) = I", inverse, opt.tol, opt.samples, "Frobenius, absolute"));
    out.push_back(numeric(label + ": exp(sX) exp(tX) = exp((s+t)X)", group, opt.tol, opt.samples, rel));
    out.push_back(numeric(label + ": det exp X = 1", det, 1e-12, opt.samples, "relative to max(1, |exp X|^2 / 2)"));
  }

  double pyth = 0;
  std::mt19937_64 rng(opt.seed ^ stable_hash("exp/CS"));
  std::uniform_real_distribution<double> ux(-opt.max_norm * opt.max_norm, opt.max_norm * opt.max_norm);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const double x = k == 0 ? 0.0 : k == 1 ? 1e-10 : ux(rng);
    const double c = C(x), s = S(x);
    pyth = std::max(pyth, std::abs(c * c - x * s * s - 1) / (c * c + std::abs(x) * s * s));
  }
  out.push_back(numeric("C(x)^2 - x S(x)^2 = 1", pyth, 1e-12, opt.samples, "relative to C^2 + |x| S^2"));

  const LieAlgebra& sl2 = load_algebra("sl2R");
  const double pi = std::numbers::pi;
  out.push_back(numeric("exp 0 = I", (exp_closed(sl2, {0, 0, 0}) - CMat::Identity(2, 2)).norm(), 1e-15, 1, "absolute"));
  out.push_back(numeric("exp(pi e3) = -I", (exp_closed(sl2, {0, 0, pi}) + CMat::Identity(2, 2)).norm(), 1e-12, 1, "absolute"));
  double diag = 0;
  for (double t : {0.5, 1.0, 2.0}) {
    CMat d = CMat::Zero(2, 2);
    d(0, 0) = std::exp(t);
    d(1, 1) = std::exp(-t);
    diag = std::max({diag, (exp_closed(sl2, {t, 0, 0}) - d).norm(), (exp_series(sl2, {t, 0, 0}) - d).norm()});
  }
  out.push_back(numeric("exp(t e1) = diag(e^t, e^-t), t = 1/2, 1, 2", diag, 1e-12, 3, "absolute"));
  const LieAlgebra& sl3 = load_algebra("sl3R");
  std::vector<double> x(8, 0.0);
  x[4] = 1;
  x[7] = -1;
  CMat d = CMat::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = std::exp(1.0);
  d(2, 2) = std::exp(-1.0);
  out.push_back(numeric("sl3R: exp(e5 - e8) = diag(1, e, 1/e)", (exp_series(sl3, x) - d).norm(), 1e-12, 1, "absolute"));
  return out;
}

DimensionBoundReport check_dimension_bounds(const std::string& algebra, std::size_t dim_m, std::size_t samples,
                                            std::uint64_t seed) {
  const LieAlgebra& alg = load_algebra(algebra);
  if (alg.dim() != 6) throw std::invalid_argument("check_dimension_bounds: expected a sum of two 3-dimensional algebras");
  if (dim_m < 1 || dim_m > 6) throw std::invalid_argument("check_dimension_bounds: bad subspace dimension");
  auto unit = [&](std::size_t i) {
    RVec v(6);
    v[i] = 1;
    return v;
  };
  const Subspace g1(alg, {unit(0), unit(1), unit(2)}), g2(alg, {unit(3), unit(4), unit(5)});
  Sampler smp(seed ^ stable_hash("lemma/" + algebra + "/" + std::to_string(dim_m)));
  DimensionBoundReport rep;
  const std::size_t bound = dim_m > 3 ? dim_m - 3 : 0;
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<RVec> vs;
    Subspace m(alg, {});
    while (m.dim() < dim_m) {
      RVec v(6);
      for (auto& c : v) c = smp.draw();
      vs.push_back(v);
      m = Subspace(alg, vs);
      if (m.dim() < vs.size()) vs.pop_back();
    }
    const std::size_t d = std::min(intersect(m, g1).dim(), intersect(m, g2).dim());
    auto& slot = rep.min_intersection[dim_m == 5 ? 1 : 0];
    slot = std::min(slot, d);
    if (d < bound) ++rep.violations;
    ++rep.samples;
  }
  return rep;
}

std::vector<Record> verify_dimension_bounds(std::uint64_t seed, std::size_t samples) {
  std::vector<Record> out;
  for (const std::string alg : {"sl2_plus_sl2", "sl2_plus_so3"})
    for (std::size_t dim : {4, 5}) {
      DimensionBoundReport r = check_dimension_bounds(alg, dim, samples, seed);
      Record rec = make("lemma", alg + ": dim m = " + std::to_string(dim) + " meets each summand in dim >= " +
                                     std::to_string(dim - 3),
                        r.violations == 0);
      rec.details["citation"] = "Lemma17";
      rec.details["samples"] = r.samples;
      rec.details["violations"] = r.violations;
      rec.details["min_intersection"] = r.min_intersection[dim == 5 ? 1 : 0];
      out.push_back(std::move(rec));
    }
  return out;
}

}  // namespace lieloop
