#pragma once

#include "lieloop/catalog.hpp"
#include "lieloop/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lieloop {

enum class WitnessForm {
  Printed,      // matrix or identity as it appears in the proof
  Corrected,    // printed form with a typo repaired; the printed row is kept alongside
  Constructed,  // conjugacy asserted without a matrix; the matrix here is ours
  Spectral      // asserted via equal eigenvalues; checked through characteristic polynomials
};
std::string to_string(WitnessForm f);

// Claim Ad_g(source) = scale * target with Ad_g x = g^-1 X g in the algebra's realization.
struct ConjugacyWitness {
  std::string id;
  std::string citation;
  std::string algebra;
  ParamSlots params;
  // Rows of entry expressions over Q(sqrt2, i) ("r2" is sqrt 2); empty for Spectral.
  std::vector<std::vector<std::string>> g;
  std::string source;
  std::string target;
  // Scalar factor on the target, possibly irrational; its square must be rational.
  std::string target_scale = "1";
  // Spans the source and target must lie in (the proof's h and m), possibly empty.
  std::vector<std::string> source_in, target_in;
  WitnessForm form = WitnessForm::Printed;
  std::string note;
};

const std::vector<ConjugacyWitness>& conjugacy_witnesses();

// Line-oriented witness table: one "witness <id>" block per entry closed by "end", with keyed
// lines (citation, algebra, form, params, condition, row, source, target, scale, source_in,
// target_in, note). Row entries are separated by " ; ". parse_witnesses(dump_witnesses(w)) == w.
std::string dump_witnesses(const std::vector<ConjugacyWitness>& ws);
// Throws std::invalid_argument with the offending line number on malformed input.
std::vector<ConjugacyWitness> parse_witnesses(const std::string& text);
WitnessForm parse_witness_form(const std::string& s);
bool operator==(const ConjugacyWitness& a, const ConjugacyWitness& b);

struct WitnessOptions {
  std::uint64_t seed = 42;
  // Parameter samples per parametric witness.
  std::size_t samples = 5;
  // Float tolerance for the exponential identities and canonical forms.
  double tol = 1e-10;
  // The integer k > 2 pi of the exponential representatives.
  int k = 7;
};

struct WitnessSample {
  std::map<std::string, Rational> values;
  std::vector<std::string> problems;
  std::string det;
  std::string killing_source, killing_target;
  // k(g^-1 X g) when g is explicit and the conjugate lies in the realized algebra.
  std::string killing_conjugate;
};
// Exact check at one parameter assignment.
WitnessSample check_witness(const ConjugacyWitness& w, const std::map<std::string, Rational>& values);

Record verify_witness(const ConjugacyWitness& w, const WitnessOptions& opt = {});
// Exponential representatives m1..m6 and g1..g3 = m h1 = m' for g2 = sl2 (eps = 1) and so3 (eps = i).
std::vector<Record> verify_exp_representatives(const WitnessOptions& opt = {});
// sl2R canonical forms: sampled elements of each class carried to mu e3, mu e1, e2 + e3.
std::vector<Record> verify_sl2_canonical(const WitnessOptions& opt = {}, std::size_t per_class = 20);
std::vector<Record> verify_all_witnesses(const WitnessOptions& opt = {});

// Monic characteristic polynomial coefficients, lowest degree first.
std::vector<Num> char_poly(const NMat& m);
// True when the polynomial (lowest degree first) has no repeated root.
bool squarefree(const std::vector<Num>& p);

}  // namespace lieloop
