#pragma once

#include "lieloop/algebra.hpp"
#include "lieloop/expr.hpp"
#include "lieloop/solver.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace lieloop {

// Named rational slots with side conditions. A condition "x = expr" whose left side is a
// slot name assigns that slot after the free slots are drawn.
struct ParamSlots {
  std::vector<std::string> names;
  std::vector<std::string> conditions;

  bool empty() const { return names.empty(); }
};

struct SubalgebraSpec {
  std::string algebra;
  std::string id;     // e.g. "sl3R.h17"
  std::string label;  // e.g. "h17"
  ParamSlots params;
  std::vector<std::string> basis;
  std::string note;

  std::vector<RVec> instantiate(const std::map<std::string, Rational>& values) const;
};

struct FamilySpec {
  std::string algebra;
  std::string subalgebra_id;
  std::string symbol;  // generator letter used in reports, e.g. "X"
  // Extra conditions on the subalgebra parameters under which this listing applies.
  std::vector<std::string> applies_when;
  std::vector<std::string> generators;
};

enum class Expect { Reductive, NotReductive, Unknown };
std::string to_string(Expect e);

struct ExpectedFamily {
  std::string label;
  std::vector<std::string> generators;
  ParamSlots params;
};

struct ExpectedOutcome {
  std::string prop;
  std::string algebra;
  std::string subalgebra_id;
  std::string case_label;
  // Conditions restricting the subalgebra parameters for this case.
  std::vector<std::string> regime;
  Expect verdict = Expect::NotReductive;
  std::vector<ExpectedFamily> families;
  // Bracket exhibited for NotReductive cases, as "h-element | m-generator index", may be empty.
  std::string witness_h;
  std::size_t witness_generator = 0;
  std::string citation;
  std::string note;
};

struct CatalogData {
  std::vector<SubalgebraSpec> subalgebras;
  std::vector<FamilySpec> families;
  std::vector<ExpectedOutcome> outcomes;
};

// Names: sl2R, so3, sl2C, sl3R, su21, sl2_plus_sl2, sl2_plus_so3. Throws std::invalid_argument.
const LieAlgebra& load_algebra(const std::string& name);
std::vector<std::string> algebra_names();

const std::vector<SubalgebraSpec>& subalgebras(const std::string& algebra);
const SubalgebraSpec& subalgebra(const std::string& id);
// The family whose applicability conditions hold at the given subalgebra parameters.
ParamFamily complement_family(const std::string& subalgebra_id, const std::map<std::string, Rational>& values = {});
const FamilySpec& family_spec(const std::string& subalgebra_id, const std::map<std::string, Rational>& values = {});
std::vector<std::string> proposition_ids();
std::vector<ExpectedOutcome> expected_outcomes(const std::string& prop);

// Builds a ParamFamily from generator expressions, collecting symbols in order of appearance.
ParamFamily make_family(const LieAlgebra& alg, const std::string& label, const std::vector<std::string>& generators,
                        const std::map<std::string, Rational>& values,
                        const std::map<std::string, Value>& named = {});

// Deterministic rational sampler honoring side conditions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Rational draw();
  Rational draw_nonzero();
  // Values for all slots; `extra` conditions are added to the slot conditions; `fixed` values
  // are visible to conditions. With favor_zero, free slots are 0 about a fifth of the time to hit
  // special loci. Throws std::runtime_error after too many rejections.
  std::map<std::string, Rational> sample(const ParamSlots& slots, const std::vector<std::string>& extra = {},
                                         const std::map<std::string, Rational>& fixed = {},
                                         bool favor_zero = true);

 private:
  std::mt19937_64 rng_;
};

// Full catalog dump in a line-oriented text format.
std::string dump_catalog();

namespace detail {
CatalogData sl2c_data();
CatalogData sl3r_data();
CatalogData su21_data();
CatalogData sl2g2_data();
// Generators f_j + sum_k <letter>_<index> (dir_k). Row mode: generator j uses letter j and
// index k+1; column mode: direction k uses letter k and index j+1.
std::vector<std::string> grid(const std::vector<std::string>& fixed, const std::vector<std::string>& dirs,
                              const std::string& letters, bool row_mode);
}  // namespace detail

}  // namespace lieloop
