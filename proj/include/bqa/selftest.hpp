#pragma once

// Random samplers and the property suites behind `bqa selftest` and the acceptance binary.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bqa/classify.hpp"
#include "bqa/structure.hpp"

namespace bqa {

using Rng = std::mt19937_64;

/// Over Q: small fractions n/d with |n| <= 6, 1 <= d <= 4. Over GF(p): uniform.
FieldValue random_element(const Field& f, Rng& rng);
FieldValue random_unit(const Field& f, Rng& rng);
/// Uniform in K^x minus {1}; requires |K| > 2.
FieldValue random_nonunit(const Field& f, Rng& rng);
Bq3 random_bq3(const Field& f, Rng& rng);
/// Element of G3 (torus and shifts), or of G3' when with_perm is set.
Transform random_transform(const Field& f, int n, Rng& rng, bool with_perm);

/// Consistent presentation whose q-pattern puts it in the given family, before any change of generators.
Bq3 random_family_member(Family fam, const Field& f, Rng& rng);
/// random_family_member of a random three-generator family followed by a random element of G3'.
Bq3 random_consistent(const Field& f, Rng& rng);

/// The six Lie-type inputs, in the order P3 Usl2 UH3 UN_mod Un2xKz UM_mod.
std::vector<std::pair<LieType, Bq3>> crafted_lie_inputs(const Field& f);

/// Shape of a canonical form against its family's menu.
bool conforms(const Classification3& c);

/// Quantum presentation with a = b = alpha = gamma = mu = nu = 0 whose case triple is `t`.
Bq3 quantum_from_case_triple(int caseno, const Triple& t, const FieldValue& q, const Triple& free_b);

enum class SuiteStatus { Pass, Fail, Skip };

struct SuiteReport {
  int criterion = 0;
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;
  double seconds = 0;
};

struct SelftestConfig {
  /// Base count N: N uniform presentations per field for the oracle suite,
  /// N/10 confluence instances, N/50 reordering instances, N/20 instances per family for invariance.
  std::uint64_t trials = 1000;
  /// Restricts the suites to one field; suites that need another field are skipped.
  std::optional<Field> field;
  std::uint64_t seed = 20181017;
};

SuiteReport suite_oracle(const std::vector<Field>& fields, std::uint64_t per_field, Rng& rng);
SuiteReport suite_confluence(const std::vector<Field>& fields, std::uint64_t instances, Rng& rng);
SuiteReport suite_reordering(const std::vector<Field>& fields, std::uint64_t instances, Rng& rng);
SuiteReport suite_invariance(const std::vector<Field>& fields, std::uint64_t per_family, int moves, Rng& rng);
SuiteReport suite_orbits(const std::vector<Field>& fields);
SuiteReport suite_lie(const Field& f);
SuiteReport suite_structure(const std::vector<Field>& fields, std::uint64_t per_family, Rng& rng);
SuiteReport suite_quantum(const std::optional<Field>& rational, const std::optional<Field>& prime, Rng& rng);

std::vector<SuiteReport> run_selftest(const SelftestConfig& cfg);

std::string to_string(SuiteStatus s);

}  // namespace bqa
