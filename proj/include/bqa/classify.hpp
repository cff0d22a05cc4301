#pragma once

// Canonical forms of consistent presentations on two and three generators.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqa/consistency3.hpp"
#include "bqa/lie.hpp"
#include "bqa/orbit.hpp"
#include "bqa/transform.hpp"

namespace bqa {

enum class Family { TwoGen, LieType, OneQ, TwoQ, ThreeQ };

std::string to_string(Family f);

struct CanonicalForm {
  Family family = Family::TwoGen;
  /// Poly2 Weyl Un2 QuantumPlane QuantumWeyl | Lie type names | MuAlphaNonzero MuAlphaZero |
  /// Q1Q2NonUnit Q1Q2Unit | Quantum C2 C5 (generator permutations carry the q1 q2 = 1 and
  /// q2 q3 = 1 patterns onto q1 = q3, so every non-quantum coincidence lands in C2)
  std::string kind;
  int caseno = 0;  // quantum case 1..4
  std::vector<std::pair<std::string, FieldValue>> params;
  bool closure_flag = false;
  bool q_inverted = false;
  std::optional<OrbitInvariant> invariant;
  std::optional<LieInvariants> lie;

  std::string tag() const { return to_string(family) + "." + kind; }
  const FieldValue& param(const std::string& name) const;
};

struct Classification2 {
  CanonicalForm form;
  BqPresentation canonical;
  std::vector<Transform> trace;
};

struct Classification3 {
  CanonicalForm form;
  Bq3 canonical;
  /// apply(input, compose_all(trace)) == canonical
  std::vector<Transform> trace;
};

/// x2 x1 - q x1 x2 = a x1 + b x2 + c.
Classification2 classify2(const FieldValue& q, const FieldValue& a, const FieldValue& b, const FieldValue& c);
Classification2 classify2(const BqPresentation& p);

/// Throws std::domain_error for inconsistent input.
Classification3 classify3(const Bq3& A);

/// All q = 1; classification by the invariants of the Lie algebra span(x1, x2, x3, z).
CanonicalForm lie_classify(const Bq3& A);

/// q1 = q2^{-1} = q3 != 1.
bool is_quantum(const Bq3& A);
Classification3 quantum_classify(const Bq3& A);

/// In the regime where every needed root exists, the quantum types collapse to
/// (case, support of the case triple); returns that pair when every class is trivial.
std::optional<std::pair<int, std::array<int, 3>>> quantum_reduced_type(const CanonicalForm& form);

}  // namespace bqa
