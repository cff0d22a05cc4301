#pragma once

// The 4-dimensional Lie algebra span(x1, x2, x3, z) behind a presentation with q1 = q2 = q3 = 1:
// [x_i, x_j] = sum_k a_ij,k x_k + b_ij z for i > j, z central.

#include <array>
#include <string>
#include <vector>

#include "bqa/consistency3.hpp"

namespace bqa {

using LieVector = std::array<FieldValue, 4>;  // coordinates in (x1, x2, x3, z)

class StructureConstants {
public:
  explicit StructureConstants(const Bq3& A);

  LieVector bracket(const LieVector& u, const LieVector& v) const;
  LieVector basis(int i) const;  // 0..3
  const Field& field() const { return field_; }
  /// Sum over cyclic permutations of [[u,v],w] on basis triples is zero.
  bool satisfies_jacobi() const;

private:
  Field field_;
  std::array<std::array<LieVector, 4>, 4> table_;
};

/// Row-reduced basis of the span.
std::vector<LieVector> span_basis(std::vector<LieVector> vs);

struct LieInvariants {
  int dim_center = 0;
  bool nilpotent = false;
  bool solvable = false;
  int dim_derived = 0;      // dim [G, G]
  bool z_in_derived = false;

  friend bool operator==(const LieInvariants&, const LieInvariants&) = default;
};

LieInvariants lie_invariants(const Bq3& A);

enum class LieType { P3, Usl2, UH3, UN_mod, Un2xKz, UM_mod, Unlisted };

LieType lie_type(const LieInvariants& inv);
std::string to_string(LieType t);

}  // namespace bqa
