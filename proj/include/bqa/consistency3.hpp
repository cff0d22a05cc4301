#pragma once

// The ten-condition PBW criterion for three generators.
//
//   x2 x1 - q1 x1 x2 = a x1 + b x2 + c x3 + b1
//   x3 x1 - q2 x1 x3 = alpha x1 + beta x2 + gamma x3 + b2
//   x3 x2 - q3 x2 x3 = lambda x1 + mu x2 + nu x3 + b3

#include <array>
#include <string>

#include "bqa/rewrite.hpp"

namespace bqa {

struct Bq3 {
  FieldValue q1, q2, q3;
  FieldValue a, b, c;
  FieldValue alpha, beta, gamma;
  FieldValue lambda, mu, nu;
  FieldValue b1, b2, b3;

  /// Quantum space with the given q's (A = B = 0).
  static Bq3 zero(const Field& f);
  Field field() const { return q1.field(); }

  BqPresentation to_presentation() const;
  static Bq3 from_presentation(const BqPresentation& p);

  friend bool operator==(const Bq3&, const Bq3&) = default;
};

struct ConsistencyResidues {
  static constexpr std::array<const char*, 10> kLabels = {"X1X2", "X1X3", "X2X3", "X1X1", "X2X2",
                                                          "X3X3", "X1",   "X2",   "X3",   "1"};
  std::array<FieldValue, 10> values;

  const FieldValue& operator[](std::size_t k) const { return values[k]; }
  const FieldValue& at(const std::string& label) const;
  bool all_zero() const;
};

ConsistencyResidues residues(const Bq3& A);
bool is_consistent3(const Bq3& A);

}  // namespace bqa
