#pragma once

// Monomial-affine changes of generators x'_i = scale_i * x_perm(i) + shift_i.

#include <string_view>
#include <utility>
#include <vector>

#include "bqa/consistency3.hpp"
#include "bqa/rewrite.hpp"

namespace bqa {

struct MonomialAffineTransform {
  Perm perm;
  std::vector<FieldValue> scale;
  std::vector<FieldValue> shift;

  static MonomialAffineTransform identity(const Field& f, int n);
  static MonomialAffineTransform torus(const std::vector<FieldValue>& scale);
  static MonomialAffineTransform translation(const std::vector<FieldValue>& shift);
  static MonomialAffineTransform permutation(const Field& f, const Perm& perm);

  int n() const { return static_cast<int>(perm.size()); }
  Field field() const { return scale.front().field(); }
  bool is_identity() const;
  bool has_permutation() const;

  /// Acting first by *this and then by h: apply(apply(A, g), h) == apply(A, g.then(h)).
  MonomialAffineTransform then(const MonomialAffineTransform& h) const;
  MonomialAffineTransform inverse() const;

  /// Old generator x_i written in the new generators.
  std::vector<NcPoly> old_in_new() const;

  friend bool operator==(const MonomialAffineTransform&, const MonomialAffineTransform&) = default;
};

using Transform = MonomialAffineTransform;

/// h o g: g acts first.
inline Transform compose(const Transform& h, const Transform& g) { return g.then(h); }
Transform compose_all(const std::vector<Transform>& trace, const Field& f, int n);

/// The presentation of the same algebra in the generators x'_i.
BqPresentation apply(const BqPresentation& p, const Transform& g);
Bq3 apply(const Bq3& A, const Transform& g);

/// Shift making a = b = 0; requires q1 != 1.
std::pair<Bq3, Transform> kill_ab(const Bq3& A);
/// x3 -> alpha^{-1} x3 - 1/(1 - q2), making alpha = 0; requires q2 != 1 and a = b = 0.
std::pair<Bq3, Transform> kill_alpha(const Bq3& A);

/// perm like "132", scale and shift like "1,2,1/3"; empty strings mean identity parts.
Transform parse_transform(const Field& f, int n, std::string_view perm, std::string_view scale,
                          std::string_view shift);

}  // namespace bqa
