#pragma once

// Diskew-polynomial and generalized Weyl presentations of the canonical families that have one.
//
// DPR over K[t]:  x d = sigma(d) x,  y d = tau(d) y,  x y - rho y x = b(t).
// GWA lift with h = y x:  sigma(h) = rho h + b,  tau(h) = rho^{-1} (h - tau(b)).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqa/classify.hpp"

namespace bqa {

/// t -> u t + v
struct Affine {
  FieldValue u, v;
  Affine then(const Affine& g) const;  // g o this
  friend bool operator==(const Affine&, const Affine&) = default;
};

struct DprData {
  int x = 0, y = 0, t = 0;  // generator indices in the three-generator algebra
  Affine sigma, tau;
  FieldValue rho;
  Affine b;  // b(t) = b.u t + b.v
};

/// h_coeff * h + t_coeff * t + constant
struct HExpr {
  FieldValue h, t, c;
  friend bool operator==(const HExpr&, const HExpr&) = default;
};

struct GwaData {
  DprData dpr;
  HExpr sigma_h, tau_h;
  Affine nu;  // tau o sigma on t
};

/// Absent when the family carries no such structure.
std::optional<DprData> to_dpr(const CanonicalForm& form);
GwaData gwa_lift(const DprData& d);
/// alpha(t) with alpha - sigma(alpha) = b, so that C = h + alpha is central; requires rho = 1 and nu = id.
std::optional<Affine> central_element(const DprData& d);

struct StructureCheck {
  std::vector<std::pair<std::string, bool>> items;
  bool all() const;
};

/// Every defining relation of the DPR and the GWA, and the centrality of C when present,
/// reduced to normal form inside the presentation A.
StructureCheck verify_structure(const Bq3& A, const GwaData& g, const std::optional<Affine>& alpha);

}  // namespace bqa
