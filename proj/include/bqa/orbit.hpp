#pragma once

// Four torus actions on K^3 and complete invariants for their orbits.
//
//   case 1: (l3/(l1 l2) x1, l2/(l1 l3) x2, l1/(l2 l3) x3)
//   case 2: (l3/(l1 l2) x1, l2/(l1 l3) x2, 1/(l2 l3) x3)
//   case 3: (l3/(l1 l2) x1, 1/(l1 l3) x2, 1/(l2 l3) x3)
//   case 4: (1/(l1 l2) x1, 1/(l1 l3) x2, 1/(l2 l3) x3)

#include <array>
#include <vector>

#include "bqa/field.hpp"

namespace bqa {

using Triple = std::array<FieldValue, 3>;

Triple torus_act(int caseno, const Triple& lambda, const Triple& xi);

struct OrbitInvariant {
  int caseno = 1;
  std::array<int, 3> supp{};
  /// Power classes attached to the stratum, in coordinate order of the representative.
  std::vector<PowerClass> classes;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

OrbitInvariant orbit_invariant(int caseno, const Triple& xi);

/// The canonical point of the orbit with the given invariant.
Triple orbit_representative(const OrbitInvariant& inv, const Field& f);

struct OrbitNormalization {
  Triple representative;
  Triple lambda;  // torus_act(caseno, lambda, xi) == representative
};

OrbitNormalization orbit_normalize(int caseno, const Triple& xi);

}  // namespace bqa
