#include "bqa/orbit.hpp"

#include <stdexcept>

namespace bqa {

namespace {

// kExp[case-1][coordinate][i]: exponent of lambda_i in the factor multiplying xi_coordinate.
constexpr int kExp[4][3][3] = {
    {{-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}},
    {{-1, -1, 1}, {-1, 1, -1}, {0, -1, -1}},
    {{-1, -1, 1}, {-1, 0, -1}, {0, -1, -1}},
    {{-1, -1, 0}, {-1, 0, -1}, {0, -1, -1}},
};

void check_case(int caseno) {
  if (caseno < 1 || caseno > 4) throw std::invalid_argument("orbit case must be 1..4");
}

std::array<int, 3> support(const Triple& xi) {
  return {xi[0].is_zero() ? 0 : 1, xi[1].is_zero() ? 0 : 1, xi[2].is_zero() ? 0 : 1};
}

struct ClassSlot {
  int slot;      // coordinate of the representative holding the class
  int exponent;  // 2, 3 or 4
  std::array<int, 3> xi_exp;  // invariant = prod xi_k^xi_exp[k]
};

// Strata whose orbits are not determined by the support alone.
std::vector<ClassSlot> class_slots(int caseno, const std::array<int, 3>& s) {
  using S = std::array<int, 3>;
  switch (caseno) {
    case 1:
      if (s == S{1, 1, 1}) return {{1, 2, {1, 1, 0}}, {2, 2, {1, 0, 1}}};
      if (s == S{1, 1, 0}) return {{1, 2, {1, 1, 0}}};
      if (s == S{1, 0, 1}) return {{2, 2, {1, 0, 1}}};
      if (s == S{0, 1, 1}) return {{2, 2, {0, 1, 1}}};
      return {};
    case 2:
      if (s == S{1, 1, 1}) return {{1, 4, {-1, 1, -2}}};
      if (s == S{1, 1, 0}) return {{1, 2, {1, 1, 0}}};
      return {};
    case 3:
      if (s == S{1, 1, 1}) return {{2, 3, {-1, -2, 1}}};
      return {};
    default:
      if (s == S{1, 1, 1}) return {{2, 2, {-1, -1, 1}}};
      return {};
  }
}

FieldValue monomial(const Triple& xi, const std::array<int, 3>& e) {
  FieldValue r = xi[0].field().one();
  for (int k = 0; k < 3; ++k)
    if (e[k]) r *= xi[k].pow(e[k]);
  return r;
}

FieldValue root(const FieldValue& x, int n) {
  auto r = nth_root(x, n);
  if (!r) throw std::logic_error("orbit normalization: missing root");
  return *r;
}

// Torus element for strata without power classes: unimodular monomial solve.
Triple solve_unimodular(int caseno, const Triple& xi, const std::array<int, 3>& s) {
  const Field f = xi[0].field();
  Triple lam{f.one(), f.one(), f.one()};
  std::vector<int> coords;
  for (int k = 0; k < 3; ++k)
    if (s[k]) coords.push_back(k);
  const auto& E = kExp[caseno - 1];
  if (coords.empty()) return lam;
  if (coords.size() == 1) {
    int k = coords[0];
    for (int i = 0; i < 3; ++i) {
      if (E[k][i] == 1) { lam[i] = xi[k].inverse(); return lam; }
      if (E[k][i] == -1) { lam[i] = xi[k]; return lam; }
    }
  }
  if (coords.size() == 2) {
    int k0 = coords[0], k1 = coords[1];
    for (int fixed = 2; fixed >= 0; --fixed) {
      int u = fixed == 0 ? 1 : 0, v = fixed == 2 ? 1 : 2;
      int a = E[k0][u], b = E[k0][v], c = E[k1][u], d = E[k1][v];
      int det = a * d - b * c;
      if (det != 1 && det != -1) continue;
      // [log l_u, log l_v] = M^{-1} [log t0, log t1] with t_k = 1/xi_k.
      FieldValue t0 = xi[k0].inverse(), t1 = xi[k1].inverse();
      lam[u] = t0.pow(d * det) * t1.pow(-b * det);
      lam[v] = t0.pow(-c * det) * t1.pow(a * det);
      return lam;
    }
  }
  throw std::logic_error("orbit normalization: stratum needs a power class");
}

}  // namespace

Triple torus_act(int caseno, const Triple& lambda, const Triple& xi) {
  check_case(caseno);
  Triple out = xi;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      if (int e = kExp[caseno - 1][k][i]) out[k] *= lambda[i].pow(e);
  return out;
}

OrbitInvariant orbit_invariant(int caseno, const Triple& xi) {
  check_case(caseno);
  OrbitInvariant inv;
  inv.caseno = caseno;
  inv.supp = support(xi);
  for (const auto& cs : class_slots(caseno, inv.supp))
    inv.classes.push_back(power_class(monomial(xi, cs.xi_exp), cs.exponent));
  return inv;
}

Triple orbit_representative(const OrbitInvariant& inv, const Field& f) {
  check_case(inv.caseno);
  Triple rep;
  for (int k = 0; k < 3; ++k) rep[k] = inv.supp[k] ? f.one() : f.zero();
  auto slots = class_slots(inv.caseno, inv.supp);
  if (slots.size() != inv.classes.size()) throw std::invalid_argument("invariant does not match its stratum");
  for (std::size_t t = 0; t < slots.size(); ++t) rep[slots[t].slot] = inv.classes[t].representative;
  return rep;
}

OrbitNormalization orbit_normalize(int caseno, const Triple& xi) {
  check_case(caseno);
  const Field f = xi[0].field();
  OrbitInvariant inv = orbit_invariant(caseno, xi);
  Triple rep = orbit_representative(inv, f);
  using S = std::array<int, 3>;
  const S s = inv.supp;
  const auto& [x1, x2, x3] = xi;
  FieldValue one = f.one();
  Triple lam{one, one, one};

  if (inv.classes.empty()) {
    lam = solve_unimodular(caseno, xi, s);
  } else if (caseno == 1 && s == S{1, 1, 1}) {
    lam[0] = root(x1 * x2 / rep[1], 2);
    lam[1] = root(x1 * x3 / rep[2], 2);
    lam[2] = lam[0] * lam[1] / x1;
  } else if ((caseno == 1 || caseno == 2) && s == S{1, 1, 0}) {
    lam[0] = root(x1 * x2 / rep[1], 2);
    lam[2] = lam[0] / x1;
  } else if (caseno == 1 && s == S{1, 0, 1}) {
    lam[1] = root(x1 * x3 / rep[2], 2);
    lam[2] = lam[1] / x1;
  } else if (caseno == 1 && s == S{0, 1, 1}) {
    lam[0] = root(rep[2] * x2 / x3, 2);
    lam[2] = x2 / lam[0];
  } else if (caseno == 2) {
    lam[1] = root(rep[1] * x1 * x3 * x3 / x2, 4);
    lam[2] = x3 / lam[1];
    lam[0] = lam[2] * x1 / lam[1];
  } else if (caseno == 3) {
    lam[0] = root(rep[2] * x1 * x2 * x2 / x3, 3);
    lam[2] = x2 / lam[0];
    lam[1] = lam[2] * x1 / lam[0];
  } else {
    lam[0] = root(rep[2] * x1 * x2 / x3, 2);
    lam[1] = x1 / lam[0];
    lam[2] = x2 / lam[0];
  }

  if (!(torus_act(caseno, lam, xi) == rep)) throw std::logic_error("orbit normalization failed");
  return {rep, lam};
}

}  // namespace bqa
