#include "bqa/structure.hpp"

#include <stdexcept>

namespace bqa {

Affine Affine::then(const Affine& g) const { return {g.u * u, g.u * v + g.v}; }

std::optional<DprData> to_dpr(const CanonicalForm& form) {
  DprData d;
  if (form.family == Family::OneQ) {
    const FieldValue& q1 = form.param("q1");
    const Field f = q1.field();
    const FieldValue one = f.one(), zero = f.zero();
    const FieldValue& alpha = form.param("alpha");
    d.x = 2;
    d.y = 1;
    d.t = 3;
    d.rho = q1;
    if (form.kind == "MuAlphaNonzero") {
      d.sigma = {one, -form.param("mu")};
      d.tau = {one, -alpha};
      d.b = {zero, zero};
    } else {
      d.sigma = {one, alpha};
      d.tau = {one, -alpha};
      d.b = {form.param("c"), form.param("b1")};
    }
    return d;
  }
  if (form.family == Family::TwoQ && form.kind == "Q1Q2Unit") {
    const FieldValue& q1 = form.param("q1");
    const Field f = q1.field();
    d.x = 3;
    d.y = 2;
    d.t = 1;
    d.sigma = {q1.inverse(), f.zero()};
    d.tau = {q1, f.zero()};
    d.rho = f.one();
    d.b = {form.param("lambda"), form.param("b3")};
    return d;
  }
  return std::nullopt;
}

GwaData gwa_lift(const DprData& d) {
  GwaData g;
  g.dpr = d;
  g.sigma_h = {d.rho, d.b.u, d.b.v};
  // tau(b) = b.u (tau.u t + tau.v) + b.v
  FieldValue ri = d.rho.inverse();
  g.tau_h = {ri, -(ri * d.b.u * d.tau.u), -(ri * (d.b.u * d.tau.v + d.b.v))};
  g.nu = d.sigma.then(d.tau);
  return g;
}

std::optional<Affine> central_element(const DprData& d) {
  const Field f = d.rho.field();
  const FieldValue one = f.one(), zero = f.zero();
  if (!d.rho.is_one()) return std::nullopt;
  if (!(d.sigma.then(d.tau) == Affine{one, zero})) return std::nullopt;
  // alpha = s t:  alpha - sigma(alpha) = s (1 - u) t - s v
  const FieldValue& u = d.sigma.u;
  const FieldValue& v = d.sigma.v;
  FieldValue s;
  if (!u.is_one()) {
    s = d.b.u / (one - u);
  } else {
    if (!d.b.u.is_zero()) return std::nullopt;
    s = v.is_zero() ? zero : -(d.b.v / v);
  }
  if (!(-(s * v) == d.b.v)) return std::nullopt;
  return Affine{s, zero};
}

bool StructureCheck::all() const {
  for (const auto& [name, ok] : items)
    if (!ok) return false;
  return true;
}

StructureCheck verify_structure(const Bq3& A, const GwaData& g, const std::optional<Affine>& alpha) {
  const Field f = A.field();
  const DprData& d = g.dpr;
  Reducer red(A.to_presentation());
  auto gen = [&](int i) { return NcPoly::generator(f, 3, i); };
  auto cst = [&](const FieldValue& c) { return NcPoly::constant(f, 3, c); };
  NcPoly x = gen(d.x), y = gen(d.y), t = gen(d.t);
  auto affine = [&](const Affine& a) { return t.scaled(a.u) + cst(a.v); };
  NcPoly h = y * x;
  auto hexpr = [&](const HExpr& e) { return h.scaled(e.h) + t.scaled(e.t) + cst(e.c); };
  auto zero = [&](const NcPoly& p) { return red.reduce(p).is_zero(); };

  StructureCheck out;
  out.items.emplace_back("x t = sigma(t) x", zero(x * t - affine(d.sigma) * x));
  out.items.emplace_back("y t = tau(t) y", zero(y * t - affine(d.tau) * y));
  out.items.emplace_back("x y - rho y x = b", zero(x * y - (y * x).scaled(d.rho) - affine(d.b)));
  out.items.emplace_back("x y = sigma(h)", zero(x * y - hexpr(g.sigma_h)));
  out.items.emplace_back("x h = sigma(h) x", zero(x * h - hexpr(g.sigma_h) * x));
  out.items.emplace_back("y h = tau(h) y", zero(y * h - hexpr(g.tau_h) * y));
  out.items.emplace_back("h t = tau(sigma(t)) h", zero(h * t - affine(g.nu) * h));
  if (alpha) {
    NcPoly C = h + affine(*alpha);
    out.items.emplace_back("[C, x] = 0", zero(C * x - x * C));
    out.items.emplace_back("[C, y] = 0", zero(C * y - y * C));
    out.items.emplace_back("[C, t] = 0", zero(C * t - t * C));
  }
  return out;
}

}  // namespace bqa
