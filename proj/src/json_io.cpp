#include "bqa/json_io.hpp"

namespace bqa {

Json to_json(const FieldValue& v) { return v.to_string(); }

namespace {

Json values(const std::vector<FieldValue>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::string affine_text(const FieldValue& u, const FieldValue& v, const char* var) {
  std::string s = u.to_string() + "*" + var;
  if (!v.is_zero()) s += " + " + v.to_string();
  return s;
}

}  // namespace

Json to_json(const Transform& t) {
  std::string perm;
  for (int i : t.perm) perm += std::to_string(i);
  return Json{{"perm", perm}, {"scale", values(t.scale)}, {"shift", values(t.shift)}};
}

Json to_json(const ConsistencyResidues& r) {
  Json out = Json::object();
  for (std::size_t k = 0; k < r.values.size(); ++k) out[ConsistencyResidues::kLabels[k]] = to_json(r[k]);
  return out;
}

Json to_json(const OrbitInvariant& inv) {
  Json classes = Json::array();
  for (const auto& pc : inv.classes)
    classes.push_back(Json{{"exponent", pc.exponent}, {"representative", to_json(pc.representative)}});
  return Json{{"case", inv.caseno}, {"supp", inv.supp}, {"classes", classes}};
}

Json to_json(const LieInvariants& inv) {
  return Json{{"dim_center", inv.dim_center},
              {"nilpotent", inv.nilpotent},
              {"solvable", inv.solvable},
              {"dim_derived", inv.dim_derived},
              {"z_in_derived", inv.z_in_derived}};
}

Json to_json(const Bq3& A) {
  return Json{{"q1", to_json(A.q1)},         {"q2", to_json(A.q2)},         {"q3", to_json(A.q3)},
              {"a", to_json(A.a)},           {"b", to_json(A.b)},           {"c", to_json(A.c)},
              {"alpha", to_json(A.alpha)},   {"beta", to_json(A.beta)},     {"gamma", to_json(A.gamma)},
              {"lambda", to_json(A.lambda)}, {"mu", to_json(A.mu)},         {"nu", to_json(A.nu)},
              {"b1", to_json(A.b1)},         {"b2", to_json(A.b2)},         {"b3", to_json(A.b3)}};
}

Json to_json(const BqPresentation& p) {
  Json rel = Json::array();
  for (int i = 2; i <= p.n(); ++i)
    for (int j = 1; j < i; ++j) rel.push_back(p.relation(i, j).render() + " = 0");
  return Json{{"n", p.n()}, {"field", p.field().to_string()}, {"relations", rel}};
}

Json to_json(const CanonicalForm& form, const std::vector<Transform>& trace) {
  Json params = Json::object();
  for (const auto& [k, v] : form.params) params[k] = to_json(v);
  Json out{{"family", form.tag()}};
  if (form.caseno != 0) out["case"] = form.caseno;
  out["params"] = params;
  out["closure_flag"] = form.closure_flag;
  out["q_inverted"] = form.q_inverted;
  if (form.invariant) out["invariant"] = to_json(*form.invariant);
  if (form.lie) out["lie"] = to_json(*form.lie);
  Json ts = Json::array();
  for (const auto& t : trace) ts.push_back(to_json(t));
  out["transforms"] = ts;
  return out;
}

Json to_json(const GwaData& g, const std::optional<Affine>& alpha, const StructureCheck& check) {
  const DprData& d = g.dpr;
  auto name = [](int i) { return "x" + std::to_string(i); };
  std::string t = name(d.t);
  auto hexpr = [&](const HExpr& e) {
    return Json{{"h", to_json(e.h)}, {t, to_json(e.t)}, {"1", to_json(e.c)}};
  };
  Json dpr{{"base", t},
           {"x", name(d.x)},
           {"y", name(d.y)},
           {"sigma", affine_text(d.sigma.u, d.sigma.v, t.c_str())},
           {"tau", affine_text(d.tau.u, d.tau.v, t.c_str())},
           {"rho", to_json(d.rho)},
           {"b", affine_text(d.b.u, d.b.v, t.c_str())}};
  Json gwa{{"h", name(d.y) + "*" + name(d.x)},
           {"sigma_h", hexpr(g.sigma_h)},
           {"tau_h", hexpr(g.tau_h)},
           {"tau_sigma", affine_text(g.nu.u, g.nu.v, t.c_str())}};
  Json checks = Json::object();
  for (const auto& [k, ok] : check.items) checks[k] = ok;
  Json out{{"dpr", dpr}, {"gwa", gwa}};
  out["central_element"] = alpha ? Json("h + " + affine_text(alpha->u, alpha->v, t.c_str())) : Json(nullptr);
  out["verified"] = check.all();
  out["checks"] = checks;
  return out;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace bqa
