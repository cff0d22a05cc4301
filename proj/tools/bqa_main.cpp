#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bqa/classify.hpp"
#include "bqa/json_io.hpp"
#include "bqa/presentation_io.hpp"
#include "bqa/selftest.hpp"
#include "bqa/structure.hpp"

using namespace bqa;

namespace {

struct Options {
  std::string field;
  bool pretty = false;
  std::string input;
  std::string expr;
  std::string order;
  int caseno = 1;
  std::string xi;
  std::string perm, scale, shift;  // optional change of generators applied after loading
  std::uint64_t trials = 1000;
  std::uint64_t seed = 20181017;
};

// Exit code 2 with a diagnostic; line and column are reported when known.
struct InputError {
  std::string message;
  int line = 0, column = 0;
};

std::optional<Field> field_option(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

BqPresentation load(const Options& o) {
  BqPresentation p = load_presentation(o.input, field_option(o));
  if (o.perm.empty() && o.scale.empty() && o.shift.empty()) return p;
  return apply(p, parse_transform(p.field(), p.n(), o.perm, o.scale, o.shift));
}

Perm parse_order(const std::string& s, int n) {
  Perm p;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw InputError{"order must be a string of generator digits like 132"};
    p.push_back(ch - '0');
  }
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) throw InputError{"order is not a permutation of 1.." + std::to_string(n)};
  return p;
}

Triple parse_xi(const std::string& s, const Field& f) {
  Triple t;
  std::stringstream in(s);
  std::string item;
  int k = 0;
  while (std::getline(in, item, ',')) {
    if (k == 3) throw InputError{"--xi takes three comma-separated values"};
    t[k++] = f.parse_literal(item);
  }
  if (k != 3) throw InputError{"--xi takes three comma-separated values"};
  return t;
}

int emit(const Json& j, const Options& o, int code) {
  std::cout << dump(j, o.pretty) << "\n";
  return code;
}

int cmd_check(const Options& o) {
  BqPresentation p = load(o);
  Json out = Json::object();
  bool ok;
  if (p.n() == 3) {
    ConsistencyResidues r = residues(Bq3::from_presentation(p));
    ok = r.all_zero();
    out["consistent"] = ok;
    out["residues"] = to_json(r);
  } else {
    auto reports = overlap_check(p);
    ok = reports.empty();
    out["consistent"] = ok;
    Json ov = Json::array();
    for (const auto& rep : reports)
      ov.push_back(Json{{"k", rep.k}, {"j", rep.j}, {"i", rep.i}, {"difference", rep.difference.render()}});
    out["overlaps"] = ov;
  }
  return emit(out, o, ok ? 0 : 1);
}

int cmd_reduce(const Options& o) {
  BqPresentation p = load(o);
  NcPoly f = [&] {
    try {
      return parse_expr(o.expr, p.n(), p.field());
    } catch (const ParseError& e) {
      throw InputError{std::string("--expr: ") + e.what(), 1, static_cast<int>(e.position()) + 1};
    }
  }();
  bool consistent = pbw_consistent(p);
  Json out{{"input", f.render()}, {"consistent", consistent}};
  if (!consistent) {
    out["normal_form"] = nullptr;
    return emit(out, o, 1);
  }
  if (!o.order.empty()) {
    out["order"] = o.order;
    out["normal_form"] = reduce_in_order(f, p, parse_order(o.order, p.n())).render();
  } else {
    out["normal_form"] = reduce(f, p).render();
  }
  return emit(out, o, 0);
}

int cmd_classify(const Options& o) {
  BqPresentation p = load(o);
  if (p.n() == 2) {
    Classification2 c = classify2(p);
    Json out = to_json(c.form, c.trace);
    out["canonical"] = to_json(c.canonical);
    return emit(out, o, 0);
  }
  if (p.n() != 3) throw InputError{"classify handles two or three generators"};
  Bq3 A = Bq3::from_presentation(p);
  if (!is_consistent3(A)) return emit(Json{{"consistent", false}, {"residues", to_json(residues(A))}}, o, 1);
  Classification3 c = classify3(A);
  Json out = to_json(c.form, c.trace);
  out["canonical"] = to_json(c.canonical);
  return emit(out, o, 0);
}

int cmd_structure(const Options& o) {
  BqPresentation p = load(o);
  if (p.n() != 3) throw InputError{"structure handles three generators"};
  Bq3 A = Bq3::from_presentation(p);
  if (!is_consistent3(A)) return emit(Json{{"consistent", false}, {"residues", to_json(residues(A))}}, o, 1);
  Classification3 c = classify3(A);
  auto dpr = to_dpr(c.form);
  if (!dpr) return emit(Json{{"family", c.form.tag()}, {"structure", nullptr}}, o, 1);
  GwaData g = gwa_lift(*dpr);
  auto alpha = central_element(*dpr);
  StructureCheck check = verify_structure(c.canonical, g, alpha);
  Json out{{"family", c.form.tag()}, {"canonical", to_json(c.canonical)}};
  out["structure"] = to_json(g, alpha, check);
  return emit(out, o, check.all() ? 0 : 1);
}

int cmd_orbit(const Options& o) {
  Field f = field_option(o).value_or(Field::rationals());
  if (o.caseno < 1 || o.caseno > 4) throw InputError{"--case must be 1..4"};
  Triple xi = parse_xi(o.xi, f);
  OrbitNormalization norm = orbit_normalize(o.caseno, xi);
  auto triple = [](const Triple& t) { return Json{to_json(t[0]), to_json(t[1]), to_json(t[2])}; };
  Json out{{"case", o.caseno},
           {"xi", triple(xi)},
           {"invariant", to_json(orbit_invariant(o.caseno, xi))},
           {"representative", triple(norm.representative)},
           {"lambda", triple(norm.lambda)}};
  return emit(out, o, 0);
}

int cmd_selftest(const Options& o) {
  SelftestConfig cfg;
  cfg.trials = o.trials;
  cfg.field = field_option(o);
  cfg.seed = o.seed;
  bool ok = true;
  Json suites = Json::array();
  for (const SuiteReport& r : run_selftest(cfg)) {
    ok = ok && r.status != SuiteStatus::Fail;
    suites.push_back(Json{{"criterion", r.criterion},
                          {"name", r.name},
                          {"status", to_string(r.status)},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"detail", r.detail}});
  }
  return emit(Json{{"passed", ok}, {"suites", suites}}, o, ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact PBW consistency, normal forms and classification of bi-quadratic algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "Q or fp:<prime>; overrides the file");
  app.add_flag("--json-pretty", o.pretty, "indent JSON output");

  auto* check = app.add_subcommand("check", "consistency residues and verdict");
  check->add_option("file", o.input)->required();
  auto* red = app.add_subcommand("reduce", "PBW normal form of an expression");
  red->add_option("file", o.input)->required();
  red->add_option("--expr", o.expr)->required();
  red->add_option("--order", o.order, "generator order such as 132");
  auto* cls = app.add_subcommand("classify", "canonical form and the transforms reaching it");
  cls->add_option("file", o.input)->required();
  auto* orb = app.add_subcommand("orbit", "torus orbit invariant of a triple");
  orb->add_option("--case", o.caseno)->required();
  orb->add_option("--xi", o.xi, "three values like 1,-2,3/4")->required();
  auto* st = app.add_subcommand("structure", "diskew polynomial / GWA data with verification");
  st->add_option("file", o.input)->required();
  auto* self = app.add_subcommand("selftest", "property suites at reduced counts");
  self->add_option("--trials", o.trials, "base trial count");
  self->add_option("--seed", o.seed);

  for (auto* sub : {check, red, cls, st}) {
    sub->add_option("--perm", o.perm, "relabel generators first, e.g. 132");
    sub->add_option("--scale", o.scale, "scale generators first, e.g. 1,2,1/3");
    sub->add_option("--shift", o.shift, "shift generators first, e.g. 0,0,1");
  }
  for (auto* sub : {check, red, cls, orb, st, self}) {
    sub->add_option("--field", o.field, "Q or fp:<prime>; overrides the file");
    sub->add_flag("--json-pretty", o.pretty, "indent JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto fail = [&](const std::string& msg, int line, int col) {
    Json err{{"error", msg}};
    if (line > 0) {
      err["line"] = line;
      err["column"] = col;
    }
    std::cerr << (line > 0 ? std::to_string(line) + ":" + std::to_string(col) + ": " : "") << msg << "\n";
    return emit(err, o, 2);
  };

  try {
    if (*check) return cmd_check(o);
    if (*red) return cmd_reduce(o);
    if (*cls) return cmd_classify(o);
    if (*orb) return cmd_orbit(o);
    if (*st) return cmd_structure(o);
    if (*self) return cmd_selftest(o);
  } catch (const PresentationError& e) {
    return fail(e.what(), e.line(), e.column());
  } catch (const InputError& e) {
    return fail(e.message, e.line, e.column);
  } catch (const IoError& e) {
    return fail(e.what(), 0, 0);
  } catch (const FieldError& e) {
    return fail(e.what(), 0, 0);
  } catch (const ParseError& e) {
    return fail(e.what(), 1, static_cast<int>(e.position()) + 1);
  } catch (const std::invalid_argument& e) {
    return fail(e.what(), 0, 0);
  } catch (const std::domain_error& e) {
    return emit(Json{{"error", e.what()}}, o, 1);
  }
  return 2;
}
