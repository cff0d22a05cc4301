#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BQA_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string sample(const std::string& name) { return std::string(BQA_SAMPLES) + "/" + name + ".bqa"; }

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("check") {
  Run ok = run("check " + sample("aw3"));
  CHECK(ok.code == 0);
  CHECK(js(ok)["consistent"] == true);
  Run bad = run("check " + sample("jacobi_fail"));
  CHECK(bad.code == 1);
  CHECK(js(bad)["residues"]["X1"] == "-1");
  Run two = run("check " + sample("weyl2"));
  CHECK(two.code == 0);
  CHECK(js(two)["overlaps"].empty());
}

TEST_CASE("classify") {
  auto j = js(run("classify " + sample("uqso3")));
  CHECK(j["family"] == "ThreeQ.Quantum");
  CHECK(j["case"] == 1);
  CHECK(js(run("classify " + sample("usl2")))["family"] == "LieType.Usl2");
  CHECK(js(run("classify " + sample("heisenberg")))["family"] == "LieType.UH3");
  CHECK(js(run("classify " + sample("weyl2")))["family"] == "TwoGen.Weyl");
  CHECK(js(run("classify " + sample("threeq_c5")))["family"] == "ThreeQ.C5");
  CHECK(run("classify " + sample("jacobi_fail")).code == 1);
}

TEST_CASE("a change of generators keeps the family") {
  Run moved = run("classify " + sample("uqso3") + " --perm 231 --scale 2,1/3,5 --shift 1,0,-1");
  CHECK(moved.code == 0);
  CHECK(js(moved)["family"] == "ThreeQ.Quantum");
  CHECK(js(moved)["case"] == 1);
  CHECK(run("classify " + sample("uqso3") + " --scale 0,1,1").code == 2);
}

TEST_CASE("reduce") {
  Run r = run("reduce " + sample("heisenberg") + " --expr 'x2*x1'");
  CHECK(r.code == 0);
  CHECK(js(r)["normal_form"] == "x1*x2 + x3");
  Run o = run("reduce " + sample("quantum_space") + " --expr 'x1*x2' --order 321");
  CHECK(o.code == 0);
  CHECK(js(o)["order"] == "321");
}

TEST_CASE("orbit") {
  Run r = run("orbit --field fp:7 --case 1 --xi 3,3,3");
  CHECK(r.code == 0);
  auto j = js(r);
  CHECK(j["case"] == 1);
  CHECK(j["representative"].size() == 3);
}

TEST_CASE("structure") {
  Run r = run("structure " + sample("twoq_unit"));
  CHECK(r.code == 0);
  auto j = js(r);
  CHECK(j["structure"]["verified"] == true);
  CHECK(j["structure"]["central_element"] == "h + 2*x1");
  Run none = run("structure " + sample("threeq_c5"));
  CHECK(none.code == 1);
  CHECK(js(none)["structure"].is_null());
}

TEST_CASE("input errors exit 2 with a position") {
  Run r = run("reduce " + sample("heisenberg") + " --expr 'x1 + x9'");
  CHECK(r.code == 2);
  CHECK(js(r).contains("column"));
  CHECK(run("check /nonexistent/file.bqa").code == 2);
  CHECK(run("check " + sample("aw3") + " --field fp:8").code == 2);
  CHECK(run("orbit --case 7 --xi 1,1,1").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("output is deterministic") {
  std::string a = run("classify " + sample("aw3")).out;
  CHECK(a == run("classify " + sample("aw3")).out);
  Run s1 = run("selftest --field fp:7 --trials 60");
  CHECK(s1.code == 0);
  CHECK(js(s1)["passed"] == true);
  CHECK(s1.out == run("selftest --field fp:7 --trials 60").out);
}
