// One line per acceptance criterion, at the full sample counts.
#include <chrono>
#include <cstdio>
#include <functional>

#include "bqa/selftest.hpp"

using namespace bqa;

int main() {
  const Field Q = Field::rationals();
  Rng rng(20181017);
  bool all = true;
  auto run = [&](const std::function<SuiteReport()>& suite) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = suite();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = r.status == SuiteStatus::Pass;
    all = all && pass;
    std::printf("criterion %d: %s  %s  cases=%llu failures=%llu  %.1fs  %s\n", r.criterion, pass ? "PASS" : "FAIL",
                r.name.c_str(), static_cast<unsigned long long>(r.cases), static_cast<unsigned long long>(r.failures),
                s, r.detail.c_str());
    std::fflush(stdout);
  };
  run([&] { return suite_oracle({Field::prime(5), Field::prime(7)}, 10000, rng); });
  run([&] { return suite_confluence({Q, Field::prime(7), Field::prime(101)}, 1000, rng); });
  run([&] { return suite_reordering({Q, Field::prime(7), Field::prime(101)}, 200, rng); });
  run([&] { return suite_invariance({Field::prime(101), Q}, 500, 20, rng); });
  run([&] { return suite_orbits({Field::prime(7), Field::prime(11)}); });
  run([&] { return suite_lie(Q); });
  run([&] { return suite_structure({Q, Field::prime(7)}, 200, rng); });
  run([&] { return suite_quantum(Q, Field::prime(11), rng); });
  return all ? 0 : 1;
}
