#include <doctest.h>

#include "bqa/orbit.hpp"
#include "bqa/selftest.hpp"

using namespace bqa;

TEST_CASE("worked invariants") {
  Field Q = Field::rationals();
  OrbitInvariant inv = orbit_invariant(1, {Q.one(), Q.from_int(2), Q.from_int(3)});
  REQUIRE(inv.classes.size() == 2);
  CHECK(inv.classes[0].representative == Q.from_int(2));
  CHECK(inv.classes[1].representative == Q.from_int(3));
  CHECK(orbit_invariant(3, {Q.one(), Q.one(), Q.from_int(2)}).classes[0].representative == Q.from_int(2));
  CHECK(orbit_invariant(3, {Q.one(), Q.one(), Q.from_int(16)}).classes[0].representative == Q.from_int(2));
  CHECK(orbit_invariant(3, {Q.one(), Q.one(), Q.from_int(8)}).classes[0].representative.is_one());
  Triple e3{Q.zero(), Q.zero(), Q.one()};
  CHECK(orbit_representative(orbit_invariant(1, e3), Q) == e3);
}

TEST_CASE("case 4 dense invariant is xi3/(xi1 xi2) mod squares") {
  // over GF(7) the squares are {1, 2, 4}; (3,1,1) and (1,1,1) differ by the class of 3
  Field F = Field::prime(7);
  Triple a{F.from_int(3), F.one(), F.one()}, b{F.one(), F.one(), F.one()};
  bool same_orbit = false;
  for (int l1 = 1; l1 < 7; ++l1)
    for (int l2 = 1; l2 < 7; ++l2)
      for (int l3 = 1; l3 < 7; ++l3)
        if (torus_act(4, {F.from_int(l1), F.from_int(l2), F.from_int(l3)}, a) == b) same_orbit = true;
  CHECK_FALSE(same_orbit);
  CHECK_FALSE(orbit_invariant(4, a) == orbit_invariant(4, b));
}

TEST_CASE("invariants are constant on orbits and normalization lands on the representative") {
  Rng rng(31);
  for (const Field& f : {Field::rationals(), Field::prime(13), Field::prime(1000003)})
    for (int caseno = 1; caseno <= 4; ++caseno)
      for (int t = 0; t < 60; ++t) {
        Triple xi;
        for (auto& x : xi) x = rng() % 4 == 0 ? f.zero() : random_unit(f, rng);
        Triple lam{random_unit(f, rng), random_unit(f, rng), random_unit(f, rng)};
        OrbitInvariant inv = orbit_invariant(caseno, xi);
        CHECK(orbit_invariant(caseno, torus_act(caseno, lam, xi)) == inv);
        OrbitNormalization n = orbit_normalize(caseno, xi);
        CHECK(torus_act(caseno, n.lambda, xi) == n.representative);
        CHECK(n.representative == orbit_representative(inv, f));
        CHECK(orbit_invariant(caseno, n.representative) == inv);
      }
}

TEST_CASE("exhaustive orbit census over GF(7)") {
  SuiteReport r = suite_orbits({Field::prime(7)});
  CHECK(r.status == SuiteStatus::Pass);
  CHECK(r.failures == 0);
}
