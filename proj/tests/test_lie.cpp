#include <doctest.h>

#include "bqa/classify.hpp"
#include "bqa/selftest.hpp"

using namespace bqa;

TEST_CASE("crafted inputs") {
  Field Q = Field::rationals();
  for (const auto& [want, A] : crafted_lie_inputs(Q)) {
    CAPTURE(to_string(want));
    CHECK(StructureConstants(A).satisfies_jacobi());
    CHECK(lie_type(lie_invariants(A)) == want);
  }
}

TEST_CASE("invariants of the abelian, Heisenberg and sl2 algebras") {
  Field Q = Field::rationals();
  auto crafted = crafted_lie_inputs(Q);
  LieInvariants p3 = lie_invariants(crafted[0].second);
  CHECK(p3.dim_center == 4);
  CHECK(p3.dim_derived == 0);
  LieInvariants sl2 = lie_invariants(crafted[1].second);
  CHECK(sl2.dim_center == 1);
  CHECK(sl2.dim_derived == 3);
  CHECK_FALSE(sl2.solvable);
  LieInvariants h3 = lie_invariants(crafted[2].second);
  CHECK(h3.dim_center == 2);
  CHECK(h3.nilpotent);
  CHECK_FALSE(h3.z_in_derived);
}

TEST_CASE("a central extension by z alone") {
  // [x2, x1] = z: Heisenberg times a line, not P3
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.b1 = Q.one();
  LieInvariants inv = lie_invariants(A);
  CHECK(inv.dim_center == 2);
  CHECK(inv.z_in_derived);
  CHECK(lie_type(inv) == LieType::UN_mod);
}

TEST_CASE("three-dimensional solvable algebras outside the list") {
  // [x3, x1] = x1, [x3, x2] = 2 x2
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.alpha = Q.one();
  A.mu = Q.from_int(2);
  REQUIRE(is_consistent3(A));
  LieInvariants inv = lie_invariants(A);
  CHECK(inv.solvable);
  CHECK_FALSE(inv.nilpotent);
  CHECK(inv.dim_derived == 2);
  CHECK(lie_type(inv) == LieType::Unlisted);
}

TEST_CASE("Lie types are invariant under changes of generators") {
  Rng rng(41);
  for (const Field& f : {Field::rationals(), Field::prime(31)})
    for (const auto& [want, A] : crafted_lie_inputs(f))
      for (int t = 0; t < 10; ++t) {
        Bq3 B = apply(A, random_transform(f, 3, rng, true));
        CHECK(lie_invariants(B) == lie_invariants(A));
      }
}

TEST_CASE("lie_classify refuses other inputs") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.q1 = Q.from_int(2);
  CHECK_THROWS_AS(lie_classify(A), std::domain_error);
  Bq3 bad = Bq3::zero(Q);
  bad.alpha = bad.lambda = bad.mu = bad.nu = Q.one();
  CHECK_THROWS_AS(lie_classify(bad), std::domain_error);
  CHECK_THROWS_AS(StructureConstants{A}, std::domain_error);
}
