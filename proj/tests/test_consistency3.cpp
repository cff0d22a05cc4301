#include <doctest.h>

#include "bqa/consistency3.hpp"
#include "bqa/selftest.hpp"

using namespace bqa;

namespace {

Bq3 aw3(const Field& f, const FieldValue& w, const FieldValue& B, const FieldValue& C0, const FieldValue& C1,
        const FieldValue& D0, const FieldValue& D1) {
  // [K0,K1]_w = K2, [K2,K0]_w = B K0 + C1 K1 + D1, [K1,K2]_w = B K1 + C0 K0 + D0 with x1 = K0, x2 = K1, x3 = K2
  Bq3 A = Bq3::zero(f);
  FieldValue wi = w.inverse();
  A.q1 = w * w;
  A.c = -w;
  A.q2 = wi * wi;
  A.alpha = B * wi;
  A.beta = C1 * wi;
  A.b2 = D1 * wi;
  A.q3 = w * w;
  A.lambda = -(w * C0);
  A.mu = -(w * B);
  A.b3 = -(w * D0);
  return A;
}

}  // namespace

TEST_CASE("no linear or constant terms means consistent") {
  Rng rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(5)})
    for (int t = 0; t < 50; ++t) {
      Bq3 A = Bq3::zero(f);
      A.q1 = random_unit(f, rng);
      A.q2 = random_unit(f, rng);
      A.q3 = random_unit(f, rng);
      CHECK(residues(A).all_zero());
    }
}

TEST_CASE("quantum presentations are consistent for every c, beta, lambda, b1, b2, b3") {
  Rng rng(8);
  for (const Field& f : {Field::rationals(), Field::prime(13)})
    for (int t = 0; t < 100; ++t) {
      FieldValue q = random_nonunit(f, rng);
      Triple tr{random_element(f, rng), random_element(f, rng), random_element(f, rng)};
      Bq3 A = quantum_from_case_triple(1, tr, q,
                                       {random_element(f, rng), random_element(f, rng), random_element(f, rng)});
      CHECK(is_consistent3(A));
    }
}

TEST_CASE("Jacobi failure shows up in the X1 residue") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.alpha = Q.one();
  A.mu = Q.one();
  CHECK(residues(A).all_zero());
  A.lambda = Q.one();
  A.nu = Q.one();
  ConsistencyResidues r = residues(A);
  CHECK(r.at("X1") == Q.from_int(-1));
  CHECK_FALSE(is_consistent3(A));
  CHECK_FALSE(overlap_check(A.to_presentation()).empty());
  CHECK_THROWS(r.at("X4"));
}

TEST_CASE("U(sl2) and U'_q(so3)") {
  Field Q = Field::rationals();
  Bq3 sl2 = Bq3::zero(Q);
  sl2.c = Q.from_int(-1);
  sl2.alpha = Q.from_int(2);
  sl2.mu = Q.from_int(-2);
  CHECK(is_consistent3(sl2));
  Bq3 so3 = Bq3::zero(Q);
  so3.q1 = so3.q3 = Q.from_int(4);
  so3.q2 = Q.parse_literal("1/4");
  so3.c = Q.from_int(-2);
  so3.beta = Q.parse_literal("1/2");
  so3.lambda = Q.from_int(-2);
  CHECK(is_consistent3(so3));
  CHECK(overlap_check(so3.to_presentation()).empty());
}

TEST_CASE("AW(3) agrees with the overlap oracle") {
  Rng rng(9);
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (int t = 0; t < 40; ++t) {
      FieldValue w = random_unit(f, rng);
      if ((w * w).is_one()) continue;
      Bq3 A = aw3(f, w, random_element(f, rng), random_element(f, rng), random_element(f, rng),
                  random_element(f, rng), random_element(f, rng));
      CHECK(is_consistent3(A) == overlap_check(A.to_presentation()).empty());
    }
}

TEST_CASE("residues agree with the overlap oracle near consistent presentations") {
  Rng rng(10);
  for (const Field& f : {Field::prime(3), Field::prime(7), Field::rationals()})
    for (int t = 0; t < 300; ++t) {
      Bq3 A = f.is_prime() && f.modulus() == 3 ? random_bq3(f, rng) : random_consistent(f, rng);
      CHECK(is_consistent3(A) == overlap_check(A.to_presentation()).empty());
      A.b3 += random_element(f, rng);
      A.nu += random_element(f, rng);
      CHECK(is_consistent3(A) == overlap_check(A.to_presentation()).empty());
    }
}

TEST_CASE("round trip through the general presentation") {
  Rng rng(11);
  Field f = Field::prime(7);
  for (int t = 0; t < 20; ++t) {
    Bq3 A = random_bq3(f, rng);
    CHECK(Bq3::from_presentation(A.to_presentation()) == A);
  }
}
