#include <doctest.h>

#include "bqa/selftest.hpp"
#include "bqa/structure.hpp"

using namespace bqa;

namespace {

Bq3 oneq(const Field& f, long q1, long alpha, long mu) {
  Bq3 A = Bq3::zero(f);
  A.q1 = f.from_int(q1);
  A.q2 = A.q3 = f.one();
  A.alpha = f.from_int(alpha);
  A.mu = f.from_int(mu);
  return A;
}

}  // namespace

TEST_CASE("OneQ with mu = 0 and alpha = 1") {
  Field Q = Field::rationals();
  Classification3 c = classify3(oneq(Q, 2, 1, 0));
  auto d = to_dpr(c.form);
  REQUIRE(d);
  CHECK(d->sigma == Affine{Q.one(), Q.zero()});
  CHECK(d->tau == Affine{Q.one(), Q.from_int(-1)});
  CHECK(d->rho == Q.from_int(2));
  GwaData g = gwa_lift(*d);
  CHECK(verify_structure(c.canonical, g, central_element(*d)).all());
}

TEST_CASE("GWA lift formulas") {
  Field Q = Field::rationals();
  DprData d;
  d.x = 2;
  d.y = 1;
  d.t = 3;
  d.rho = Q.from_int(3);
  d.sigma = {Q.one(), Q.from_int(2)};
  d.tau = {Q.one(), Q.from_int(-5)};
  d.b = {Q.from_int(4), Q.from_int(7)};
  GwaData g = gwa_lift(d);
  CHECK(g.sigma_h == HExpr{Q.from_int(3), Q.from_int(4), Q.from_int(7)});
  // tau(h) = (h - 4 (t - 5) - 7) / 3
  CHECK(g.tau_h == HExpr{Q.parse_literal("1/3"), Q.parse_literal("-4/3"), Q.parse_literal("13/3")});
  CHECK(g.nu == Affine{Q.one(), Q.from_int(-3)});
}

TEST_CASE("central elements") {
  Field Q = Field::rationals();
  // TwoQ with q1 = 2, lambda = 1: C = h + 2 x1
  Bq3 A = Bq3::zero(Q);
  A.q1 = Q.from_int(2);
  A.q2 = Q.parse_literal("1/2");
  A.q3 = Q.one();
  A.lambda = Q.one();
  Classification3 c = classify3(A);
  REQUIRE(c.form.tag() == "TwoQ.Q1Q2Unit");
  auto d = to_dpr(c.form);
  REQUIRE(d);
  auto alpha = central_element(*d);
  REQUIRE(alpha);
  CHECK(*alpha == Affine{Q.from_int(2), Q.zero()});
  CHECK(verify_structure(c.canonical, gwa_lift(*d), alpha).all());

  // rho != 1: none
  DprData e = *d;
  e.rho = Q.from_int(3);
  CHECK_FALSE(central_element(e));

  // b = 0, sigma = tau = id: C = h
  DprData z = *d;
  z.sigma = z.tau = Affine{Q.one(), Q.zero()};
  z.b = Affine{Q.zero(), Q.zero()};
  auto zero_alpha = central_element(z);
  REQUIRE(zero_alpha);
  CHECK(zero_alpha->u.is_zero());
  CHECK(zero_alpha->v.is_zero());

  // sigma = id but b has a t-term: alpha - sigma(alpha) cannot reach it
  DprData w = z;
  w.b = Affine{Q.one(), Q.zero()};
  CHECK_FALSE(central_element(w));
}

TEST_CASE("families without a DPR") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.q1 = Q.from_int(2);
  A.q2 = Q.from_int(4);
  A.q3 = Q.from_int(3);
  CHECK_FALSE(to_dpr(classify3(A).form));
  CHECK_FALSE(to_dpr(classify3(Bq3::zero(Q)).form));
}

TEST_CASE("random members verify in the algebra") {
  Rng rng(61);
  for (const Field& f : {Field::rationals(), Field::prime(13), Field::prime(101)})
    for (Family fam : {Family::OneQ, Family::TwoQ})
      for (int t = 0; t < 25; ++t) {
        Bq3 A = random_family_member(fam, f, rng);
        Classification3 c = classify3(apply(A, random_transform(f, 3, rng, true)));
        auto d = to_dpr(c.form);
        if (!d) continue;
        StructureCheck chk = verify_structure(c.canonical, gwa_lift(*d), central_element(*d));
        for (const auto& [name, ok] : chk.items) {
          CAPTURE(name);
          CAPTURE(c.form.tag());
          CHECK(ok);
        }
      }
}

TEST_CASE("tampered data is rejected") {
  Field Q = Field::rationals();
  Classification3 c = classify3(oneq(Q, 3, 1, 2));
  auto d = to_dpr(c.form);
  REQUIRE(d);
  DprData bad = *d;
  bad.sigma.v = bad.sigma.v + Q.one();
  CHECK_FALSE(verify_structure(c.canonical, gwa_lift(bad), std::nullopt).all());
  DprData bad_rho = *d;
  bad_rho.rho = bad_rho.rho + Q.one();
  CHECK_FALSE(verify_structure(c.canonical, gwa_lift(bad_rho), std::nullopt).all());
}
