#include <doctest.h>

#include "bqa/selftest.hpp"
#include "bqa/transform.hpp"

using namespace bqa;

TEST_CASE("torus leaves the quantum space alone") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.q1 = Q.from_int(2);
  A.q2 = Q.from_int(3);
  A.q3 = Q.from_int(5);
  CHECK(apply(A, Transform::torus({Q.from_int(7), Q.parse_literal("1/2"), Q.from_int(-1)})) == A);
}

TEST_CASE("swapping two generators inverts q") {
  Field Q = Field::rationals();
  BqPresentation p(Q, 2);
  p.set_q(2, 1, Q.from_int(3));
  p.set_b(2, 1, Q.one());
  BqPresentation s = apply(p, Transform::permutation(Q, {2, 1}));
  CHECK(s.q(2, 1) == Q.parse_literal("1/3"));
  CHECK(s.b(2, 1) == Q.parse_literal("-1/3"));
}

TEST_CASE("kill_ab") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.q1 = Q.from_int(2);
  A.a = Q.from_int(2);
  A.b = Q.from_int(3);
  auto [B, g] = kill_ab(A);
  CHECK(g.shift[0] == Q.from_int(3));
  CHECK(g.shift[1] == Q.from_int(2));
  CHECK(B.a.is_zero());
  CHECK(B.b.is_zero());
  CHECK(apply(A, g) == B);

  Field F = Field::prime(5);
  Bq3 C = Bq3::zero(F);
  C.q1 = F.from_int(2);
  C.a = C.b = F.one();
  auto [D, h] = kill_ab(C);
  CHECK(h.shift[0] == F.one());  // -1 / (1 - 2) in GF(5)
  CHECK(D.a.is_zero());
  CHECK(D.b.is_zero());
  CHECK(kill_ab(D).second.is_identity());
}

TEST_CASE("kill_alpha") {
  Field Q = Field::rationals();
  Bq3 A = Bq3::zero(Q);
  A.q2 = Q.from_int(3);
  A.alpha = Q.from_int(2);
  auto [B, g] = kill_alpha(A);
  CHECK(B.alpha.is_zero());
  CHECK(is_consistent3(B));
  A.alpha = Q.zero();
  CHECK(kill_alpha(A).second.is_identity());
}

TEST_CASE("action laws on random elements") {
  Rng rng(21);
  for (const Field& f : {Field::prime(101), Field::rationals()})
    for (int t = 0; t < 60; ++t) {
      Bq3 A = t % 2 ? random_consistent(f, rng) : random_bq3(f, rng);
      Transform g = random_transform(f, 3, rng, true), h = random_transform(f, 3, rng, true);
      CHECK(apply(apply(A, g), h) == apply(A, g.then(h)));
      CHECK(apply(A, compose(h, g)) == apply(A, g.then(h)));
      CHECK(apply(apply(A, g), g.inverse()) == A);
      CHECK(is_consistent3(A) == is_consistent3(apply(A, g)));
      CHECK(compose_all({g, h}, f, 3) == g.then(h));
    }
}

TEST_CASE("normal forms transport along a change of generators") {
  Rng rng(22);
  Field f = Field::prime(31);
  for (int t = 0; t < 30; ++t) {
    Bq3 A = random_consistent(f, rng);
    Transform g = random_transform(f, 3, rng, true);
    BqPresentation p = A.to_presentation(), p2 = apply(p, g);
    // the old generators written in the new ones satisfy the old relations modulo the new ones
    auto old = g.old_in_new();
    for (int i = 2; i <= 3; ++i)
      for (int j = 1; j < i; ++j) CHECK(reduce(substitute(p.relation(i, j), old), p2).is_zero());
  }
}

TEST_CASE("transform literals") {
  Field Q = Field::rationals();
  Transform t = parse_transform(Q, 3, "132", "1,2,1/3", "0,0,1");
  CHECK(t.perm == Perm{1, 3, 2});
  CHECK(t.scale[2] == Q.parse_literal("1/3"));
  CHECK(t.shift[2] == Q.one());
  CHECK(parse_transform(Q, 3, "", "", "").is_identity());
  CHECK_THROWS(parse_transform(Q, 3, "112", "", ""));
  CHECK_THROWS(parse_transform(Q, 3, "", "1,0,1", ""));
}
