#include <doctest.h>

#include <set>

#include "bqa/field.hpp"

using namespace bqa;

TEST_CASE("rational arithmetic") {
  Field Q = Field::rationals();
  CHECK(div(Q.from_int(1), Q.from_int(3)).to_string() == "1/3");
  CHECK(add(Q.parse_literal("1/2"), Q.parse_literal("1/3")).to_string() == "5/6");
  CHECK(Q.parse_literal("-4/6").to_string() == "-2/3");
  CHECK(Q.from_int(5).inverse().to_string() == "1/5");
  CHECK(Q.parse_literal("2/3").pow(-2).to_string() == "9/4");
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK(mul(F.from_int(3), F.from_int(5)).is_one());
  CHECK(F.from_int(-1).to_string() == "6");
  CHECK(F.parse_literal("1/2").to_string() == "4");
  for (int x = 1; x < 7; ++x) CHECK((F.from_int(x) * F.from_int(x).inverse()).is_one());
  CHECK(F.from_int(3).pow(6).is_one());
}

TEST_CASE("field errors") {
  Field Q = Field::rationals(), F = Field::prime(5);
  CHECK_THROWS_AS(Q.one() + F.one(), FieldError);
  CHECK_THROWS_AS(Q.one() / Q.zero(), FieldError);
  CHECK_THROWS_AS(F.zero().inverse(), FieldError);
  CHECK_THROWS_AS(Field::prime(9), FieldError);
  CHECK_THROWS_AS(Field::parse("fp:"), FieldError);
  CHECK_THROWS_AS(Field::parse("R"), FieldError);
  CHECK_THROWS_AS(F.parse_literal("1/5"), FieldError);
  CHECK_THROWS_AS(Q.parse_literal("1/"), FieldError);
  CHECK(Field::parse("fp:11") == Field::prime(11));
  CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("power classes over Q") {
  Field Q = Field::rationals();
  CHECK(power_class(Q.from_int(8), 2).representative == Q.from_int(2));
  CHECK(power_class(Q.from_int(-4), 2).representative == Q.from_int(-1));
  CHECK(power_class(Q.parse_literal("3/4"), 2).representative == Q.from_int(3));
  CHECK(power_class(Q.from_int(-8), 3).representative.is_one());
  CHECK(power_class(Q.from_int(48), 4).representative == Q.from_int(3));
  CHECK(same_class(Q.from_int(2), Q.from_int(8), 2));
  CHECK_FALSE(same_class(Q.from_int(2), Q.from_int(3), 2));
  CHECK(class_count(Q, 2) == 0);
}

TEST_CASE("power classes over GF(p) against enumeration") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    Field F = Field::prime(p);
    for (int n : {2, 3, 4}) {
      std::set<std::uint32_t> powers;
      for (std::uint32_t x = 1; x < p; ++x) powers.insert(F.from_int(x).pow(n).residue());
      std::set<std::uint32_t> reps;
      for (std::uint32_t x = 1; x < p; ++x) {
        FieldValue v = F.from_int(x);
        FieldValue r = power_class(v, n).representative;
        reps.insert(r.residue());
        CHECK(powers.count((v / r).residue()) == 1);  // same coset
        auto root = nth_root(v, n);
        CHECK(root.has_value() == (powers.count(x) == 1));
        if (root) CHECK(root->pow(n) == v);
      }
      CHECK(reps.size() == (p - 1) / powers.size());
      CHECK(class_count(F, n) == reps.size());
    }
  }
  Field F7 = Field::prime(7);
  CHECK(same_class(F7.from_int(3), F7.from_int(5), 2));
  CHECK_FALSE(same_class(F7.from_int(3), F7.from_int(2), 2));
}

TEST_CASE("roots in a large prime field") {
  Field F = Field::prime(1000003);
  for (long x : {2L, 3L, 12345L, 999999L}) {
    FieldValue v = F.from_int(x);
    for (int n : {2, 3, 4}) {
      FieldValue sq = v.pow(n);
      auto r = nth_root(sq, n);
      REQUIRE(r.has_value());
      CHECK(r->pow(n) == sq);
    }
  }
}

TEST_CASE("rational roots") {
  Field Q = Field::rationals();
  CHECK(nth_root(Q.parse_literal("9/4"), 2) == Q.parse_literal("3/2"));
  CHECK_FALSE(nth_root(Q.from_int(2), 2).has_value());
  CHECK_FALSE(nth_root(Q.from_int(-4), 2).has_value());
  CHECK(nth_root(Q.from_int(-8), 3) == Q.from_int(-2));
}
