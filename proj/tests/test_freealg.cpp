#include <doctest.h>

#include <random>

#include "bqa/freealg.hpp"

using namespace bqa;

TEST_CASE("deglex order") {
  CHECK(deglex_compare({1, 3}, {2, 1, 1}) < 0);
  CHECK(deglex_compare({1, 2}, {1, 2}) == 0);
  CHECK(deglex_compare({2, 1}, {1, 3}) > 0);
  CHECK(deglex_compare({}, {1}) < 0);
}

TEST_CASE("products keep the letter order") {
  Field Q = Field::rationals();
  NcPoly x1 = NcPoly::generator(Q, 3, 1), x2 = NcPoly::generator(Q, 3, 2);
  NcPoly one = NcPoly::constant(Q, 3, Q.one());
  CHECK((x2 * x1).render() == "x2*x1");
  CHECK(((x1 + one) * (x1 - one)).render() == "x1^2 - 1");
  Field F = Field::prime(5);
  NcPoly y1 = NcPoly::generator(F, 3, 1), y2 = NcPoly::generator(F, 3, 2);
  CHECK((y1.scaled(F.from_int(2)) * y2.scaled(F.from_int(3))).render() == "x1*x2");
  CHECK((x1 - x1).is_zero());
  CHECK(NcPoly(Q, 3).render() == "0");
}

TEST_CASE("parser") {
  Field Q = Field::rationals();
  NcPoly e = parse_expr("x2*x1 - 2*x1*x2", 3, Q);
  CHECK(e.coeff({2, 1}) == Q.one());
  CHECK(e.coeff({1, 2}) == Q.from_int(-2));
  CHECK(parse_expr("(x1+1)*(x1-1)", 3, Q).render() == "x1^2 - 1");
  CHECK(parse_expr("1/2*x3^2 + x1*x2*x3", 3, Q).render() == "x1*x2*x3 + 1/2*x3^2");
  CHECK(parse_expr("-x1", 3, Q).render() == "-x1");
  CHECK(parse_expr("2*(x1+x2)^2", 2, Q) == parse_expr("2*x1^2 + 2*x1*x2 + 2*x2*x1 + 2*x2^2", 2, Q));
  CHECK_THROWS_AS(parse_expr("x4", 3, Q), ParseError);
  CHECK_THROWS_AS(parse_expr("(x1", 3, Q), ParseError);
  CHECK_THROWS_AS(parse_expr("x1 $ x2", 3, Q), ParseError);
  try {
    parse_expr("x1 + x9", 3, Q);
  } catch (const ParseError& err) {
    CHECK(err.position() == 5);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Field F = Field::prime(7);
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    NcPoly p(F, 3);
    for (int k = 0; k < 4; ++k) {
      Word w(rng() % 4);
      for (auto& l : w) l = static_cast<std::uint8_t>(1 + rng() % 3);
      p.add_term(w, F.from_int(static_cast<long>(rng() % 7)));
    }
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    NcPoly a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a.pow(2) == a * a);
  }
}
