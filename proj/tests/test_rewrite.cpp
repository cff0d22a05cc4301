#include <doctest.h>

#include <random>

#include "bqa/presentation_io.hpp"
#include "bqa/rewrite.hpp"

using namespace bqa;

namespace {

BqPresentation heisenberg(const Field& f) {
  BqPresentation p(f, 3);
  p.set_a(2, 1, 3, f.one());
  return p;
}

NcPoly expr(const char* s, const Field& f) { return parse_expr(s, 3, f); }

}  // namespace

TEST_CASE("quantum plane") {
  Field Q = Field::rationals();
  BqPresentation p(Q, 3);
  p.set_q(2, 1, Q.from_int(5));
  CHECK(reduce(expr("x2*x1", Q), p) == expr("5*x1*x2", Q));
  CHECK(reduce(expr("x1*x2", Q), p) == expr("x1*x2", Q));
  // x2^a x1^b = q^(ab) x1^b x2^a
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      NcPoly lhs = NcPoly::generator(Q, 3, 2).pow(a) * NcPoly::generator(Q, 3, 1).pow(b);
      NcPoly rhs = (NcPoly::generator(Q, 3, 1).pow(b) * NcPoly::generator(Q, 3, 2).pow(a)).scaled(Q.from_int(5).pow(a * b));
      CHECK(reduce(lhs, p) == rhs);
    }
}

TEST_CASE("Heisenberg normal forms") {
  Field Q = Field::rationals();
  BqPresentation p = heisenberg(Q);
  // x3 x2 x1 -> x3 (x1 x2 + x3) -> x1 x2 x3 + x3^2
  CHECK(reduce(expr("x3*x2*x1", Q), p) == expr("x1*x2*x3 + x3^2", Q));
  // x2^n x1 = x1 x2^n + n x3 x2^(n-1)
  for (unsigned n = 1; n < 6; ++n) {
    NcPoly lhs = NcPoly::generator(Q, 3, 2).pow(n) * NcPoly::generator(Q, 3, 1);
    NcPoly rhs = NcPoly::generator(Q, 3, 1) * NcPoly::generator(Q, 3, 2).pow(n) +
                 (NcPoly::generator(Q, 3, 2).pow(n - 1) * NcPoly::generator(Q, 3, 3)).scaled(Q.from_int(n));
    CHECK(reduce(lhs, p) == rhs);
  }
  CHECK(is_normal(reduce(expr("(x3+x2+x1)^4", Q), p)));
}

TEST_CASE("strategies agree on a consistent presentation") {
  Field F = Field::prime(11);
  BqPresentation p = heisenberg(F);
  p.set_b(3, 2, F.from_int(4));
  Reducer l(p, Strategy::LeftmostDescent), r(p, Strategy::RightmostDescent);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    Word w(rng() % 7);
    for (auto& c : w) c = static_cast<std::uint8_t>(1 + rng() % 3);
    NcPoly x = NcPoly::monomial(F, 3, w, F.one());
    CHECK(l.reduce(x) == r.reduce(x));
  }
}

TEST_CASE("overlap check") {
  Field Q = Field::rationals();
  BqPresentation qs(Q, 4);
  qs.set_q(2, 1, Q.from_int(2));
  qs.set_q(4, 3, Q.parse_literal("1/3"));
  qs.set_q(4, 1, Q.from_int(7));
  CHECK(overlap_check(qs).empty());

  // [x2,x1] = x1, [x3,x1] = x2, [x3,x2] = 0 breaks the Jacobi identity
  BqPresentation bad(Q, 3);
  bad.set_a(2, 1, 1, Q.one());
  bad.set_a(3, 1, 2, Q.one());
  auto rep = overlap_check(bad);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].k == 3);
  CHECK(rep[0].j == 2);
  CHECK(rep[0].i == 1);
  CHECK_FALSE(rep[0].difference.is_zero());
  CHECK_FALSE(pbw_consistent(bad));
}

TEST_CASE("reordered normal forms") {
  Field Q = Field::rationals();
  BqPresentation plane(Q, 3);
  plane.set_q(2, 1, Q.from_int(3));
  CHECK(reduce_in_order(expr("x2*x1", Q), plane, {2, 1, 3}) == expr("x2*x1", Q));
  CHECK(reduce_in_order(expr("x1*x2", Q), plane, {2, 1, 3}) == expr("1/3*x2*x1", Q));

  BqPresentation h = heisenberg(Q);
  CHECK(reduce_in_order(expr("x2*x1", Q), h, {1, 2, 3}) == expr("x1*x2 + x3", Q));
  CHECK(reduce_in_order(expr("x1*x2", Q), h, {2, 1, 3}) == expr("x2*x1 - x3", Q));

  BqPresentation bad(Q, 3);
  bad.set_a(2, 1, 1, Q.one());
  bad.set_a(3, 1, 2, Q.one());
  CHECK_THROWS_AS(reduce_in_order(expr("x1", Q), bad, {3, 2, 1}), std::domain_error);
}

TEST_CASE("presentation files") {
  Field Q = Field::rationals();
  BqPresentation p = parse_presentation("# comment\nn = 3; field = \"Q\"\nq = [2, 1/2, 3]\nB = [0, 1, 0]\nc = 5\n");
  CHECK(p.q(2, 1) == Q.from_int(2));
  CHECK(p.q(3, 1) == Q.parse_literal("1/2"));
  CHECK(p.b(3, 1) == Q.one());
  CHECK(p.a(2, 1, 3) == Q.from_int(5));
  CHECK(parse_presentation(write_presentation(p)) == p);

  BqPresentation f7 = parse_presentation("q1 = 3", Field::prime(7));
  CHECK(f7.field() == Field::prime(7));

  auto error_at = [](const char* text) {
    try {
      parse_presentation(text);
    } catch (const PresentationError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  CHECK(error_at("q1 = 2\nzeta = 1\n") == std::make_pair(2, 1));
  CHECK(error_at("q1 = 2\nq1 = 3\n").first == 2);
  CHECK(error_at("q = [1, 2\n").first >= 1);
  CHECK(error_at("q1 = 0\n").first == 1);
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.bqa"), IoError);
}
