#include "bqa/consistency3.hpp"

#include <stdexcept>

namespace bqa {

Bq3 Bq3::zero(const Field& f) {
  FieldValue z = f.zero(), o = f.one();
  return Bq3{o, o, o, z, z, z, z, z, z, z, z, z, z, z, z};
}

BqPresentation Bq3::to_presentation() const {
  BqPresentation p(field(), 3);
  p.set_q(2, 1, q1);
  p.set_q(3, 1, q2);
  p.set_q(3, 2, q3);
  const FieldValue* rows[3][3] = {{&a, &b, &c}, {&alpha, &beta, &gamma}, {&lambda, &mu, &nu}};
  const int ij[3][2] = {{2, 1}, {3, 1}, {3, 2}};
  for (int r = 0; r < 3; ++r)
    for (int k = 1; k <= 3; ++k) p.set_a(ij[r][0], ij[r][1], k, *rows[r][k - 1]);
  p.set_b(2, 1, b1);
  p.set_b(3, 1, b2);
  p.set_b(3, 2, b3);
  return p;
}

Bq3 Bq3::from_presentation(const BqPresentation& p) {
  if (p.n() != 3) throw std::invalid_argument("expected a presentation on 3 generators");
  return Bq3{p.q(2, 1),    p.q(3, 1),    p.q(3, 2),    p.a(2, 1, 1), p.a(2, 1, 2),
             p.a(2, 1, 3), p.a(3, 1, 1), p.a(3, 1, 2), p.a(3, 1, 3), p.a(3, 2, 1),
             p.a(3, 2, 2), p.a(3, 2, 3), p.b(2, 1),    p.b(3, 1),    p.b(3, 2)};
}

const FieldValue& ConsistencyResidues::at(const std::string& label) const {
  for (std::size_t k = 0; k < kLabels.size(); ++k)
    if (label == kLabels[k]) return values[k];
  throw std::out_of_range("unknown residue label " + label);
}

bool ConsistencyResidues::all_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

ConsistencyResidues residues(const Bq3& A) {
  const Field f = A.field();
  const FieldValue one = f.one();
  const auto& [q1, q2, q3, a, b, c, al, be, ga, la, mu, nu, b1, b2, b3] = A;
  ConsistencyResidues r;
  r.values[0] = (one - q3) * al - (one - q2) * mu;
  r.values[1] = (one - q3) * a - (one - q1) * nu;
  r.values[2] = (one - q2) * b - (one - q1) * ga;
  r.values[3] = (one - q1 * q2) * la;
  r.values[4] = (q1 - q3) * be;
  r.values[5] = (one - q2 * q3) * c;
  r.values[6] = ((one - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - one) * b3;
  r.values[7] = (a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2;
  r.values[8] = (a + (q1 - one) * nu) * ga + b * nu - (mu + q3 * al) * c + (one - q2 * q3) * b1;
  r.values[9] = -((mu + q3 * al) * b1) + (a - nu) * b2 + (b + q1 * ga) * b3;
  return r;
}

bool is_consistent3(const Bq3& A) { return residues(A).all_zero(); }

}  // namespace bqa
