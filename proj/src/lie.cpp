#include "bqa/lie.hpp"

#include <stdexcept>

namespace bqa {

namespace {

LieVector zero_vector(const Field& f) { return {f.zero(), f.zero(), f.zero(), f.zero()}; }

bool is_zero(const LieVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

int rank_of(const std::vector<LieVector>& vs) { return static_cast<int>(span_basis(vs).size()); }

bool in_span(const std::vector<LieVector>& basis, const LieVector& v) {
  auto with = basis;
  with.push_back(v);
  return rank_of(with) == static_cast<int>(basis.size());
}

}  // namespace

StructureConstants::StructureConstants(const Bq3& A) : field_(A.field()) {
  if (!A.q1.is_one() || !A.q2.is_one() || !A.q3.is_one())
    throw std::domain_error("Lie structure requires q1 = q2 = q3 = 1");
  for (auto& row : table_) row.fill(zero_vector(field_));
  // [x_i, x_j] for i > j, with index 3 standing for z.
  auto set = [&](int i, int j, const FieldValue& c1, const FieldValue& c2, const FieldValue& c3,
                 const FieldValue& cz) {
    table_[i][j] = {c1, c2, c3, cz};
    table_[j][i] = {-c1, -c2, -c3, -cz};
  };
  set(1, 0, A.a, A.b, A.c, A.b1);
  set(2, 0, A.alpha, A.beta, A.gamma, A.b2);
  set(2, 1, A.lambda, A.mu, A.nu, A.b3);
}

LieVector StructureConstants::basis(int i) const {
  LieVector v = zero_vector(field_);
  v[i] = field_.one();
  return v;
}

LieVector StructureConstants::bracket(const LieVector& u, const LieVector& v) const {
  LieVector out = zero_vector(field_);
  for (int i = 0; i < 4; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (v[j].is_zero()) continue;
      FieldValue s = u[i] * v[j];
      for (int k = 0; k < 4; ++k) out[k] += s * table_[i][j][k];
    }
  }
  return out;
}

bool StructureConstants::satisfies_jacobi() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        LieVector s = bracket(bracket(basis(i), basis(j)), basis(k));
        LieVector t = bracket(bracket(basis(j), basis(k)), basis(i));
        LieVector u = bracket(bracket(basis(k), basis(i)), basis(j));
        for (int c = 0; c < 4; ++c)
          if (!(s[c] + t[c] + u[c]).is_zero()) return false;
      }
  return true;
}

std::vector<LieVector> span_basis(std::vector<LieVector> vs) {
  std::vector<LieVector> out;
  std::size_t row = 0;
  for (int col = 0; col < 4 && row < vs.size(); ++col) {
    std::size_t piv = row;
    while (piv < vs.size() && vs[piv][col].is_zero()) ++piv;
    if (piv == vs.size()) continue;
    std::swap(vs[row], vs[piv]);
    FieldValue inv = vs[row][col].inverse();
    for (auto& c : vs[row]) c *= inv;
    for (std::size_t r = 0; r < vs.size(); ++r) {
      if (r == row || vs[r][col].is_zero()) continue;
      FieldValue m = vs[r][col];
      for (int k = 0; k < 4; ++k) vs[r][k] -= m * vs[row][k];
    }
    ++row;
  }
  for (std::size_t r = 0; r < row; ++r)
    if (!is_zero(vs[r])) out.push_back(vs[r]);
  return out;
}

LieInvariants lie_invariants(const Bq3& A) {
  StructureConstants g(A);
  LieInvariants inv;

  // Centre: kernel of v -> ([v, e_0], ..., [v, e_3]).
  std::vector<std::array<FieldValue, 16>> images(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      LieVector b = g.bracket(g.basis(i), g.basis(j));
      for (int k = 0; k < 4; ++k) images[i][j * 4 + k] = b[k];
    }
  // Row rank of the 4 x 16 matrix.
  int rank = 0;
  {
    auto m = images;
    std::size_t row = 0;
    for (int col = 0; col < 16 && row < 4; ++col) {
      std::size_t piv = row;
      while (piv < 4 && m[piv][col].is_zero()) ++piv;
      if (piv == 4) continue;
      std::swap(m[row], m[piv]);
      FieldValue inv_p = m[row][col].inverse();
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == row || m[r][col].is_zero()) continue;
        FieldValue s = m[r][col] * inv_p;
        for (int k = 0; k < 16; ++k) m[r][k] -= s * m[row][k];
      }
      ++row;
    }
    rank = static_cast<int>(row);
  }
  inv.dim_center = 4 - rank;

  std::vector<LieVector> all;
  for (int i = 0; i < 4; ++i) all.push_back(g.basis(i));

  auto brackets_of = [&](const std::vector<LieVector>& xs, const std::vector<LieVector>& ys) {
    std::vector<LieVector> out;
    for (const auto& x : xs)
      for (const auto& y : ys) out.push_back(g.bracket(x, y));
    return span_basis(out);
  };

  std::vector<LieVector> derived = brackets_of(all, all);
  inv.dim_derived = static_cast<int>(derived.size());
  inv.z_in_derived = in_span(derived, g.basis(3));

  std::vector<LieVector> d = derived;
  for (int step = 0; step < 5 && !d.empty(); ++step) {
    auto next = brackets_of(d, d);
    if (next.size() == d.size()) break;
    d = next;
  }
  inv.solvable = d.empty();

  std::vector<LieVector> c = derived;
  for (int step = 0; step < 5 && !c.empty(); ++step) {
    auto next = brackets_of(all, c);
    if (next.size() == c.size()) break;
    c = next;
  }
  inv.nilpotent = c.empty();
  return inv;
}

LieType lie_type(const LieInvariants& inv) {
  if (inv.dim_center == 4) return LieType::P3;
  if (!inv.solvable) return LieType::Usl2;
  if (inv.nilpotent) return inv.z_in_derived ? LieType::UN_mod : LieType::UH3;
  // G/Kz is then n2 x K exactly when its derived algebra is one-dimensional.
  int quotient_derived = inv.dim_derived - (inv.z_in_derived ? 1 : 0);
  if (quotient_derived == 1) return inv.z_in_derived ? LieType::UM_mod : LieType::Un2xKz;
  return LieType::Unlisted;
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::P3: return "P3";
    case LieType::Usl2: return "Usl2";
    case LieType::UH3: return "UH3";
    case LieType::UN_mod: return "UN_mod";
    case LieType::Un2xKz: return "Un2xKz";
    case LieType::UM_mod: return "UM_mod";
    case LieType::Unlisted: return "Unlisted";
  }
  return "?";
}

}  // namespace bqa
