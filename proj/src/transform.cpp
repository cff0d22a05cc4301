#include "bqa/transform.hpp"

#include <stdexcept>
#include <string>

namespace bqa {

Transform Transform::identity(const Field& f, int n) {
  return {identity_perm(n), std::vector<FieldValue>(n, f.one()), std::vector<FieldValue>(n, f.zero())};
}

Transform Transform::torus(const std::vector<FieldValue>& scale) {
  Transform t = identity(scale.front().field(), static_cast<int>(scale.size()));
  for (const auto& s : scale)
    if (s.is_zero()) throw std::invalid_argument("torus scalars must be nonzero");
  t.scale = scale;
  return t;
}

Transform Transform::translation(const std::vector<FieldValue>& shift) {
  Transform t = identity(shift.front().field(), static_cast<int>(shift.size()));
  t.shift = shift;
  return t;
}

Transform Transform::permutation(const Field& f, const Perm& perm) {
  if (!is_permutation(perm)) throw std::invalid_argument("not a permutation");
  Transform t = identity(f, static_cast<int>(perm.size()));
  t.perm = perm;
  return t;
}

bool Transform::is_identity() const { return *this == identity(field(), n()); }

bool Transform::has_permutation() const { return perm != identity_perm(n()); }

Transform Transform::then(const Transform& h) const {
  if (h.n() != n()) throw std::invalid_argument("transform size mismatch");
  Transform r = identity(field(), n());
  for (int i = 0; i < n(); ++i) {
    int hi = h.perm[i] - 1;
    r.perm[i] = perm[hi];
    r.scale[i] = h.scale[i] * scale[hi];
    r.shift[i] = h.scale[i] * shift[hi] + h.shift[i];
  }
  return r;
}

Transform Transform::inverse() const {
  Transform r = identity(field(), n());
  for (int j = 1; j <= n(); ++j) {
    int m = 0;
    while (perm[m] != j) ++m;
    // x_j = scale_m^{-1} x'_{m+1} - scale_m^{-1} shift_m
    r.perm[j - 1] = m + 1;
    r.scale[j - 1] = scale[m].inverse();
    r.shift[j - 1] = -(shift[m] / scale[m]);
  }
  return r;
}

std::vector<NcPoly> Transform::old_in_new() const {
  const Field& f = field();
  std::vector<NcPoly> images(n(), NcPoly(f, n()));
  for (int m = 0; m < n(); ++m) {
    FieldValue inv = scale[m].inverse();
    NcPoly y = NcPoly::generator(f, n(), m + 1).scaled(inv);
    y.add_term(Word{}, -(shift[m] * inv));
    images[perm[m] - 1] = y;
  }
  return images;
}

Transform compose_all(const std::vector<Transform>& trace, const Field& f, int n) {
  Transform t = Transform::identity(f, n);
  for (const auto& g : trace) t = t.then(g);
  return t;
}

BqPresentation apply(const BqPresentation& p, const Transform& g) {
  int n = p.n();
  if (g.n() != n) throw std::invalid_argument("transform size mismatch");
  const Field& f = p.field();
  auto images = g.old_in_new();
  BqPresentation out(f, n);
  std::vector<bool> filled(n * (n - 1) / 2, false);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      NcPoly rel = substitute(p.relation(i, j), images);
      const Word lead = rel.leading_word();
      // The substituted relation is again of bi-quadratic shape in a descent y_u y_v.
      if (lead.size() != 2 || lead[0] <= lead[1]) throw std::logic_error("transformed relation lost bi-quadratic shape");
      int u = lead[0], v = lead[1];
      rel = rel.scaled(rel.coeff(lead).inverse());
      for (const auto& [w, c] : rel.terms()) {
        bool ok = w.size() < 2 || w == lead || (w.size() == 2 && w[0] == v && w[1] == u);
        if (!ok) throw std::logic_error("transformed relation lost bi-quadratic shape");
      }
      std::size_t idx = static_cast<std::size_t>(u - 1) * (u - 2) / 2 + (v - 1);
      if (filled[idx]) throw std::logic_error("transformed relations collide");
      filled[idx] = true;
      out.set_q(u, v, -rel.coeff(Word{static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(u)}));
      for (int k = 1; k <= n; ++k) out.set_a(u, v, k, -rel.coeff(Word{static_cast<std::uint8_t>(k)}));
      out.set_b(u, v, -rel.coeff(Word{}));
    }
  return out;
}

Bq3 apply(const Bq3& A, const Transform& g) {
  return Bq3::from_presentation(apply(A.to_presentation(), g));
}

std::pair<Bq3, Transform> kill_ab(const Bq3& A) {
  const Field f = A.field();
  if (A.q1.is_one()) throw std::domain_error("kill_ab requires q1 != 1");
  FieldValue d = f.one() - A.q1;
  Transform t = Transform::translation({-(A.b / d), -(A.a / d), f.zero()});
  return {apply(A, t), t};
}

std::pair<Bq3, Transform> kill_alpha(const Bq3& A) {
  const Field f = A.field();
  if (A.q2.is_one()) throw std::domain_error("kill_alpha requires q2 != 1");
  if (!A.a.is_zero() || !A.b.is_zero()) throw std::domain_error("kill_alpha requires a = b = 0");
  if (A.alpha.is_zero()) return {A, Transform::identity(f, 3)};
  Transform t = Transform::identity(f, 3);
  t.scale[2] = A.alpha.inverse();
  t.shift[2] = -(f.one() - A.q2).inverse();
  return {apply(A, t), t};
}

namespace {

std::vector<FieldValue> parse_values(const Field& f, int n, std::string_view s, const FieldValue& dflt) {
  std::vector<FieldValue> out;
  if (s.empty()) return std::vector<FieldValue>(n, dflt);
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(f.parse_literal(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(out.size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " values");
  return out;
}

}  // namespace

Transform parse_transform(const Field& f, int n, std::string_view perm, std::string_view scale,
                          std::string_view shift) {
  Transform t = Transform::identity(f, n);
  if (!perm.empty()) {
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation must list " + std::to_string(n) + " digits");
    for (int m = 0; m < n; ++m) t.perm[m] = perm[m] - '0';
    if (!is_permutation(t.perm)) throw std::invalid_argument("not a permutation: " + std::string(perm));
  }
  t.scale = parse_values(f, n, scale, f.one());
  for (const auto& s : t.scale)
    if (s.is_zero()) throw std::invalid_argument("scale entries must be nonzero");
  t.shift = parse_values(f, n, shift, f.zero());
  return t;
}

}  // namespace bqa
