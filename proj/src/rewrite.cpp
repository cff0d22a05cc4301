#include "bqa/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqa {

BqPresentation::BqPresentation(Field f, int n) : field_(f), n_(n) {
  if (n < 2 || n > 255) throw std::invalid_argument("generator count must be in [2,255]");
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  q_.assign(pairs, f.one());
  a_.assign(pairs * n, f.zero());
  b_.assign(pairs, f.zero());
}

std::size_t BqPresentation::pair_index(int i, int j) const {
  if (!(n_ >= i && i > j && j >= 1)) throw std::out_of_range("relation index must satisfy n >= i > j >= 1");
  return static_cast<std::size_t>(i - 1) * (i - 2) / 2 + (j - 1);
}

void BqPresentation::set_q(int i, int j, const FieldValue& v) {
  if (v.is_zero()) throw std::invalid_argument("q entries must be nonzero");
  q_[pair_index(i, j)] = v;
}

void BqPresentation::set_a(int i, int j, int k, const FieldValue& v) {
  if (k < 1 || k > n_) throw std::out_of_range("generator index out of range");
  a_[pair_index(i, j) * n_ + (k - 1)] = v;
}

void BqPresentation::set_b(int i, int j, const FieldValue& v) { b_[pair_index(i, j)] = v; }

FieldValue BqPresentation::q_completed(int i, int j) const {
  if (i == j) return field_.one();
  return i > j ? q(i, j) : q(j, i).inverse();
}

NcPoly BqPresentation::rule(int i, int j) const {
  NcPoly r(field_, n_);
  r.add_term(Word{static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(i)}, q(i, j));
  for (int k = 1; k <= n_; ++k) r.add_term(Word{static_cast<std::uint8_t>(k)}, a(i, j, k));
  r.add_term(Word{}, b(i, j));
  return r;
}

NcPoly BqPresentation::relation(int i, int j) const {
  return NcPoly::monomial(field_, n_, Word{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)},
                          field_.one()) -
         rule(i, j);
}

bool operator==(const BqPresentation& x, const BqPresentation& y) {
  return x.field_ == y.field_ && x.n_ == y.n_ && x.q_ == y.q_ && x.a_ == y.a_ && x.b_ == y.b_;
}

Reducer::Reducer(const BqPresentation& p, Strategy s) : p_(p), strategy_(s) {
  for (int i = 2; i <= p.n(); ++i)
    for (int j = 1; j < i; ++j) rules_.push_back(p.rule(i, j));
}

const NcPoly& Reducer::reduce_word(const Word& w) {
  auto hit = memo_.find(w);
  if (hit != memo_.end()) return hit->second;

  std::size_t pos = w.size();
  if (strategy_ == Strategy::LeftmostDescent) {
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] > w[t + 1]) { pos = t; break; }
  } else {
    for (std::size_t t = w.size(); t-- > 1;)
      if (w[t - 1] > w[t]) { pos = t - 1; break; }
  }

  const Field& f = p_.field();
  NcPoly out(f, p_.n());
  if (pos == w.size()) {
    out.add_term(w, f.one());
  } else {
    int i = w[pos], j = w[pos + 1];
    const NcPoly& r = rules_[static_cast<std::size_t>(i - 1) * (i - 2) / 2 + (j - 1)];
    for (const auto& [mid, c] : r.terms()) {
      Word v(w.begin(), w.begin() + pos);
      v.insert(v.end(), mid.begin(), mid.end());
      v.insert(v.end(), w.begin() + pos + 2, w.end());
      out += reduce_word(v).scaled(c);
    }
  }
  return memo_.emplace(w, std::move(out)).first->second;
}

NcPoly Reducer::reduce(const NcPoly& f) {
  NcPoly out(p_.field(), p_.n());
  for (const auto& [w, c] : f.terms()) out += reduce_word(w).scaled(c);
  return out;
}

NcPoly reduce(const NcPoly& f, const BqPresentation& p) {
  Reducer r(p);
  return r.reduce(f);
}

bool is_normal(const NcPoly& f) {
  for (const auto& [w, c] : f.terms())
    if (!std::is_sorted(w.begin(), w.end())) return false;
  return true;
}

std::vector<OverlapReport> overlap_check(const BqPresentation& p) {
  std::vector<OverlapReport> out;
  Reducer red(p);
  const Field& f = p.field();
  int n = p.n();
  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        NcPoly xk = NcPoly::generator(f, n, k), xi = NcPoly::generator(f, n, i);
        NcPoly left = red.reduce(p.rule(k, j) * xi);
        NcPoly right = red.reduce(xk * p.rule(j, i));
        NcPoly diff = left - right;
        if (!diff.is_zero()) out.push_back({k, j, i, std::move(diff)});
      }
  return out;
}

bool pbw_consistent(const BqPresentation& p) { return overlap_check(p).empty(); }

Perm identity_perm(int n) {
  Perm s(n);
  for (int m = 0; m < n; ++m) s[m] = m + 1;
  return s;
}

bool is_permutation(const Perm& s) {
  std::vector<bool> seen(s.size() + 1, false);
  for (int v : s) {
    if (v < 1 || v > static_cast<int>(s.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& s) {
  Perm inv(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) inv[s[m] - 1] = static_cast<int>(m) + 1;
  return inv;
}

BqPresentation reorder_presentation(const BqPresentation& p, const Perm& sigma) {
  int n = p.n();
  if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma))
    throw std::invalid_argument("not a permutation of the generators");
  Perm inv = inverse_perm(sigma);
  BqPresentation out(p.field(), n);
  for (int m = 2; m <= n; ++m)
    for (int l = 1; l < m; ++l) {
      int i = sigma[m - 1], j = sigma[l - 1];
      if (i > j) {
        out.set_q(m, l, p.q(i, j));
        for (int k = 1; k <= n; ++k) out.set_a(m, l, inv[k - 1], p.a(i, j, k));
        out.set_b(m, l, p.b(i, j));
      } else {
        // x_j x_i = q x_i x_j + R  gives  x_i x_j = q^{-1} x_j x_i - q^{-1} R
        FieldValue qi = p.q(j, i).inverse();
        out.set_q(m, l, qi);
        for (int k = 1; k <= n; ++k) out.set_a(m, l, inv[k - 1], -(qi * p.a(j, i, k)));
        out.set_b(m, l, -(qi * p.b(j, i)));
      }
    }
  return out;
}

NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images) {
  if (static_cast<int>(images.size()) != f.n()) throw std::invalid_argument("substitution arity mismatch");
  const NcPoly& any = images.front();
  NcPoly out(any.field(), any.n());
  for (const auto& [w, c] : f.terms()) {
    NcPoly t = NcPoly::constant(any.field(), any.n(), c);
    for (auto letter : w) t = t * images[letter - 1];
    out += t;
  }
  return out;
}

NcPoly reduce_in_order(const NcPoly& f, const BqPresentation& p, const Perm& sigma) {
  if (!pbw_consistent(p)) throw std::domain_error("presentation is not PBW-consistent");
  BqPresentation y = reorder_presentation(p, sigma);
  int n = p.n();
  Perm inv = inverse_perm(sigma);
  std::vector<NcPoly> to_y, to_x;
  for (int i = 1; i <= n; ++i) {
    to_y.push_back(NcPoly::generator(p.field(), n, inv[i - 1]));
    to_x.push_back(NcPoly::generator(p.field(), n, sigma[i - 1]));
  }
  return substitute(reduce(substitute(f, to_y), y), to_x);
}

}  // namespace bqa
