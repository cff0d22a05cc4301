#include "bqa/freealg.hpp"

#include <algorithm>

namespace bqa {

int deglex_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  return 0;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

NcPoly NcPoly::constant(Field f, int n, const FieldValue& c) {
  return monomial(f, n, {}, c);
}

NcPoly NcPoly::generator(Field f, int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return monomial(f, n, Word{static_cast<std::uint8_t>(i)}, f.one());
}

NcPoly NcPoly::monomial(Field f, int n, const Word& w, const FieldValue& c) {
  NcPoly p(f, n);
  p.add_term(w, c);
  return p;
}

FieldValue NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::size_t NcPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

void NcPoly::add_term(const Word& w, const FieldValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::check_compatible(const NcPoly& g) const {
  if (n_ != g.n_ || !(field_ == g.field_))
    throw std::invalid_argument("polynomials over different generator sets or fields");
}

NcPoly NcPoly::operator-() const {
  NcPoly r(field_, n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& g) {
  check_compatible(g);
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& g) {
  check_compatible(g);
  for (const auto& [w, c] : g.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::scaled(const FieldValue& c) const {
  NcPoly r(field_, n_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, v * c);
  return r;
}

NcPoly NcPoly::pow(unsigned k) const {
  NcPoly r = constant(field_, n_, field_.one());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

NcPoly operator*(const NcPoly& f, const NcPoly& g) {
  f.check_compatible(g);
  NcPoly r(f.field_, f.n_);
  for (const auto& [u, a] : f.terms_) {
    for (const auto& [v, b] : g.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, a * b);
    }
  }
  return r;
}

bool operator==(const NcPoly& f, const NcPoly& g) {
  if (f.n_ != g.n_ || !(f.field_ == g.field_)) return false;
  return f.terms_.size() == g.terms_.size() &&
         std::equal(f.terms_.begin(), f.terms_.end(), g.terms_.begin(),
                    [](const auto& s, const auto& t) { return s.first == t.first && s.second == t.second; });
}

std::string NcPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string lit = c.to_string();
    bool neg = !lit.empty() && lit[0] == '-';
    if (neg) lit.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (w.empty()) {
      out += lit;
    } else {
      if (lit != "1") out += lit + "*";
      out += render_word(w);
    }
  }
  return out;
}

}  // namespace bqa
