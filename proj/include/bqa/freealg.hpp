#pragma once

// Words over x1..xn, deglex order, and free-algebra polynomials.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bqa/field.hpp"

namespace bqa {

/// Letters are generator indices 1..n; the empty word is 1.
using Word = std::vector<std::uint8_t>;

/// -1, 0, 1: shorter words are smaller, equal lengths compare left to right.
int deglex_compare(const Word& u, const Word& v);

struct DeglexGreater {
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) > 0; }
};

std::string render_word(const Word& w);

class NcPoly {
public:
  using Terms = std::map<Word, FieldValue, DeglexGreater>;

  NcPoly(Field f, int n) : field_(f), n_(n) {}

  static NcPoly constant(Field f, int n, const FieldValue& c);
  static NcPoly generator(Field f, int n, int i);
  static NcPoly monomial(Field f, int n, const Word& w, const FieldValue& c);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  /// Leading term first.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  FieldValue coeff(const Word& w) const;
  /// Largest word with a nonzero coefficient; requires !is_zero().
  const Word& leading_word() const { return terms_.begin()->first; }
  std::size_t degree() const;

  void add_term(const Word& w, const FieldValue& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& g);
  NcPoly& operator-=(const NcPoly& g);
  NcPoly scaled(const FieldValue& c) const;
  NcPoly pow(unsigned k) const;

  friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
  friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }
  friend NcPoly operator*(const NcPoly& f, const NcPoly& g);
  friend bool operator==(const NcPoly& f, const NcPoly& g);

  /// e.g. "x1*x2*x3 + 1/2*x3^2"; "0" for the zero polynomial.
  std::string render() const;

private:
  void check_compatible(const NcPoly& g) const;
  Field field_;
  int n_;
  Terms terms_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// Identifiers x1..xn, literals "a" / "a/b", + - * ^ and parentheses.
NcPoly parse_expr(std::string_view text, int n, const Field& f);

}  // namespace bqa
