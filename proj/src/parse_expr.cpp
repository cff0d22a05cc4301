#include <cctype>

#include "bqa/freealg.hpp"

namespace bqa {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' digits)?
// atom   := digits ('/' digits)? | 'x' digits | '(' expr ')'
class ExprParser {
public:
  ExprParser(std::string_view s, int n, const Field& f) : s_(s), n_(n), f_(f) {}

  NcPoly parse() {
    NcPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  NcPoly expr() {
    NcPoly r = term();
    for (;;) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  NcPoly term() {
    NcPoly r = unary();
    while (accept('*')) r = r * unary();
    return r;
  }

  NcPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  NcPoly power() {
    NcPoly base = atom();
    if (accept('^')) {
      skip_ws();
      auto d = digits();
      if (d.size() > 3) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(d))));
    }
    return base;
  }

  NcPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      NcPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (ch == 'x') {
      std::size_t at = pos_;
      ++pos_;
      auto d = digits();
      if (d.size() > 3) { pos_ = at; fail("generator index out of range"); }
      int i = std::stoi(std::string(d));
      if (i < 1 || i > n_) { pos_ = at; fail("generator index out of range: x" + std::string(d)); }
      return NcPoly::generator(f_, n_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t at = pos_;
      std::string lit(digits());
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        lit += '/';
        lit += digits();
      }
      try {
        return NcPoly::constant(f_, n_, f_.parse_literal(lit));
      } catch (const FieldError& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  int n_;
  Field f_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_expr(std::string_view text, int n, const Field& f) {
  return ExprParser(text, n, f).parse();
}

}  // namespace bqa
