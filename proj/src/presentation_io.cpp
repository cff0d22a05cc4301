#include "bqa/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace bqa {

namespace {

struct Value {
  enum Kind { Literal, String, List } kind = Literal;
  std::string text;
  std::vector<Value> items;
  int line = 1, col = 1;
};

struct Statement {
  std::string key;
  Value value;
  int line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    for (;;) {
      skip_blank(true);
      if (at_end()) return out;
      Statement st;
      st.line = line_;
      st.col = col_;
      st.key = identifier();
      skip_blank(false);
      expect('=');
      st.value = value();
      skip_blank(false);
      if (!at_end() && peek() != '\n' && peek() != ';') fail("expected end of statement");
      if (!at_end()) advance();
      out.push_back(std::move(st));
    }
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw PresentationError(msg, line_, col_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  // Inside lists and at statement starts newlines are whitespace too.
  void skip_blank(bool newlines) {
    while (!at_end()) {
      char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || (newlines && (ch == '\n' || ch == ';'))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    if (at_end() || peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  std::string identifier() {
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a key");
    std::string id;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      id += peek();
      advance();
    }
    return id;
  }

  Value value() {
    skip_blank(false);
    Value v;
    v.line = line_;
    v.col = col_;
    if (at_end()) fail("expected a value");
    char ch = peek();
    if (ch == '[') {
      v.kind = Value::List;
      advance();
      skip_blank(true);
      if (!at_end() && peek() == ']') { advance(); return v; }
      for (;;) {
        v.items.push_back(value());
        skip_blank(true);
        if (at_end()) fail("unterminated list");
        if (peek() == ',') { advance(); skip_blank(true); continue; }
        if (peek() == ']') { advance(); return v; }
        fail("expected ',' or ']'");
      }
    }
    if (ch == '"') {
      v.kind = Value::String;
      advance();
      while (!at_end() && peek() != '"' && peek() != '\n') { v.text += peek(); advance(); }
      expect('"');
      return v;
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+' ||
                         peek() == '/' || peek() == ':')) {
      v.text += peek();
      advance();
    }
    if (v.text.empty()) fail("expected a value");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

[[noreturn]] void fail_at(const Value& v, const std::string& msg) { throw PresentationError(msg, v.line, v.col); }

FieldValue literal(const Value& v, const Field& f) {
  if (v.kind != Value::Literal) fail_at(v, "expected a number");
  try {
    return f.parse_literal(v.text);
  } catch (const FieldError& e) {
    fail_at(v, e.what());
  }
}

const std::map<std::string, std::pair<int, int>> kScalarSlots = {
    // name -> (pair index, k) with k = 0 for q, 1..3 for A columns, 4 for B
    {"q1", {0, 0}}, {"q2", {1, 0}}, {"q3", {2, 0}},
    {"a", {0, 1}}, {"b", {0, 2}}, {"c", {0, 3}},
    {"alpha", {1, 1}}, {"beta", {1, 2}}, {"gamma", {1, 3}},
    {"lambda", {2, 1}}, {"mu", {2, 2}}, {"nu", {2, 3}},
    {"b1", {0, 4}}, {"b2", {1, 4}}, {"b3", {2, 4}},
};

}  // namespace

BqPresentation parse_presentation(std::string_view text, std::optional<Field> field) {
  auto stmts = Lexer(text).statements();
  std::map<std::string, const Statement*> seen;
  for (const auto& st : stmts) {
    if (seen.count(st.key)) throw PresentationError("duplicate key '" + st.key + "'", st.line, st.col);
    bool known = st.key == "n" || st.key == "field" || st.key == "q" || st.key == "A" || st.key == "B" ||
                 kScalarSlots.count(st.key);
    if (!known) throw PresentationError("unknown key '" + st.key + "'", st.line, st.col);
    seen[st.key] = &st;
  }

  int n = 3;
  if (auto it = seen.find("n"); it != seen.end()) {
    const Value& v = it->second->value;
    if (v.kind != Value::Literal || v.text.empty() || v.text.size() > 3 ||
        !std::all_of(v.text.begin(), v.text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail_at(v, "n must be an integer");
    n = std::stoi(v.text);
    if (n < 2 || n > 16) fail_at(v, "n must be between 2 and 16");
  }

  Field f = Field::rationals();
  if (auto it = seen.find("field"); it != seen.end()) {
    const Value& v = it->second->value;
    if (v.kind == Value::List) fail_at(v, "field must be \"Q\" or \"fp:<p>\"");
    try {
      f = Field::parse(v.text);
    } catch (const FieldError& e) {
      fail_at(v, e.what());
    }
  }
  if (field) f = *field;

  BqPresentation p(f, n);
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_ij;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) pair_ij.emplace_back(i, j);

  auto list_of = [&](const Value& v, int len, const char* what) {
    if (v.kind != Value::List || static_cast<int>(v.items.size()) != len)
      fail_at(v, std::string(what) + " must be a list of " + std::to_string(len) + " entries");
  };

  if (auto it = seen.find("q"); it != seen.end()) {
    const Value& v = it->second->value;
    list_of(v, pairs, "q");
    for (int t = 0; t < pairs; ++t) {
      FieldValue x = literal(v.items[t], f);
      if (x.is_zero()) fail_at(v.items[t], "q entries must be nonzero");
      p.set_q(pair_ij[t].first, pair_ij[t].second, x);
    }
  }
  if (auto it = seen.find("A"); it != seen.end()) {
    const Value& v = it->second->value;
    list_of(v, pairs, "A");
    for (int t = 0; t < pairs; ++t) {
      list_of(v.items[t], n, "each row of A");
      for (int k = 1; k <= n; ++k) p.set_a(pair_ij[t].first, pair_ij[t].second, k, literal(v.items[t].items[k - 1], f));
    }
  }
  if (auto it = seen.find("B"); it != seen.end()) {
    const Value& v = it->second->value;
    list_of(v, pairs, "B");
    for (int t = 0; t < pairs; ++t) p.set_b(pair_ij[t].first, pair_ij[t].second, literal(v.items[t], f));
  }

  for (const auto& [name, slot] : kScalarSlots) {
    auto it = seen.find(name);
    if (it == seen.end()) continue;
    const Statement& st = *it->second;
    if (n != 3) throw PresentationError("scalar key '" + name + "' requires n = 3", st.line, st.col);
    FieldValue x = literal(st.value, f);
    auto [i, j] = pair_ij[slot.first];
    if (slot.second == 0) {
      if (x.is_zero()) fail_at(st.value, "q entries must be nonzero");
      p.set_q(i, j, x);
    } else if (slot.second == 4) {
      p.set_b(i, j, x);
    } else {
      p.set_a(i, j, slot.second, x);
    }
  }
  return p;
}

BqPresentation load_presentation(const std::string& path, std::optional<Field> field) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), field);
}

std::string write_presentation(const BqPresentation& p) {
  int n = p.n();
  std::string q = "[", a = "[", b = "[";
  bool first = true;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      if (!first) { q += ", "; a += ", "; b += ", "; }
      first = false;
      q += p.q(i, j).to_string();
      b += p.b(i, j).to_string();
      a += "[";
      for (int k = 1; k <= n; ++k) a += (k > 1 ? ", " : "") + p.a(i, j, k).to_string();
      a += "]";
    }
  return "n = " + std::to_string(n) + "\nfield = \"" + p.field().to_string() + "\"\nq = " + q + "]\nA = " + a +
         "]\nB = " + b + "]\n";
}

}  // namespace bqa
