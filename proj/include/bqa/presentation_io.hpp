#pragma once

// Text format for presentations:
//
//   # comment
//   n = 3; field = "fp:7"
//   q = [q21, q31, q32]            lower triangle, row-major
//   A = [[a21_1, ..], [a31_1, ..], [a32_1, ..]]
//   B = [b21, b31, b32]
//
// For n = 3 the scalar names q1 q2 q3 a b c alpha beta gamma lambda mu nu b1 b2 b3
// may be used instead of (or on top of) the matrices.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bqa/rewrite.hpp"

namespace bqa {

class PresentationError : public std::runtime_error {
public:
  PresentationError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_, col_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A field given here takes precedence over the file's field key.
BqPresentation parse_presentation(std::string_view text, std::optional<Field> field = std::nullopt);
BqPresentation load_presentation(const std::string& path, std::optional<Field> field = std::nullopt);
std::string write_presentation(const BqPresentation& p);

}  // namespace bqa
