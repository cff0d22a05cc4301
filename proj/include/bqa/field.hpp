#pragma once

// Exact coefficient arithmetic over Q and GF(p).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bqa {

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FieldValue;

/// Descriptor of the ground field: the rationals or a prime field GF(p), p < 2^31.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "fp:<prime>".
  static Field parse(std::string_view spec);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::uint32_t modulus() const { return modulus_; }
  /// Number of elements for prime fields, 0 for Q.
  std::uint64_t size() const { return modulus_; }

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(long v) const;
  FieldValue from_rational(const mpq_class& q) const;
  /// Parses "a", "-a" or "a/b" with decimal integers.
  FieldValue parse_literal(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_ = 0;
};

class FieldValue {
public:
  struct Fp {
    std::uint32_t residue;
    std::uint32_t modulus;
  };

  FieldValue() : v_(mpq_class(0)) {}
  explicit FieldValue(mpq_class q);
  FieldValue(std::uint64_t residue, std::uint32_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Fp>(v_).residue; }

  FieldValue operator-() const;
  FieldValue inverse() const;
  FieldValue pow(long long e) const;

  friend FieldValue operator+(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator-(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator*(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator/(const FieldValue& x, const FieldValue& y);
  FieldValue& operator+=(const FieldValue& y) { return *this = *this + y; }
  FieldValue& operator-=(const FieldValue& y) { return *this = *this - y; }
  FieldValue& operator*=(const FieldValue& y) { return *this = *this * y; }
  FieldValue& operator/=(const FieldValue& y) { return *this = *this / y; }

  friend bool operator==(const FieldValue& x, const FieldValue& y);

  /// Total order used only for canonical tie-breaking (residue order, or numeric order on Q).
  friend bool canonical_less(const FieldValue& x, const FieldValue& y);

  /// Exact literal: "3/4", "-5", or the residue in [0,p).
  std::string to_string() const;

private:
  void check_same(const FieldValue& y) const;
  std::variant<mpq_class, Fp> v_;
};

FieldValue add(const FieldValue& x, const FieldValue& y);
FieldValue sub(const FieldValue& x, const FieldValue& y);
FieldValue mul(const FieldValue& x, const FieldValue& y);
FieldValue div(const FieldValue& x, const FieldValue& y);

/// Coset x * K^{x n} for n in {2,3,4}, identified by a canonical representative.
struct PowerClass {
  int exponent = 2;
  FieldValue representative;

  friend bool operator==(const PowerClass&, const PowerClass&) = default;
};

/// Over Q the representative is the signed n-th-power-free integer in the class
/// (sign dropped for odd n). Over GF(p) it is the least positive residue of the coset.
PowerClass power_class(const FieldValue& x, int n);
bool same_class(const FieldValue& x, const FieldValue& y, int n);

/// Some t with t^n = x, if one exists in the field.
std::optional<FieldValue> nth_root(const FieldValue& x, int n);

/// Number of cosets |K^x / K^{x n}|; 0 means infinite (Q).
std::uint64_t class_count(const Field& f, int n);

}  // namespace bqa
