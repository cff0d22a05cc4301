#include "bqa/field.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace bqa {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::uint64_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  auto fs = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : fs)
      if (pow_mod(g, (p - 1) / f, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw FieldError("no primitive root");
}

// Baby-step giant-step discrete log base g.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t x, std::uint32_t p) {
  std::uint64_t order = p - 1;
  std::uint64_t m = 1;
  while (m * m < order) ++m;
  std::unordered_map<std::uint64_t, std::uint64_t> table;
  table.reserve(m * 2);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(cur, j);
    cur = cur * g % p;
  }
  std::uint64_t step = pow_mod(pow_mod(g, m, p), p - 2, p);
  std::uint64_t y = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = table.find(y);
    if (it != table.end()) return (i * m + it->second) % order;
    y = y * step % p;
  }
  throw FieldError("discrete log failed");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // m may be composite here; extended Euclid.
  long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr) {
    long long q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) throw FieldError("not invertible");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

std::optional<std::uint64_t> fp_root(std::uint64_t x, int n, std::uint32_t p) {
  if (x == 0) return 0;
  if (p < (1u << 16)) {
    for (std::uint64_t t = 1; t < p; ++t)
      if (pow_mod(t, n, p) == x) return t;
    return std::nullopt;
  }
  std::uint64_t order = p - 1;
  std::uint64_t d = std::gcd<std::uint64_t>(n, order);
  if (pow_mod(x, order / d, p) != 1) return std::nullopt;
  std::uint64_t g = primitive_root(p);
  std::uint64_t e = discrete_log(g, x, p);
  if (e % d) return std::nullopt;
  // Solve n f = e (mod p-1).
  std::uint64_t red = order / d;
  std::uint64_t f = 0;
  if (red > 1) f = (e / d) % red * inverse_mod((n / d) % red, red) % red;
  return pow_mod(g, f, p);
}

// n-th-power-free part of a positive integer, by trial division.
mpz_class power_free_part(mpz_class m, int n) {
  mpz_class out = 1;
  auto absorb = [&](const mpz_class& prime, int e) {
    for (int i = 0; i < e % n; ++i) out *= prime;
  };
  if (m.fits_ulong_p()) {
    unsigned long v = m.get_ui();
    for (unsigned long d = 2; d * d <= v; ++d) {
      int e = 0;
      while (v % d == 0) { v /= d; ++e; }
      if (e) absorb(mpz_class(d), e);
    }
    if (v > 1) absorb(mpz_class(v), 1);
    return out;
  }
  for (mpz_class d = 2; d * d <= m; ++d) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) { m /= d; ++e; }
    if (e) absorb(d, e);
  }
  if (m > 1) absorb(m, 1);
  return out;
}

std::optional<mpz_class> exact_root(const mpz_class& v, int n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

mpz_class parse_integer(std::string_view s) {
  if (s.empty()) throw FieldError("empty integer literal");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw FieldError("malformed literal: " + std::string(s));
  return mpz_class(std::string(s), 10);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw FieldError("modulus must be a prime below 2^31: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q" || spec == "q") return rationals();
  if (spec.size() > 3 && spec.substr(0, 3) == "fp:") {
    auto digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ull << 31))
      throw FieldError("bad field spec: " + std::string(spec));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw FieldError("bad field spec (expected \"Q\" or \"fp:<p>\"): " + std::string(spec));
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(long v) const {
  if (is_rational()) return FieldValue(mpq_class(v));
  long m = static_cast<long>(modulus_);
  long r = v % m;
  if (r < 0) r += m;
  return FieldValue(static_cast<std::uint64_t>(r), modulus_);
}

FieldValue Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return FieldValue(q);
  mpz_class num = q.get_num() % modulus_;
  mpz_class den = q.get_den() % modulus_;
  if (num < 0) num += modulus_;
  if (den == 0) throw FieldError("denominator divisible by the characteristic");
  FieldValue n(num.get_ui(), modulus_), d(den.get_ui(), modulus_);
  return n / d;
}

FieldValue Field::parse_literal(std::string_view text) const {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class num, den = 1;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = parse_integer(s);
  } else {
    num = parse_integer(s.substr(0, slash));
    den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw FieldError("zero denominator in literal: " + std::string(text));
  }
  if (neg) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "fp:" + std::to_string(modulus_);
}

FieldValue::FieldValue(mpq_class q) : v_(std::move(q)) {
  std::get<mpq_class>(v_).canonicalize();
}

FieldValue::FieldValue(std::uint64_t residue, std::uint32_t modulus)
    : v_(Fp{static_cast<std::uint32_t>(residue % modulus), modulus}) {}

Field FieldValue::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
  return Field::prime(std::get<Fp>(v_).modulus);
}

bool FieldValue::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Fp>(v_).residue == 0;
}

bool FieldValue::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Fp>(v_).residue == 1;
}

void FieldValue::check_same(const FieldValue& y) const {
  if (v_.index() != y.v_.index())
    throw FieldError("mixed-field operands");
  if (auto* a = std::get_if<Fp>(&v_))
    if (a->modulus != std::get<Fp>(y.v_).modulus)
      throw FieldError("mixed-field operands");
}

FieldValue FieldValue::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return FieldValue(mpq_class(-*q));
  const auto& a = std::get<Fp>(v_);
  return FieldValue(a.residue == 0 ? 0 : a.modulus - a.residue, a.modulus);
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return FieldValue(mpq_class(1 / *q));
  const auto& a = std::get<Fp>(v_);
  return FieldValue(pow_mod(a.residue, a.modulus - 2, a.modulus), a.modulus);
}

FieldValue FieldValue::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldValue r = field().one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FieldValue operator+(const FieldValue& x, const FieldValue& y) {
  x.check_same(y);
  if (auto* q = std::get_if<mpq_class>(&x.v_)) return FieldValue(mpq_class(*q + std::get<mpq_class>(y.v_)));
  const auto& a = std::get<FieldValue::Fp>(x.v_);
  const auto& b = std::get<FieldValue::Fp>(y.v_);
  return FieldValue(static_cast<std::uint64_t>(a.residue) + b.residue, a.modulus);
}

FieldValue operator-(const FieldValue& x, const FieldValue& y) { return x + (-y); }

FieldValue operator*(const FieldValue& x, const FieldValue& y) {
  x.check_same(y);
  if (auto* q = std::get_if<mpq_class>(&x.v_)) return FieldValue(mpq_class(*q * std::get<mpq_class>(y.v_)));
  const auto& a = std::get<FieldValue::Fp>(x.v_);
  const auto& b = std::get<FieldValue::Fp>(y.v_);
  return FieldValue(static_cast<std::uint64_t>(a.residue) * b.residue, a.modulus);
}

FieldValue operator/(const FieldValue& x, const FieldValue& y) {
  x.check_same(y);
  return x * y.inverse();
}

bool operator==(const FieldValue& x, const FieldValue& y) {
  x.check_same(y);
  if (auto* q = std::get_if<mpq_class>(&x.v_)) return *q == std::get<mpq_class>(y.v_);
  return std::get<FieldValue::Fp>(x.v_).residue == std::get<FieldValue::Fp>(y.v_).residue;
}

bool canonical_less(const FieldValue& x, const FieldValue& y) {
  x.check_same(y);
  if (auto* q = std::get_if<mpq_class>(&x.v_)) return *q < std::get<mpq_class>(y.v_);
  return std::get<FieldValue::Fp>(x.v_).residue < std::get<FieldValue::Fp>(y.v_).residue;
}

std::string FieldValue::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Fp>(v_).residue);
}

FieldValue add(const FieldValue& x, const FieldValue& y) { return x + y; }
FieldValue sub(const FieldValue& x, const FieldValue& y) { return x - y; }
FieldValue mul(const FieldValue& x, const FieldValue& y) { return x * y; }
FieldValue div(const FieldValue& x, const FieldValue& y) { return x / y; }

PowerClass power_class(const FieldValue& x, int n) {
  if (n < 2 || n > 4) throw FieldError("power class exponent must be 2, 3 or 4");
  if (x.is_zero()) throw FieldError("power class of zero");
  Field f = x.field();
  if (f.is_rational()) {
    const mpq_class& q = x.rational();
    // x * den^n lies in the same class and is an integer.
    mpz_class m = q.get_num();
    for (int i = 0; i < n - 1; ++i) m *= q.get_den();
    int sign = sgn(m);
    mpz_class part = power_free_part(abs(m), n);
    if (sign < 0 && n % 2 == 0) part = -part;
    return {n, FieldValue(mpq_class(part))};
  }
  std::uint32_t p = f.modulus();
  std::uint64_t d = std::gcd<std::uint64_t>(n, p - 1);
  std::uint64_t e = (p - 1) / d;
  std::uint64_t xinv = pow_mod(x.residue(), p - 2, p);
  for (std::uint64_t r = 1; r < p; ++r)
    if (pow_mod(r * xinv % p, e, p) == 1) return {n, FieldValue(r, p)};
  throw FieldError("power class: no representative");
}

bool same_class(const FieldValue& x, const FieldValue& y, int n) {
  return power_class(x, n) == power_class(y, n);
}

std::optional<FieldValue> nth_root(const FieldValue& x, int n) {
  Field f = x.field();
  if (f.is_prime()) {
    auto r = fp_root(x.residue(), n, f.modulus());
    if (!r) return std::nullopt;
    return FieldValue(*r, f.modulus());
  }
  const mpq_class& q = x.rational();
  bool neg = sgn(q) < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  auto num = exact_root(abs(q.get_num()), n);
  auto den = exact_root(q.get_den(), n);
  if (!num || !den) return std::nullopt;
  mpq_class r(neg ? mpz_class(-*num) : *num, *den);
  return FieldValue(r);
}

std::uint64_t class_count(const Field& f, int n) {
  if (f.is_rational()) return 0;
  return std::gcd<std::uint64_t>(n, f.modulus() - 1);
}

}  // namespace bqa
