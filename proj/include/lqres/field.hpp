#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "lqres/errors.hpp"

namespace lqres {

// Exact coefficient field. Values are immutable-by-convention scalars with
// the usual operators; nothing in the library touches floating point.
template <typename F>
concept ExactField = std::regular<F> && requires(const F a, const F b, std::string_view s) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::from_int(1) } -> std::same_as<F>;
  { F::parse(s) } -> std::same_as<F>;
  { F::name() } -> std::same_as<std::string>;
};

namespace detail {

inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty number");
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw ParseError("malformed number '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace detail

// The rationals, backed by GMP.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  static Rational from_int(long n) { return Rational(mpq_class(n)); }
  static Rational parse(std::string_view text) { return Rational(detail::parse_rational(text)); }
  static std::string name() { return "QQ"; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ContractViolation("division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_;
};

// Z/P for a prime P > 2. The modulus is part of the type, so it is fixed for
// every value that can meet in one computation.
template <std::uint32_t P>
class PrimeField {
  static_assert(P > 2 && P < (1u << 31), "modulus must be an odd prime below 2^31");
  static_assert(detail::is_prime(P), "modulus must be prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr PrimeField() = default;

  static constexpr PrimeField from_int(long n) {
    long r = n % static_cast<long>(P);
    if (r < 0) r += P;
    return PrimeField(static_cast<std::uint32_t>(r), raw_tag{});
  }
  static PrimeField parse(std::string_view text) {
    mpq_class q = detail::parse_rational(text);
    mpz_class p(P);
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (den == 0) throw ParseError("denominator not invertible mod " + std::to_string(P));
    if (num < 0) num += p;
    return PrimeField(static_cast<std::uint32_t>(num.get_ui()), raw_tag{}) /
           PrimeField(static_cast<std::uint32_t>(den.get_ui()), raw_tag{});
  }
  static std::string name() { return std::to_string(P); }

  constexpr bool is_zero() const { return value_ == 0; }
  constexpr bool is_one() const { return value_ == 1; }
  constexpr std::uint32_t residue() const { return value_; }
  // Symmetric representative, so -1 prints as "-1".
  std::string to_string() const {
    if (value_ > P / 2) return "-" + std::to_string(P - value_);
    return std::to_string(value_);
  }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) {
    std::uint32_t s = a.value_ + b.value_;
    return PrimeField(s >= P ? s - P : s, raw_tag{});
  }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) {
    return PrimeField(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + P - b.value_, raw_tag{});
  }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) {
    return PrimeField(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % P), raw_tag{});
  }
  friend constexpr PrimeField operator/(PrimeField a, PrimeField b) {
    if (b.is_zero()) throw ContractViolation("division by zero");
    return a * b.inverse();
  }
  constexpr PrimeField operator-() const { return PrimeField(value_ == 0 ? 0 : P - value_, raw_tag{}); }
  constexpr PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  constexpr PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  constexpr PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  friend constexpr bool operator==(PrimeField, PrimeField) = default;

 private:
  struct raw_tag {};
  constexpr PrimeField(std::uint32_t v, raw_tag) : value_(v) {}

  constexpr PrimeField inverse() const {
    std::uint64_t base = value_, result = 1;
    for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
      if (e & 1u) result = result * base % P;
      base = base * base % P;
    }
    return PrimeField(static_cast<std::uint32_t>(result), raw_tag{});
  }

  std::uint32_t value_ = 0;
};

using GF32003 = PrimeField<32003>;

}  // namespace lqres
