#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "lqres/errors.hpp"

namespace lqres {

// Exponent vector of a monomial in a fixed number of variables. Ordering is
// lexicographic with x_1 > x_2 > ... > x_n, so the largest monomial of a
// given degree is x_1^e.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
      if (e < 0) throw ContractViolation("negative exponent");
      degree_ += e;
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const int> exponents() const { return exponents_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
  }
  // Index of the variable when this is x_i^1, otherwise -1.
  int as_variable() const {
    if (degree_ != 1) return -1;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] == 1) return static_cast<int>(i);
    return -1;
  }

  // Componentwise <=.
  bool divides(const Monomial& other) const {
    check_same_ring(other);
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
    r.degree_ += b.degree_;
    return r;
  }

  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents_ <=> b.exponents_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  void check_same_ring(const Monomial& other) const {
    if (other.exponents_.size() != exponents_.size())
      throw ContractViolation("monomials from different rings");
  }

  std::vector<int> exponents_;
  int degree_ = 0;
};

inline bool mono_divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

// b / a; requires a | b.
inline Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!a.divides(b)) throw ContractViolation("monomial quotient by a non-divisor");
  std::vector<int> e(b.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ContractViolation("monomials from different rings");
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ContractViolation("monomials from different rings");
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

// C(n, k) for small arguments; 0 outside 0 <= k <= n.
inline std::size_t binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// Number of monomials of degree e in n variables.
inline std::size_t count_monomials(std::size_t nvars, int e) {
  if (e < 0) return 0;
  if (nvars == 0) return e == 0 ? 1 : 0;
  return binomial(e + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
}

// All monomials of degree e, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int e) {
  std::vector<Monomial> out;
  if (e < 0) return out;
  out.reserve(count_monomials(nvars, e));
  std::vector<int> exps(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
    if (var + 1 >= nvars) {
      if (nvars == 0) {
        if (remaining == 0) out.emplace_back(exps);
        return;
      }
      exps[var] = remaining;
      out.emplace_back(exps);
      exps[var] = 0;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      exps[var] = a;
      rec(var + 1, remaining - a);
    }
    exps[var] = 0;
  };
  rec(0, e);
  return out;
}

// Position of m inside monomials_of_degree(m.nvars(), m.degree()).
inline std::size_t monomial_rank(const Monomial& m) {
  const std::size_t n = m.nvars();
  std::size_t rank = 0;
  int remaining = m.degree();
  for (std::size_t var = 0; var + 1 < n; ++var) {
    // Every monomial with a larger exponent at this variable comes first.
    for (int a = remaining; a > m[var]; --a) rank += count_monomials(n - var - 1, remaining - a);
    remaining -= m[var];
  }
  return rank;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace lqres
