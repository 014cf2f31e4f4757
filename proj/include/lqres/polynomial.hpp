#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lqres/errors.hpp"
#include "lqres/field.hpp"
#include "lqres/monomial.hpp"

namespace lqres {

// Sparse homogeneous polynomial. Terms are kept strictly descending in lex
// order with no zero coefficients, so equality is structural.
template <ExactField F>
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    F coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;

  static Polynomial monomial(Monomial m, F c = F::from_int(1)) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Sorts, merges equal monomials, and drops zeros. Mixed degrees throw.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    for (const auto& t : p.terms_)
      if (t.monomial.degree() != p.terms_.front().monomial.degree())
        throw HomogeneityError("polynomial terms of mixed degree");
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().monomial.degree();
  }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  F coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return F{};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const F& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  // Lex is a monomial order, so multiplying every term by m keeps the order.
  Polynomial times(const Monomial& m, const F& c = F::from_int(1)) const {
    if (c.is_zero()) return {};
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& t : b.terms_) r += a.times(t.monomial, t.coeff);
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Total order used for canonical orderings of generator lists.
  friend bool lex_greater(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.terms_[i].monomial != b.terms_[i].monomial) return a.terms_[i].monomial > b.terms_[i].monomial;
      if (!(a.terms_[i].coeff == b.terms_[i].coeff))
        return a.terms_[i].coeff.to_string() < b.terms_[i].coeff.to_string();
    }
    return a.terms_.size() > b.terms_.size();
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    if (!a.is_zero() && !b.is_zero() && *a.degree() != *b.degree())
      throw HomogeneityError("adding polynomials of different degrees");
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].monomial > a.terms_[i].monomial) {
        r.terms_.push_back({b.terms_[j].monomial, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
        ++j;
      } else {
        F c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// Variable names of S = K[x_1..x_n]. The coefficient field is a type
// parameter of everything built on top of the ring, not part of it.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& v = names_[i];
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
        throw ParseError("invalid variable name '" + v + "'");
      for (char c : v)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw ParseError("invalid variable name '" + v + "'");
      if (!index_.emplace(v, i).second) throw ParseError("duplicate variable '" + v + "'");
    }
  }

  // x1..xn.
  static Ring with_default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Ring(std::move(names));
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  Monomial one() const { return Monomial(nvars()); }
  Monomial variable(std::size_t i, int power = 1) const { return Monomial::variable(nvars(), i, power); }
  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

  template <ExactField F>
  Polynomial<F> variable_poly(std::size_t i) const {
    return Polynomial<F>::monomial(variable(i));
  }

  // Grammar: terms separated by + or -; a term is a '*'-separated list of
  // factors, each a number (p or p/q) or a variable with optional ^exponent.
  template <ExactField F>
  Polynomial<F> parse(std::string_view text) const {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<typename Polynomial<F>::Term> terms;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
      bool negative = false;
      if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" + s + "'");
      }
      first = false;
      terms.push_back(parse_term<F>(s, pos));
      if (negative) terms.back().coeff = -terms.back().coeff;
    }
    return Polynomial<F>::from_terms(std::move(terms));
  }

  std::string format(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names_[i];
      if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
  }

  template <ExactField F>
  std::string format(const Polynomial<F>& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
      std::string c = t.coeff.to_string();
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (t.monomial.is_one())
        out += c;
      else if (c == "1")
        out += format(t.monomial);
      else
        out += c + "*" + format(t.monomial);
    }
    return out;
  }

 private:
  template <ExactField F>
  typename Polynomial<F>::Term parse_term(const std::string& s, std::size_t& pos) const {
    F coeff = F::from_int(1);
    std::vector<int> exps(nvars(), 0);
    while (true) {
      if (pos >= s.size()) throw ParseError("unexpected end of polynomial '" + s + "'");
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        coeff *= F::parse(std::string_view(s).substr(start, pos - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::string name = s.substr(start, pos - start);
        auto idx = index_of(name);
        if (!idx) throw ParseError("undeclared variable '" + name + "'");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t es = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (es == pos) throw ParseError("missing exponent after '^' in '" + s + "'");
          power = std::stoi(s.substr(es, pos - es));
        }
        exps[*idx] += power;
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    return {Monomial(std::move(exps)), std::move(coeff)};
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace lqres
