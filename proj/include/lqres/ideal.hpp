#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lqres/errors.hpp"
#include "lqres/graded.hpp"
#include "lqres/matrix.hpp"
#include "lqres/polynomial.hpp"

namespace lqres {

enum class IdealKind { monomial, linear_forms, general };

inline std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::monomial: return "monomial";
    case IdealKind::linear_forms: return "linear-forms";
    case IdealKind::general: return "general";
  }
  return "?";
}

namespace detail {

// Coefficient rows of homogeneous polynomials of degree e, one row each.
template <ExactField F>
Matrix<F> coefficient_rows(std::span<const Polynomial<F>> polys, std::size_t nvars, int e) {
  Matrix<F> m(polys.size(), count_monomials(nvars, e));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) m.at(r, monomial_rank(t.monomial)) = t.coeff;
  return m;
}

}  // namespace detail

// Ordered homogeneous generators f_1..f_m of one degree d.
//
// Kinds: degree one is always linear-forms; otherwise single-term generators
// make a monomial ideal and anything else is general. Monomial generators are
// normalized to coefficient 1. Generators must be K-linearly independent,
// which for monomials means pairwise distinct.
template <ExactField F>
class IdealPresentation {
 public:
  IdealPresentation(Ring ring, std::vector<Polynomial<F>> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    if (generators_.empty()) throw PresentationError("ideal needs at least one generator");
    for (const auto& g : generators_) {
      if (g.is_zero()) throw PresentationError("zero generator");
      for (const auto& t : g.terms())
        if (t.monomial.nvars() != ring_.nvars()) throw PresentationError("generator from a different ring");
    }
    degree_ = *generators_.front().degree();
    for (const auto& g : generators_)
      if (*g.degree() != degree_) throw PresentationError("generators of mixed degree");
    if (degree_ < 1) throw PresentationError("generators must have positive degree");
    monomial_ = std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_monomial(); });
    if (monomial_)
      for (auto& g : generators_) g = Polynomial<F>::monomial(g.leading_term().monomial);
    kind_ = degree_ == 1 ? IdealKind::linear_forms : monomial_ ? IdealKind::monomial : IdealKind::general;
    auto rows = detail::coefficient_rows<F>(generators_, ring_.nvars(), degree_);
    if (rank(rows) != generators_.size())
      throw PresentationError(monomial_ ? "repeated monomial generator (use minimalize_monomial)"
                                        : "generators are K-linearly dependent in degree " + std::to_string(degree_));
  }

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.nvars(); }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  const Polynomial<F>& generator(std::size_t i) const { return generators_.at(i); }
  std::size_t size() const { return generators_.size(); }
  int degree() const { return degree_; }
  IdealKind kind() const { return kind_; }
  // True when every generator is a single term, including the linear case.
  bool is_monomial() const { return monomial_; }

  std::vector<Monomial> monomials() const {
    if (!monomial_) throw ContractViolation("not a monomial ideal");
    std::vector<Monomial> out;
    for (const auto& g : generators_) out.push_back(g.leading_term().monomial);
    return out;
  }

  // New presentation with generators order[0], order[1], ... (0-based).
  IdealPresentation reordered(std::span<const std::size_t> order) const {
    if (order.size() != generators_.size()) throw ContractViolation("order must be a permutation of the generators");
    std::vector<bool> seen(order.size(), false);
    std::vector<Polynomial<F>> gens;
    for (auto i : order) {
      if (i >= generators_.size() || seen[i]) throw ContractViolation("order must be a permutation of the generators");
      seen[i] = true;
      gens.push_back(generators_[i]);
    }
    return IdealPresentation(ring_, std::move(gens));
  }

 private:
  Ring ring_;
  std::vector<Polynomial<F>> generators_;
  int degree_ = 0;
  IdealKind kind_ = IdealKind::general;
  bool monomial_ = false;
};

// Removes repeated monomials, keeping first occurrences in input order.
// Distinct monomials of one degree never divide each other; that is checked
// rather than assumed.
template <ExactField F>
IdealPresentation<F> minimalize_monomial(const Ring& ring, const std::vector<Polynomial<F>>& gens,
                                         std::optional<int> declared_degree = std::nullopt) {
  std::vector<Polynomial<F>> kept;
  std::vector<Monomial> seen;
  for (const auto& g : gens) {
    if (g.is_zero()) throw PresentationError("zero generator");
    if (!g.is_monomial()) throw PresentationError("minimalize_monomial needs monomial generators");
    const Monomial& m = g.leading_term().monomial;
    if (declared_degree && m.degree() != *declared_degree)
      throw PresentationError("generator of degree " + std::to_string(m.degree()) + ", declared " +
                              std::to_string(*declared_degree));
    if (!seen.empty() && m.degree() != seen.front().degree()) throw PresentationError("generators of mixed degree");
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    for (const auto& s : seen)
      if (s.divides(m) || m.divides(s)) throw ContractViolation("distinct equal-degree monomials divide each other");
    seen.push_back(m);
    kept.push_back(Polynomial<F>::monomial(m));
  }
  return IdealPresentation<F>(ring, std::move(kept));
}

// Drops monomials divisible by another one in the list and sorts the rest in
// descending lex order.
inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const auto& m : ms)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); })) out.push_back(m);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Minimal generators of <prefix> : f, namely the minimalized { g / gcd(g, f) }.
// An empty prefix gives the zero ideal, reported as nullopt.
inline std::optional<std::vector<Monomial>> colon_monomial(std::span<const Monomial> prefix, const Monomial& f) {
  if (prefix.empty()) return std::nullopt;
  std::vector<Monomial> qs;
  qs.reserve(prefix.size());
  for (const auto& g : prefix) qs.push_back(mono_quotient(g, mono_gcd(g, f)));
  return minimal_monomials(std::move(qs));
}

// Echelonized basis of { u in S_1 : u*f in <prefix> }, found by solving in
// degree d+1 for u*f as a K-combination of the products x_a * f_t.
template <ExactField F>
std::vector<Polynomial<F>> linear_part_of_colon(std::span<const Polynomial<F>> prefix, const Polynomial<F>& f,
                                                std::size_t nvars) {
  if (prefix.empty() || f.is_zero()) return {};
  const int e = *f.degree() + 1;
  const std::size_t rows = count_monomials(nvars, e);
  const std::size_t cols = nvars + nvars * prefix.size();
  Matrix<F> m(rows, cols);
  auto put = [&](std::size_t col, const Polynomial<F>& p, bool negate) {
    for (const auto& t : p.terms()) m.at(monomial_rank(t.monomial), col) = negate ? -t.coeff : t.coeff;
  };
  for (std::size_t a = 0; a < nvars; ++a) put(a, f.times(Monomial::variable(nvars, a)), false);
  for (std::size_t t = 0; t < prefix.size(); ++t)
    for (std::size_t a = 0; a < nvars; ++a)
      put(nvars + t * nvars + a, prefix[t].times(Monomial::variable(nvars, a)), true);

  std::vector<std::vector<F>> projected;
  for (auto& v : kernel_basis(m)) projected.emplace_back(v.begin(), v.begin() + static_cast<long>(nvars));
  auto ech = row_reduce(matrix_from_rows(projected, nvars));
  std::vector<Polynomial<F>> basis;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t a = 0; a < nvars; ++a)
      if (!ech.reduced.at(r, a).is_zero()) terms.push_back({Monomial::variable(nvars, a), ech.reduced.at(r, a)});
    basis.push_back(Polynomial<F>::from_terms(std::move(terms)));
  }
  return basis;
}

// Per-step linear forms u_{k,*} generating L_k = <f_1..f_{k-1}> : f_k.
// Indexing is 0-based over k = 1..m; the k = 1 entry is empty with q_1 = 0.
template <ExactField F>
struct ColonCertificate {
  std::vector<std::vector<Polynomial<F>>> forms;
  std::vector<std::size_t> q_values;
  std::size_t q_max = 0;
  // Monomial and linear-forms ideals are certified outright. For general
  // ideals only the degree-one part of each colon is known, and exactness of
  // the built resolution has to confirm the rest.
  bool definitive = true;
};

struct CertificationFailure {
  std::size_t k = 0;                  // 1-based index of the first failing step
  std::vector<Monomial> offending;    // colon generators of degree >= 2 (monomial case)
  std::string reason;
};

template <ExactField F>
using CertifyResult = std::variant<ColonCertificate<F>, CertificationFailure>;

namespace detail {

template <ExactField F>
ColonCertificate<F> finish_certificate(std::vector<std::vector<Polynomial<F>>> forms, bool definitive) {
  ColonCertificate<F> c;
  c.forms = std::move(forms);
  for (const auto& f : c.forms) c.q_values.push_back(f.size());
  c.q_max = c.q_values.empty() ? 0 : *std::max_element(c.q_values.begin(), c.q_values.end());
  c.definitive = definitive;
  return c;
}

// Colon step for monomial ideals: nullopt when linear, otherwise the
// offending generators.
inline std::optional<std::vector<Monomial>> monomial_step_obstruction(std::span<const Monomial> prefix,
                                                                      const Monomial& f) {
  auto colon = colon_monomial(prefix, f);
  if (!colon) return std::nullopt;
  std::vector<Monomial> bad;
  for (const auto& g : *colon)
    if (g.degree() != 1) bad.push_back(g);
  if (bad.empty()) return std::nullopt;
  return bad;
}

}  // namespace detail

// Certifies linear quotients in the presentation's own order.
template <ExactField F>
CertifyResult<F> certify_linear_quotients(const IdealPresentation<F>& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<std::vector<Polynomial<F>>> forms(1);
  if (ideal.is_monomial()) {
    const auto monos = ideal.monomials();
    for (std::size_t k = 1; k < monos.size(); ++k) {
      std::span<const Monomial> prefix(monos.data(), k);
      if (auto bad = detail::monomial_step_obstruction(prefix, monos[k]))
        return CertificationFailure{k + 1, std::move(*bad), "colon ideal has a minimal generator of degree >= 2"};
      std::vector<Polynomial<F>> step;
      const auto colon = colon_monomial(prefix, monos[k]);
      for (const auto& g : *colon) step.push_back(Polynomial<F>::monomial(g));
      forms.push_back(std::move(step));
    }
    return detail::finish_certificate(std::move(forms), true);
  }
  const auto& gens = ideal.generators();
  for (std::size_t k = 1; k < gens.size(); ++k)
    forms.push_back(linear_part_of_colon<F>(std::span(gens.data(), k), gens[k], n));
  // Independent linear forms are a regular sequence, so the linear part is the
  // whole colon. In higher degree that is not known.
  return detail::finish_certificate(std::move(forms), ideal.kind() == IdealKind::linear_forms);
}

// Checks a user-supplied certificate instead of trusting it. supplied[k-1]
// lists the forms for step k; the k = 1 entry may be omitted.
template <ExactField F>
CertifyResult<F> verify_certificate(const IdealPresentation<F>& ideal,
                                    std::vector<std::vector<Polynomial<F>>> supplied) {
  const std::size_t m = ideal.size(), n = ideal.nvars();
  if (supplied.size() + 1 == m) supplied.insert(supplied.begin(), std::vector<Polynomial<F>>{});
  if (supplied.size() != m)
    return CertificationFailure{0, {}, "certificate has " + std::to_string(supplied.size()) + " steps, expected " +
                                           std::to_string(m)};
  if (!supplied.front().empty()) return CertificationFailure{1, {}, "step 1 must have no forms"};
  auto computed = certify_linear_quotients(ideal);
  if (auto* fail = std::get_if<CertificationFailure>(&computed)) return *fail;
  const auto& cert = std::get<ColonCertificate<F>>(computed);
  for (std::size_t k = 1; k < m; ++k) {
    const auto& listed = supplied[k];
    for (const auto& u : listed)
      if (u.is_zero() || *u.degree() != 1)
        return CertificationFailure{k + 1, {}, "certificate entry is not a linear form"};
    auto rows = detail::coefficient_rows<F>(listed, n, 1);
    if (rank(rows) != listed.size()) return CertificationFailure{k + 1, {}, "certificate forms are dependent"};
    // listed must lie inside the computed colon part and have its dimension.
    auto both = cert.forms[k];
    both.insert(both.end(), listed.begin(), listed.end());
    if (rank(detail::coefficient_rows<F>(both, n, 1)) != cert.forms[k].size())
      return CertificationFailure{k + 1, {}, "a certificate form u does not satisfy u*f_k in <f_1..f_{k-1}>"};
    if (listed.size() != cert.forms[k].size())
      return CertificationFailure{k + 1, {}, "certificate forms do not span the linear part of the colon"};
  }
  return detail::finish_certificate(std::move(supplied), cert.definitive);
}

enum class SearchMode { exhaustive, greedy, automatic };

template <ExactField F>
struct OrderSearch {
  std::optional<std::vector<std::size_t>> order;   // 0-based indices into the input presentation
  std::optional<ColonCertificate<F>> certificate;  // for the reordered presentation
  bool exhaustive = false;
  // A not-found result is definitive only after an exhaustive search.
  bool definitive = false;
  // Longest prefix of any tried order whose steps all had linear colons.
  std::size_t deepest_prefix = 0;
  bool found() const { return order.has_value(); }
};

inline constexpr std::size_t kExhaustiveSearchLimit = 8;

// Searches for an ordering with linear quotients. The exhaustive path walks
// permutations of the generators sorted in descending lex order and returns
// the first certified one; the greedy path appends the first generator (in
// input order) whose colon against the current prefix is linear.
template <ExactField F>
OrderSearch<F> find_lq_order(const IdealPresentation<F>& ideal, SearchMode mode = SearchMode::automatic) {
  const std::size_t m = ideal.size();
  const bool exhaustive =
      mode == SearchMode::exhaustive || (mode == SearchMode::automatic && m <= kExhaustiveSearchLimit);
  std::optional<std::vector<Monomial>> monos;
  if (ideal.is_monomial()) monos = ideal.monomials();

  // For non-monomial ideals every step passes here; the degree-one colon part
  // always exists and confirmation happens downstream.
  std::vector<Monomial> prefix_monos;
  auto step_ok = [&](std::size_t candidate) {
    if (!monos) return true;
    return !detail::monomial_step_obstruction(prefix_monos, (*monos)[candidate]).has_value();
  };

  OrderSearch<F> result;
  result.exhaustive = exhaustive;
  std::vector<std::size_t> order;
  std::vector<bool> used(m, false);

  if (exhaustive) {
    std::vector<std::size_t> canonical(m);
    std::iota(canonical.begin(), canonical.end(), 0);
    std::stable_sort(canonical.begin(), canonical.end(), [&](std::size_t a, std::size_t b) {
      return lex_greater(ideal.generator(a), ideal.generator(b));
    });
    std::function<bool()> dfs = [&]() -> bool {
      result.deepest_prefix = std::max(result.deepest_prefix, order.size());
      if (order.size() == m) return true;
      for (std::size_t idx : canonical) {
        if (used[idx] || !step_ok(idx)) continue;
        used[idx] = true;
        order.push_back(idx);
        if (monos) prefix_monos.push_back((*monos)[idx]);
        if (dfs()) return true;
        used[idx] = false;
        order.pop_back();
        if (monos) prefix_monos.pop_back();
      }
      return false;
    };
    if (!dfs()) {
      result.definitive = true;
      return result;
    }
  } else {
    while (order.size() < m) {
      std::optional<std::size_t> next;
      for (std::size_t idx = 0; idx < m && !next; ++idx)
        if (!used[idx] && step_ok(idx)) next = idx;
      if (!next) {
        result.deepest_prefix = order.size();
        return result;
      }
      used[*next] = true;
      order.push_back(*next);
      if (monos) prefix_monos.push_back((*monos)[*next]);
    }
    result.deepest_prefix = m;
  }
  auto certified = certify_linear_quotients(ideal.reordered(order));
  if (auto* cert = std::get_if<ColonCertificate<F>>(&certified)) {
    result.order = order;
    result.certificate = std::move(*cert);
  }
  return result;
}

// Height of an ideal generated by independent linear forms: the number of
// generators.
template <ExactField F>
std::size_t height_of_linear_ideal(const IdealPresentation<F>& ideal) {
  if (ideal.kind() != IdealKind::linear_forms) throw ContractViolation("height_of_linear_ideal needs linear forms");
  return ideal.size();
}

}  // namespace lqres
