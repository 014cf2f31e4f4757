#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lqres/ideal.hpp"
#include "lqres/matrix.hpp"

namespace lqres {

// All degree-d monomials in n variables, lex order.
template <ExactField F>
IdealPresentation<F> power_ideal(std::size_t n, int d) {
  std::vector<Polynomial<F>> gens;
  for (auto& m : monomials_of_degree(n, d)) gens.push_back(Polynomial<F>::monomial(std::move(m)));
  return IdealPresentation<F>(Ring::with_default_names(n), std::move(gens));
}

// All squarefree degree-d monomials in n variables, lex order.
template <ExactField F>
IdealPresentation<F> squarefree_veronese(std::size_t n, int d) {
  std::vector<Polynomial<F>> gens;
  for (auto& m : monomials_of_degree(n, d))
    if (m.is_squarefree()) gens.push_back(Polynomial<F>::monomial(std::move(m)));
  return IdealPresentation<F>(Ring::with_default_names(n), std::move(gens));
}

// Facets on vertices 0..n-1, with an optional shelling order consumed as given.
struct SimplicialComplexFacets {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> facets;
  std::optional<std::vector<std::size_t>> shelling;

  void validate() const {
    for (const auto& f : facets)
      for (auto v : f)
        if (v >= vertices) throw PresentationError("facet vertex out of range");
    for (std::size_t a = 0; a < facets.size(); ++a)
      for (std::size_t b = 0; b < facets.size(); ++b) {
        if (a == b) continue;
        std::set<std::size_t> fa(facets[a].begin(), facets[a].end()), fb(facets[b].begin(), facets[b].end());
        if (std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()))
          throw PresentationError("facet " + std::to_string(a) + " is contained in facet " + std::to_string(b));
      }
    if (shelling) {
      auto s = *shelling;
      std::sort(s.begin(), s.end());
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != i || s.size() != facets.size()) throw PresentationError("shelling must permute the facets");
    }
  }
};

// One squarefree generator per facet F, the product of the variables outside
// F, listed in shelling order. Facets must share one size c, giving degree
// n - c.
template <ExactField F>
IdealPresentation<F> alexander_dual_ideal(const SimplicialComplexFacets& complex) {
  complex.validate();
  if (complex.facets.empty()) throw PresentationError("complex has no facets");
  const std::size_t c = complex.facets.front().size();
  for (const auto& f : complex.facets)
    if (f.size() != c) throw PresentationError("facets of mixed size are outside the equigenerated case");
  std::vector<std::size_t> order(complex.facets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (complex.shelling) order = *complex.shelling;
  std::vector<Polynomial<F>> gens;
  for (auto idx : order) {
    std::vector<int> e(complex.vertices, 1);
    for (auto v : complex.facets[idx]) e[v] = 0;
    gens.push_back(Polynomial<F>::monomial(Monomial(std::move(e))));
  }
  return IdealPresentation<F>(Ring::with_default_names(complex.vertices), std::move(gens));
}

namespace detail {

// Engine output is fixed by the standard; reduction by modulo keeps draws
// identical across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline long draw_signed(std::mt19937_64& rng, long radius) {
  return static_cast<long>(draw(rng, static_cast<std::uint64_t>(2 * radius + 1))) - radius;
}

}  // namespace detail

// m distinct degree-d monomials chosen by a seeded partial shuffle.
inline std::vector<Monomial> random_monomial_set(std::size_t n, int d, std::size_t m, std::uint64_t seed) {
  auto all = monomials_of_degree(n, d);
  if (m > all.size()) throw PresentationError("only " + std::to_string(all.size()) + " monomials of that degree exist");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) std::swap(all[i], all[i + detail::draw(rng, all.size() - i)]);
  all.resize(m);
  return all;
}

template <ExactField F>
struct LqInstance {
  IdealPresentation<F> ideal;        // generators in the certified order
  std::vector<std::size_t> order;    // positions in the original draw
  ColonCertificate<F> certificate;
};

struct Rejection {
  std::string reason;
  bool definitive = false;  // exhaustive search proved there is no order
};

template <ExactField F>
using RandomLqResult = std::variant<LqInstance<F>, Rejection>;

// One seeded draw of m degree-d monomials, kept only when an order with
// linear quotients is found.
template <ExactField F>
RandomLqResult<F> random_lq_ideal(std::size_t n, int d, std::size_t m, std::uint64_t seed) {
  std::vector<Polynomial<F>> gens;
  for (auto& mono : random_monomial_set(n, d, m, seed)) gens.push_back(Polynomial<F>::monomial(std::move(mono)));
  IdealPresentation<F> drawn(Ring::with_default_names(n), std::move(gens));
  auto search = find_lq_order(drawn);
  if (!search.found())
    return Rejection{search.definitive ? "no ordering has linear quotients" : "greedy order search failed",
                     search.definitive};
  return LqInstance<F>{drawn.reordered(*search.order), *search.order, std::move(*search.certificate)};
}

// Rejection sampling over single draws; draw seeds come from one engine
// seeded with `seed`. Rejects only when every draw fails.
template <ExactField F>
RandomLqResult<F> sample_lq_ideal(std::size_t n, int d, std::size_t m, std::uint64_t seed,
                                  std::size_t max_draws = 1000) {
  std::mt19937_64 seeds(seed);
  for (std::size_t attempt = 0; attempt < max_draws; ++attempt) {
    auto r = random_lq_ideal<F>(n, d, m, seeds());
    if (std::holds_alternative<LqInstance<F>>(r)) return r;
  }
  return Rejection{"no accepted draw in " + std::to_string(max_draws) + " attempts", false};
}

// r K-independent linear forms with small integer coefficients.
template <ExactField F>
std::vector<Polynomial<F>> random_linear_forms(std::size_t n, std::size_t r, std::uint64_t seed) {
  if (r > n) throw PresentationError("cannot have more independent linear forms than variables");
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Polynomial<F>> forms;
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t a = 0; a < n; ++a)
        terms.push_back({Monomial::variable(n, a), F::from_int(detail::draw_signed(rng, 5))});
      forms.push_back(Polynomial<F>::from_terms(std::move(terms)));
    }
    if (std::any_of(forms.begin(), forms.end(), [](const auto& f) { return f.is_zero(); })) continue;
    if (rank(detail::coefficient_rows<F>(forms, n, 1)) == r) return forms;
  }
}

// p(l_1, ..., l_n): substitutes images[i] for x_i.
template <ExactField F>
Polynomial<F> substitute(const Polynomial<F>& p, const std::vector<Polynomial<F>>& images, std::size_t nvars) {
  Polynomial<F> out;
  for (const auto& t : p.terms()) {
    auto term = Polynomial<F>::monomial(Monomial(nvars), t.coeff);
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i)
      for (int k = 0; k < t.monomial[i]; ++k) term = term * images.at(i);
    out += term;
  }
  return out;
}

// Image of the ideal under a seeded random invertible linear change of
// variables. Colons commute with ring automorphisms, so a linear-quotients
// order stays one.
template <ExactField F>
IdealPresentation<F> random_linear_substitution(const IdealPresentation<F>& ideal, std::uint64_t seed) {
  auto images = random_linear_forms<F>(ideal.nvars(), ideal.nvars(), seed);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, images, ideal.nvars()));
  return IdealPresentation<F>(ideal.ring(), std::move(gens));
}

}  // namespace lqres
