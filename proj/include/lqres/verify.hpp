#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lqres/graded.hpp"
#include "lqres/ideal.hpp"
#include "lqres/matrix.hpp"
#include "lqres/resolution.hpp"

namespace lqres {

// Graded Betti numbers beta_{i,j}: i homological position, j internal degree.
class BettiTable {
 public:
  void add(int i, int j, std::size_t count = 1) {
    if (count == 0) return;
    entries_[{i, j}] += count;
  }
  std::size_t at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Total rank per position 0..pd.
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> t;
    for (const auto& [key, v] : entries_) {
      if (static_cast<std::size_t>(key.first) >= t.size()) t.resize(static_cast<std::size_t>(key.first) + 1, 0);
      t[static_cast<std::size_t>(key.first)] += v;
    }
    return t;
  }
  std::optional<int> projective_dimension() const {
    if (entries_.empty()) return std::nullopt;
    return static_cast<int>(totals().size()) - 1;
  }
  // beta_{i,j} = 0 unless j = d + i.
  bool is_linear(int d) const {
    return std::all_of(entries_.begin(), entries_.end(), [d](const auto& e) { return e.first.second == d + e.first.first; });
  }

  // Standard Betti diagram: column i, row j - i, '.' for zero.
  std::string render() const {
    if (entries_.empty()) return "(zero)\n";
    const auto tot = totals();
    int lo = INT32_MAX, hi = INT32_MIN;
    for (const auto& [key, v] : entries_) {
      lo = std::min(lo, key.second - key.first);
      hi = std::max(hi, key.second - key.first);
    }
    std::vector<std::size_t> width(tot.size());
    for (std::size_t i = 0; i < tot.size(); ++i)
      width[i] = std::max(std::to_string(i).size(), std::to_string(tot[i]).size());
    std::size_t label = std::string("total:").size();
    for (int r = lo; r <= hi; ++r) label = std::max(label, std::to_string(r).size() + 1);
    std::ostringstream out;
    auto cell = [&](std::size_t i, const std::string& s) {
      out << ' ' << std::string(width[i] - s.size(), ' ') << s;
    };
    out << std::string(label, ' ');
    for (std::size_t i = 0; i < tot.size(); ++i) cell(i, std::to_string(i));
    out << '\n' << std::string(label - 6, ' ') << "total:";
    for (std::size_t i = 0; i < tot.size(); ++i) cell(i, std::to_string(tot[i]));
    out << '\n';
    for (int r = lo; r <= hi; ++r) {
      std::string lab = std::to_string(r) + ":";
      out << std::string(label - lab.size(), ' ') << lab;
      for (std::size_t i = 0; i < tot.size(); ++i) {
        auto v = at(static_cast<int>(i), r + static_cast<int>(i));
        cell(i, v == 0 ? "." : std::to_string(v));
      }
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> entries_;
};

template <ExactField F>
BettiTable betti_from_resolution(const Resolution<F>& res) {
  BettiTable t;
  for (std::size_t i = 0; i < res.num_modules(); ++i)
    for (int s : res.module(i).shifts()) t.add(static_cast<int>(i), s);
  return t;
}

// beta_{i,d+i} = sum_k C(q_k, i), with q_1 = 0.
inline BettiTable betti_from_q(const std::vector<std::size_t>& q_values, int d) {
  BettiTable t;
  for (auto q : q_values)
    for (std::size_t i = 0; i <= q; ++i)
      t.add(static_cast<int>(i), d + static_cast<int>(i), binomial(static_cast<long>(q), static_cast<long>(i)));
  return t;
}

// numerator(t) / (1 - t)^denominator_exponent.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // coefficient of t^k at index k
  std::size_t denominator_exponent = 0;

  std::string numerator_string() const {
    std::string out;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      auto c = numerator[k];
      if (c == 0) continue;
      std::string mag = std::to_string(c < 0 ? -c : c);
      std::string mono = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
      std::string body = k == 0 ? mag : (mag == "1" ? mono : mag + mono);
      if (out.empty())
        out = (c < 0 ? "-" : "") + body;
      else
        out += (c < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

namespace detail {

inline void trim(std::vector<std::int64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void add_shifted(std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& p, std::size_t shift,
                        std::int64_t sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += sign * p[k];
}

inline void inclusion_exclusion(const std::vector<Monomial>& gens, std::size_t from, const Monomial& lcm, int sign,
                                std::vector<std::int64_t>& acc) {
  for (std::size_t i = from; i < gens.size(); ++i) {
    Monomial l = mono_lcm(lcm, gens[i]);
    auto deg = static_cast<std::size_t>(l.degree());
    if (acc.size() <= deg) acc.resize(deg + 1, 0);
    acc[deg] += -sign;
    inclusion_exclusion(gens, i + 1, l, -sign, acc);
  }
}

// Numerator of S/I by pivoting on a variable: N(I) = N(I + <x>) + t N(I : x).
inline std::vector<std::int64_t> pivot_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return {1};
  std::vector<std::size_t> counts(nvars, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < nvars; ++v) support += g[v] > 0;
    if (support > 1) {
      all_pure = false;
      for (std::size_t v = 0; v < nvars; ++v) counts[v] += g[v] > 0;
    }
  }
  if (all_pure) {
    std::vector<std::int64_t> prod{1};
    for (const auto& g : gens) {
      std::vector<std::int64_t> next(prod.size() + static_cast<std::size_t>(g.degree()), 0);
      add_shifted(next, prod, 0, 1);
      add_shifted(next, prod, static_cast<std::size_t>(g.degree()), -1);
      prod = std::move(next);
    }
    trim(prod);
    return prod;
  }
  std::size_t pivot = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  Monomial x = Monomial::variable(nvars, pivot);
  std::vector<Monomial> plus, colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    colon.push_back(mono_quotient(g, mono_gcd(g, x)));
  }
  plus.push_back(x);
  auto a = pivot_numerator(std::move(plus), nvars);
  auto b = pivot_numerator(std::move(colon), nvars);
  add_shifted(a, b, 1, 1);
  trim(a);
  return a;
}

}  // namespace detail

enum class HilbertStrategy { automatic, inclusion_exclusion, pivot };

inline constexpr std::size_t kInclusionExclusionLimit = 20;

// K-polynomial of S/I for a monomial ideal: inclusion-exclusion over lcms of
// generator subsets up to 20 generators, pivot splitting beyond.
inline std::vector<std::int64_t> quotient_k_polynomial(const std::vector<Monomial>& gens, std::size_t nvars,
                                                       HilbertStrategy strategy = HilbertStrategy::automatic) {
  bool ie = strategy == HilbertStrategy::inclusion_exclusion ||
            (strategy == HilbertStrategy::automatic && gens.size() <= kInclusionExclusionLimit);
  if (!ie) return detail::pivot_numerator(gens, nvars);
  std::vector<std::int64_t> acc{1};
  detail::inclusion_exclusion(gens, 0, Monomial(nvars), 1, acc);
  detail::trim(acc);
  return acc;
}

template <ExactField F>
HilbertSeries hilbert_series_quotient(const IdealPresentation<F>& ideal,
                                      HilbertStrategy strategy = HilbertStrategy::automatic) {
  if (!ideal.is_monomial()) throw ContractViolation("Hilbert series oracle needs a monomial ideal");
  return {quotient_k_polynomial(ideal.monomials(), ideal.nvars(), strategy), ideal.nvars()};
}

// Series of I as (series of S) - (series of S/I).
template <ExactField F>
HilbertSeries hilbert_series_monomial(const IdealPresentation<F>& ideal,
                                      HilbertStrategy strategy = HilbertStrategy::automatic) {
  auto q = hilbert_series_quotient(ideal, strategy);
  std::vector<std::int64_t> num{1};
  detail::add_shifted(num, q.numerator, 0, -1);
  detail::trim(num);
  return {num, ideal.nvars()};
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::map<std::string, long long> witness;
};

inline CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail), {}}; }
inline CheckResult fail(std::string name, std::string detail, std::map<std::string, long long> witness = {}) {
  return {std::move(name), false, std::move(detail), std::move(witness)};
}

// d_i o d_{i+1} = 0 and augmentation o d_1 = 0, as polynomial identities.
// Witness i is the lower index of the composite (0 for the augmentation).
template <ExactField F>
CheckResult check_complex(const Resolution<F>& res) {
  const std::string name = "complex";
  if (res.empty() || res.length() == 0) return pass(name);
  try {
    for (std::size_t i = 0; i < res.length(); ++i) {
      auto lower = i == 0 ? res.augmentation_map() : res.differential(i);
      auto comp = map_compose(lower, res.differential(i + 1));
      for (std::size_t j = 0; j < comp.source().rank(); ++j)
        if (!comp.column(j).empty())
          return fail(name, "composite of differentials " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                " is nonzero",
                      {{"i", static_cast<long long>(i)},
                       {"row", static_cast<long long>(comp.column(j).begin()->first)},
                       {"col", static_cast<long long>(j)}});
    }
  } catch (const HomogeneityError& e) {
    return fail(name, std::string("composite is not homogeneous: ") + e.what());
  }
  return pass(name);
}

// Every shift of F_i equals d + i and every differential entry is a linear
// form; in particular no entry is a nonzero constant.
template <ExactField F>
CheckResult check_linear_and_minimal(const Resolution<F>& res, int d) {
  const std::string name = "linear_and_minimal";
  for (std::size_t i = 0; i < res.num_modules(); ++i)
    for (std::size_t j = 0; j < res.module(i).rank(); ++j)
      if (res.module(i).shift(j) != d + static_cast<int>(i))
        return fail(name, "linearity: shift of F_" + std::to_string(i) + " generator " + std::to_string(j) + " is " +
                              std::to_string(res.module(i).shift(j)) + ", expected " + std::to_string(d + static_cast<int>(i)),
                    {{"i", static_cast<long long>(i)}, {"basis", static_cast<long long>(j)}});
  for (std::size_t t = 0; t < res.augmentation().size(); ++t)
    if (res.augmentation()[t].is_zero() || *res.augmentation()[t].degree() != d)
      return fail(name, "linearity: generator " + std::to_string(t) + " does not have degree " + std::to_string(d),
                  {{"i", 0}, {"basis", static_cast<long long>(t)}});
  for (std::size_t i = 1; i < res.num_modules(); ++i) {
    const auto& delta = res.differential(i);
    if (auto bad = delta.homogeneity_violation())
      return fail(name, "homogeneity: entry of differential " + std::to_string(i) + " has the wrong degree",
                  {{"i", static_cast<long long>(i)},
                   {"row", static_cast<long long>(bad->first)},
                   {"col", static_cast<long long>(bad->second)}});
    for (std::size_t j = 0; j < delta.source().rank(); ++j)
      for (const auto& [r, p] : delta.column(j)) {
        if (*p.degree() == 0)
          return fail(name, "minimality: constant entry in differential " + std::to_string(i),
                      {{"i", static_cast<long long>(i)}, {"row", static_cast<long long>(r)}, {"col", static_cast<long long>(j)}});
        if (*p.degree() != 1)
          return fail(name, "linearity: non-linear entry in differential " + std::to_string(i),
                      {{"i", static_cast<long long>(i)}, {"row", static_cast<long long>(r)}, {"col", static_cast<long long>(j)}});
      }
  }
  return pass(name);
}

// The augmentation images span the same degree-d space as the ideal's
// generators and are as many.
template <ExactField F>
CheckResult check_augmentation(const Resolution<F>& res, const IdealPresentation<F>& ideal) {
  const std::string name = "augmentation";
  const auto& aug = res.augmentation();
  if (aug.size() != ideal.size())
    return fail(name, "resolution has " + std::to_string(aug.size()) + " generators, ideal has " +
                          std::to_string(ideal.size()));
  for (const auto& g : aug)
    if (g.is_zero() || *g.degree() != ideal.degree()) return fail(name, "augmentation entry of the wrong degree");
  std::vector<Polynomial<F>> both = ideal.generators();
  both.insert(both.end(), aug.begin(), aug.end());
  if (rank(detail::coefficient_rows<F>(both, ideal.nvars(), ideal.degree())) != ideal.size())
    return fail(name, "augmentation does not generate the ideal");
  return pass(name);
}

// Alternating sum of t^shift over the resolution equals the K-polynomial of I.
template <ExactField F>
CheckResult check_euler(const Resolution<F>& res, const IdealPresentation<F>& ideal) {
  const std::string name = "euler";
  if (!ideal.is_monomial()) return fail(name, "Euler check needs a monomial ideal");
  std::vector<std::int64_t> chi;
  for (std::size_t i = 0; i < res.num_modules(); ++i)
    for (int s : res.module(i).shifts()) {
      if (s < 0) return fail(name, "negative shift");
      if (chi.size() <= static_cast<std::size_t>(s)) chi.resize(static_cast<std::size_t>(s) + 1, 0);
      chi[static_cast<std::size_t>(s)] += i % 2 == 0 ? 1 : -1;
    }
  detail::trim(chi);
  auto expected = hilbert_series_monomial(ideal).numerator;
  if (chi != expected) {
    HilbertSeries got{chi, ideal.nvars()}, want{expected, ideal.nvars()};
    return fail(name, "alternating shift polynomial " + got.numerator_string() + " differs from K-polynomial " +
                          want.numerator_string());
  }
  return pass(name);
}

namespace detail {

// Ranks of the two maps meeting at one spot, in one degree. Over Q, ranks
// mod a large prime are tried first: they never exceed the rational ranks,
// so when they already add up to the dimension (and the composite is zero)
// the spot is exact over Q. Otherwise the exact ranks decide.
template <ExactField F>
std::pair<std::size_t, std::size_t> spot_ranks(const Matrix<F>& lower, const Matrix<F>* upper, std::size_t dim) {
  if constexpr (std::is_same_v<F, Rational>) {
    auto lo = modular_rank(lower);
    auto up = upper ? modular_rank(*upper) : std::optional<std::size_t>(0);
    if (lo && up && *lo + *up == dim) return {*lo, *up};
  }
  return {rank(lower), upper ? rank(*upper) : 0};
}

}  // namespace detail

// Degreewise exactness for every degree up to e_max. A failure (i, e) means
// the image of differential i misses part of the kernel of differential i-1
// in degree e, where differential 0 is the augmentation and i = length + 1
// tests injectivity of the last map.
template <ExactField F>
CheckResult check_exactness_degreewise(const Resolution<F>& res, std::size_t nvars, int e_max) {
  const std::string name = "exactness_degreewise";
  if (res.empty()) return pass(name, "empty resolution");
  const std::size_t p = res.length();
  int e_min = INT32_MAX;
  for (const auto& m : res.complex().modules())
    for (int s : m.shifts()) e_min = std::min(e_min, s);
  if (e_min == INT32_MAX) return pass(name);
  try {
    for (std::size_t i = 1; i <= p + 1; ++i) {
      // Exactness at F_{i-1}: image of d_i equals kernel of d_{i-1}.
      const std::size_t spot = i - 1;
      const auto lower = spot == 0 ? res.augmentation_map() : res.differential(spot);
      if (i <= p) {
        auto comp = map_compose(lower, res.differential(i));
        for (std::size_t j = 0; j < comp.source().rank(); ++j)
          if (!comp.column(j).empty()) {
            const int e = comp.source().shift(j);
            return fail(name, "not a complex at F_" + std::to_string(spot) + " in degree " + std::to_string(e),
                        {{"i", static_cast<long long>(i)}, {"e", e}});
          }
      }
      for (int e = e_min; e <= e_max; ++e) {
        auto lower_piece = graded_piece(lower, e, nvars);
        const std::size_t dim = lower_piece.source_basis.size();
        std::optional<GradedPiece<F>> upper_piece;
        if (i <= p) upper_piece = graded_piece(res.differential(i), e, nvars);
        const auto [lower_rank, image_rank] =
            detail::spot_ranks(lower_piece.matrix, upper_piece ? &upper_piece->matrix : nullptr, dim);
        const std::size_t kernel_dim = dim - lower_rank;
        if (image_rank != kernel_dim)
          return fail(name,
                      "homology at F_" + std::to_string(spot) + " in degree " + std::to_string(e) + " has dimension " +
                          std::to_string(kernel_dim - image_rank),
                      {{"i", static_cast<long long>(i)}, {"e", e}});
      }
    }
  } catch (const HomogeneityError& e) {
    return fail(name, std::string("cannot linearize: ") + e.what());
  }
  return pass(name);
}

// Length of the trimmed resolution equals q(I).
template <ExactField F>
CheckResult check_pd(const Resolution<F>& res, const ColonCertificate<F>& cert) {
  const std::string name = "pd";
  if (res.length() != cert.q_max)
    return fail(name, "projective dimension " + std::to_string(res.length()) + " but q(I) = " +
                          std::to_string(cert.q_max),
                {{"pd", static_cast<long long>(res.length())}, {"q", static_cast<long long>(cert.q_max)}});
  return pass(name, "pd = q(I) = " + std::to_string(cert.q_max));
}

template <ExactField F>
CheckResult check_betti_formula(const Resolution<F>& res, const ColonCertificate<F>& cert) {
  const std::string name = "betti_formula";
  if (!(betti_from_resolution(res) == betti_from_q(cert.q_values, res.degree())))
    return fail(name, "Betti numbers differ from sum_k C(q_k, i)");
  return pass(name);
}

namespace detail {

// Echelon span supporting incremental insertion; each stored row has a
// distinct pivot and zeros at the pivots of all earlier rows.
template <ExactField F>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  bool add(std::vector<F> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const F factor = c;
      for (std::size_t k = pivots_[r]; k < dim_; ++k)
        if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    const F inv = F::from_int(1) / v[p];
    for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

// Minimal free resolution computed directly, degree by degree, with no use of
// linear quotients: the kernel of the current map in each degree, minus the
// part generated from lower degrees, supplies the next module's generators.
// Positions above position_bound and degrees above degree_bound are not seen.
template <ExactField F>
BettiTable bruteforce_minimal_resolution(const IdealPresentation<F>& ideal, std::size_t position_bound,
                                         int degree_bound) {
  const std::size_t n = ideal.nvars();
  BettiTable table;
  // Each round finds minimal generators of a submodule N of `ambient`: first
  // the ideal inside S, then the kernel of the previous round's map.
  GradedFreeModule ambient({0});
  GradedMap<F> phi = row_map(ideal.generators(), GradedFreeModule(std::vector<int>(ideal.size(), ideal.degree())));
  bool first = true;
  for (std::size_t pos = 0; pos <= position_bound; ++pos) {
    std::vector<int> new_shifts;
    std::vector<ModuleElement<F>> new_columns;
    std::vector<std::vector<F>> previous;  // basis of N in degree e-1
    int e_start = INT32_MAX;
    for (int s : ambient.shifts()) e_start = std::min(e_start, s);
    for (int e = e_start; e <= degree_bound; ++e) {
      PieceBasis here(ambient, e, n);
      std::vector<std::vector<F>> current;
      auto piece = graded_piece(phi, e, n);
      if (first) {
        // N = image of the generators.
        detail::IncrementalSpan<F> span(here.size());
        for (std::size_t c = 0; c < piece.matrix.cols(); ++c) {
          std::vector<F> col(piece.matrix.rows());
          for (std::size_t r = 0; r < col.size(); ++r) col[r] = piece.matrix.at(r, c);
          if (span.add(col)) current.push_back(std::move(col));
        }
      } else {
        current = kernel_basis(piece.matrix);
      }
      // S_1 * N_{e-1} inside degree e.
      detail::IncrementalSpan<F> generated(here.size());
      if (!previous.empty()) {
        PieceBasis below(ambient, e - 1, n);
        for (const auto& v : previous) {
          auto elem = below.template element<F>(v);
          for (std::size_t a = 0; a < n; ++a) {
            ModuleElement<F> shifted(elem.size());
            for (std::size_t j = 0; j < elem.size(); ++j) shifted[j] = elem[j].times(Monomial::variable(n, a));
            generated.add(here.template coordinates<F>(shifted));
          }
        }
      }
      for (const auto& v : current)
        if (generated.add(v)) {
          new_shifts.push_back(e);
          new_columns.push_back(here.template element<F>(v));
        }
      previous = std::move(current);
    }
    if (new_shifts.empty()) break;
    for (int s : new_shifts) table.add(static_cast<int>(pos), s);
    GradedFreeModule next(new_shifts);
    GradedMap<F> next_phi(next, ambient);
    for (std::size_t c = 0; c < new_columns.size(); ++c)
      for (std::size_t r = 0; r < new_columns[c].size(); ++r) next_phi.set(r, c, new_columns[c][r]);
    // From here on N is the kernel of phi inside its source.
    first = false;
    ambient = next;
    phi = std::move(next_phi);
  }
  return table;
}

// Degree bound that covers every Betti number of a monomial ideal: the degree
// of the lcm of all generators (Taylor resolution bound).
template <ExactField F>
int monomial_degree_bound(const IdealPresentation<F>& ideal) {
  Monomial l(ideal.nvars());
  for (const auto& m : ideal.monomials()) l = mono_lcm(l, m);
  return l.degree();
}

template <ExactField F>
BettiTable bruteforce_minimal_resolution(const IdealPresentation<F>& ideal) {
  if (!ideal.is_monomial()) throw ContractViolation("default bounds need a monomial ideal; pass them explicitly");
  return bruteforce_minimal_resolution(ideal, ideal.nvars(), monomial_degree_bound(ideal));
}

struct VerificationReport {
  std::vector<CheckResult> checks;
  // "exact" when exactness follows from a global identity (Euler/Hilbert for
  // monomial ideals); "bounded-degree certificate" when only checked up to e_max.
  std::string exactness_basis;
  int e_max = 0;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  std::optional<int> e_max;
  // Run the degreewise check for monomial ideals too (it is always run for
  // the others).
  bool force_degreewise = false;
};

template <ExactField F>
VerificationReport verify_resolution(const Resolution<F>& res, const IdealPresentation<F>& ideal,
                                     const ColonCertificate<F>* cert, VerifyOptions opts = {}) {
  VerificationReport report;
  report.checks.push_back(check_augmentation(res, ideal));
  report.checks.push_back(check_complex(res));
  report.checks.push_back(check_linear_and_minimal(res, ideal.degree()));
  report.e_max = opts.e_max.value_or(ideal.degree() + static_cast<int>(res.length()) + 2);
  if (ideal.is_monomial()) {
    report.checks.push_back(check_euler(res, ideal));
    report.exactness_basis = "exact";
  }
  if (!ideal.is_monomial() || opts.force_degreewise) {
    report.checks.push_back(check_exactness_degreewise(res, ideal.nvars(), report.e_max));
    if (!ideal.is_monomial()) report.exactness_basis = "bounded-degree certificate";
  }
  if (cert != nullptr) {
    report.checks.push_back(check_pd(res, *cert));
    report.checks.push_back(check_betti_formula(res, *cert));
  }
  return report;
}

}  // namespace lqres
