#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lqres/errors.hpp"
#include "lqres/matrix.hpp"
#include "lqres/polynomial.hpp"

namespace lqres {

// Free module S(-a_1) + ... + S(-a_b) with an ordered basis.
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> shifts) : shifts_(std::move(shifts)) {}

  std::size_t rank() const { return shifts_.size(); }
  int shift(std::size_t j) const { return shifts_.at(j); }
  const std::vector<int>& shifts() const { return shifts_; }
  bool empty() const { return shifts_.empty(); }

  GradedFreeModule twisted(int by) const {
    auto s = shifts_;
    for (auto& a : s) a += by;
    return GradedFreeModule(std::move(s));
  }

  friend GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
    auto s = a.shifts_;
    s.insert(s.end(), b.shifts_.begin(), b.shifts_.end());
    return GradedFreeModule(std::move(s));
  }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> shifts_;
};

// An element of a free module: one polynomial per basis vector.
template <ExactField F>
using ModuleElement = std::vector<Polynomial<F>>;

// Homogeneous map between graded free modules, stored by sparse columns.
// Column j is the image of source basis vector j.
template <ExactField F>
class GradedMap {
 public:
  using Column = std::map<std::size_t, Polynomial<F>>;

  GradedMap() = default;
  GradedMap(GradedFreeModule source, GradedFreeModule target)
      : source_(std::move(source)), target_(std::move(target)), columns_(source_.rank()) {}

  static GradedMap identity(const GradedFreeModule& m, std::size_t nvars) {
    GradedMap id(m, m);
    for (std::size_t j = 0; j < m.rank(); ++j) id.set(j, j, Polynomial<F>::monomial(Monomial(nvars)));
    return id;
  }

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const Column& column(std::size_t j) const { return columns_.at(j); }

  Polynomial<F> entry(std::size_t row, std::size_t col) const {
    const auto& c = columns_.at(col);
    auto it = c.find(row);
    return it == c.end() ? Polynomial<F>{} : it->second;
  }

  // Nonzero entries must have degree source.shift(col) - target.shift(row).
  void set(std::size_t row, std::size_t col, Polynomial<F> value) {
    if (!value.is_zero() && *value.degree() != required_degree(row, col))
      throw HomogeneityError("entry (" + std::to_string(row) + "," + std::to_string(col) + ") has degree " +
                             std::to_string(*value.degree()) + ", expected " +
                             std::to_string(required_degree(row, col)));
    set_unchecked(row, col, std::move(value));
  }

  // Skips the degree check. Used by importers and mutation harnesses, which
  // must be able to represent broken data for the checkers to report on.
  void set_unchecked(std::size_t row, std::size_t col, Polynomial<F> value) {
    if (row >= target_.rank() || col >= source_.rank()) throw ContractViolation("entry index out of range");
    auto& c = columns_[col];
    if (value.is_zero())
      c.erase(row);
    else
      c[row] = std::move(value);
  }

  // Same entries, relabelled modules. Entries are not re-checked.
  GradedMap with_modules_unchecked(GradedFreeModule source, GradedFreeModule target) const {
    if (source.rank() != source_.rank() || target.rank() != target_.rank())
      throw ContractViolation("relabelling must keep ranks");
    GradedMap r = *this;
    r.source_ = std::move(source);
    r.target_ = std::move(target);
    return r;
  }

  int required_degree(std::size_t row, std::size_t col) const { return source_.shift(col) - target_.shift(row); }

  // First entry violating homogeneity, if any.
  std::optional<std::pair<std::size_t, std::size_t>> homogeneity_violation() const {
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& [i, p] : columns_[j])
        if (*p.degree() != required_degree(i, j)) return std::make_pair(i, j);
    return std::nullopt;
  }

  bool is_zero() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  GradedMap twisted(int by) const { return with_modules_unchecked(source_.twisted(by), target_.twisted(by)); }

  ModuleElement<F> apply(const ModuleElement<F>& x) const {
    if (x.size() != source_.rank()) throw ContractViolation("element has wrong length");
    ModuleElement<F> y(target_.rank());
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [i, p] : columns_[j]) y[i] += p * x[j];
    }
    return y;
  }

  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Column> columns_;
};

// g o f. Requires f.target() == g.source().
template <ExactField F>
GradedMap<F> map_compose(const GradedMap<F>& g, const GradedMap<F>& f) {
  if (!(f.target() == g.source())) throw ContractViolation("map_compose: f.target does not match g.source");
  GradedMap<F> r(f.source(), g.target());
  for (std::size_t j = 0; j < f.source().rank(); ++j) {
    ModuleElement<F> acc(g.target().rank());
    for (const auto& [k, fk] : f.column(j))
      for (const auto& [i, gik] : g.column(k)) acc[i] += gik * fk;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (!acc[i].is_zero()) r.set_unchecked(i, j, std::move(acc[i]));
  }
  return r;
}

// Basis of the degree-e piece of a free module: pairs (basis index j,
// monomial of degree e - shift_j), ordered by j and then descending lex.
class PieceBasis {
 public:
  PieceBasis(const GradedFreeModule& module, int degree, std::size_t nvars)
      : module_(module), degree_(degree), nvars_(nvars) {
    offsets_.reserve(module.rank() + 1);
    std::size_t total = 0;
    for (std::size_t j = 0; j < module.rank(); ++j) {
      offsets_.push_back(total);
      total += count_monomials(nvars, degree - module.shift(j));
    }
    offsets_.push_back(total);
  }

  std::size_t size() const { return offsets_.back(); }
  int degree() const { return degree_; }
  std::size_t nvars() const { return nvars_; }
  const GradedFreeModule& module() const { return module_; }
  std::size_t offset(std::size_t j) const { return offsets_[j]; }
  std::size_t index(std::size_t j, const Monomial& m) const { return offsets_[j] + monomial_rank(m); }

  std::vector<std::pair<std::size_t, Monomial>> elements() const {
    std::vector<std::pair<std::size_t, Monomial>> out;
    out.reserve(size());
    for (std::size_t j = 0; j < module_.rank(); ++j)
      for (auto& m : monomials_of_degree(nvars_, degree_ - module_.shift(j))) out.emplace_back(j, std::move(m));
    return out;
  }

  // Coordinates of a homogeneous element of degree `degree()`.
  template <ExactField F>
  std::vector<F> coordinates(const ModuleElement<F>& x) const {
    if (x.size() != module_.rank()) throw ContractViolation("element has wrong length");
    std::vector<F> v(size());
    for (std::size_t j = 0; j < x.size(); ++j)
      for (const auto& t : x[j].terms()) {
        if (t.monomial.degree() + module_.shift(j) != degree_)
          throw HomogeneityError("element is not homogeneous of degree " + std::to_string(degree_));
        v[index(j, t.monomial)] = t.coeff;
      }
    return v;
  }

  template <ExactField F>
  ModuleElement<F> element(const std::vector<F>& coords) const {
    if (coords.size() != size()) throw ContractViolation("coordinate vector has wrong length");
    ModuleElement<F> x(module_.rank());
    std::size_t pos = 0;
    for (std::size_t j = 0; j < module_.rank(); ++j) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (auto& m : monomials_of_degree(nvars_, degree_ - module_.shift(j))) {
        if (!coords[pos].is_zero()) terms.push_back({std::move(m), coords[pos]});
        ++pos;
      }
      x[j] = Polynomial<F>::from_terms(std::move(terms));
    }
    return x;
  }

 private:
  GradedFreeModule module_;
  int degree_;
  std::size_t nvars_;
  std::vector<std::size_t> offsets_;
};

// f restricted to degree e, as a K-matrix from PieceBasis(source) to
// PieceBasis(target).
template <ExactField F>
struct GradedPiece {
  PieceBasis source_basis;
  PieceBasis target_basis;
  Matrix<F> matrix;
};

template <ExactField F>
GradedPiece<F> graded_piece(const GradedMap<F>& f, int e, std::size_t nvars) {
  PieceBasis src(f.source(), e, nvars), tgt(f.target(), e, nvars);
  Matrix<F> m(tgt.size(), src.size());
  for (std::size_t j = 0; j < f.source().rank(); ++j) {
    const int mono_deg = e - f.source().shift(j);
    if (mono_deg < 0) continue;
    const auto monos = monomials_of_degree(nvars, mono_deg);
    for (const auto& [i, p] : f.column(j)) {
      // A non-homogeneous entry cannot be linearized; callers validate first.
      if (*p.degree() != f.required_degree(i, j))
        throw HomogeneityError("graded_piece: entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") violates homogeneity");
      for (std::size_t c = 0; c < monos.size(); ++c)
        for (const auto& t : p.terms()) m.at(tgt.index(i, t.monomial * monos[c]), src.offset(j) + c) += t.coeff;
    }
  }
  return {std::move(src), std::move(tgt), std::move(m)};
}

// The 1 x m map F_0 -> S sending basis vector t to gens[t].
template <ExactField F>
GradedMap<F> row_map(const std::vector<Polynomial<F>>& gens, const GradedFreeModule& source) {
  GradedMap<F> g(source, GradedFreeModule({0}));
  for (std::size_t t = 0; t < gens.size(); ++t) g.set_unchecked(0, t, gens[t]);
  return g;
}

}  // namespace lqres
