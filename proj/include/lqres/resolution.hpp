#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lqres/errors.hpp"
#include "lqres/graded.hpp"
#include "lqres/ideal.hpp"
#include "lqres/matrix.hpp"

namespace lqres {

// F_p -> ... -> F_1 -> F_0 with differential(i): F_i -> F_{i-1}.
template <ExactField F>
class FreeComplex {
 public:
  FreeComplex() = default;
  explicit FreeComplex(GradedFreeModule f0) : modules_{std::move(f0)} {}
  FreeComplex(std::vector<GradedFreeModule> modules, std::vector<GradedMap<F>> differentials)
      : modules_(std::move(modules)), differentials_(std::move(differentials)) {
    if (modules_.empty() ? !differentials_.empty() : differentials_.size() + 1 != modules_.size())
      throw ContractViolation("complex needs one differential per module above F_0");
    for (std::size_t i = 1; i < modules_.size(); ++i) {
      const auto& d = differentials_[i - 1];
      if (!(d.source() == modules_[i]) || !(d.target() == modules_[i - 1]))
        throw ContractViolation("differential " + std::to_string(i) + " does not match its modules");
    }
  }

  bool empty() const { return modules_.empty(); }
  std::size_t num_modules() const { return modules_.size(); }
  // Index of the last module; 0 for a single free module.
  std::size_t length() const { return modules_.empty() ? 0 : modules_.size() - 1; }
  const GradedFreeModule& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  // 1-based: differential(i) maps F_i to F_{i-1}.
  const GradedMap<F>& differential(std::size_t i) const { return differentials_.at(i - 1); }
  const std::vector<GradedMap<F>>& differentials() const { return differentials_; }

  // Module i, or the zero module past the end.
  GradedFreeModule module_or_zero(std::size_t i) const { return i < modules_.size() ? modules_[i] : GradedFreeModule{}; }

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;

 private:
  std::vector<GradedFreeModule> modules_;
  std::vector<GradedMap<F>> differentials_;
};

// A free resolution of an ideal: the complex together with the images of the
// F_0 basis (the generators) and the generating degree d.
template <ExactField F>
class Resolution {
 public:
  Resolution() = default;
  Resolution(FreeComplex<F> complex, std::vector<Polynomial<F>> augmentation, int degree)
      : complex_(std::move(complex)), augmentation_(std::move(augmentation)), degree_(degree) {
    const std::size_t r0 = complex_.empty() ? 0 : complex_.module(0).rank();
    if (augmentation_.size() != r0) throw ContractViolation("augmentation must have one entry per F_0 generator");
  }

  const FreeComplex<F>& complex() const { return complex_; }
  const std::vector<Polynomial<F>>& augmentation() const { return augmentation_; }
  int degree() const { return degree_; }
  bool empty() const { return complex_.empty(); }
  // Projective dimension once trailing zero modules are trimmed.
  std::size_t length() const { return complex_.length(); }
  std::size_t num_modules() const { return complex_.num_modules(); }
  const GradedFreeModule& module(std::size_t i) const { return complex_.module(i); }
  const GradedMap<F>& differential(std::size_t i) const { return complex_.differential(i); }

  // F_0 -> S.
  GradedMap<F> augmentation_map() const { return row_map(augmentation_, complex_.module(0)); }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : complex_.modules()) r.push_back(m.rank());
    return r;
  }

  friend bool operator==(const Resolution&, const Resolution&) = default;

 private:
  FreeComplex<F> complex_;
  std::vector<Polynomial<F>> augmentation_;
  int degree_ = 0;
};

// 0 -> S(-d) -> <f> -> 0.
template <ExactField F>
Resolution<F> principal_resolution(const Polynomial<F>& f) {
  if (f.is_zero()) throw ContractViolation("principal resolution of the zero ideal");
  return Resolution<F>(FreeComplex<F>(GradedFreeModule({*f.degree()})), {f}, *f.degree());
}

namespace detail {

inline void combinations(std::size_t q, std::size_t i, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s + (i - cur.size()) <= q; ++s) {
      cur.push_back(s);
      rec(s + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// Koszul complex on independent linear forms l_1..l_q, resolving S/<l>
// twisted by (-shift). Position i has the i-subsets of {1..q} in lex order
// as basis, all with shift `shift + i`, and
//   d(e_{j_1 < ... < j_i}) = sum_t (-1)^(t+1) l_{j_t} e_{... omit j_t ...}.
template <ExactField F>
FreeComplex<F> koszul_resolution(std::span<const Polynomial<F>> forms, int shift, std::size_t nvars) {
  for (const auto& l : forms)
    if (l.is_zero() || *l.degree() != 1) throw ContractViolation("Koszul complex needs nonzero linear forms");
  if (rank(detail::coefficient_rows<F>(forms, nvars, 1)) != forms.size())
    throw ContractViolation("Koszul complex needs K-independent linear forms");
  const std::size_t q = forms.size();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(q + 1);
  std::vector<GradedFreeModule> modules;
  for (std::size_t i = 0; i <= q; ++i) {
    detail::combinations(q, i, subsets[i]);
    modules.emplace_back(std::vector<int>(subsets[i].size(), shift + static_cast<int>(i)));
  }
  std::vector<GradedMap<F>> diffs;
  for (std::size_t i = 1; i <= q; ++i) {
    std::map<std::vector<std::size_t>, std::size_t> lower;
    for (std::size_t r = 0; r < subsets[i - 1].size(); ++r) lower.emplace(subsets[i - 1][r], r);
    GradedMap<F> d(modules[i], modules[i - 1]);
    for (std::size_t c = 0; c < subsets[i].size(); ++c) {
      const auto& J = subsets[i][c];
      for (std::size_t t = 0; t < J.size(); ++t) {
        auto face = J;
        face.erase(face.begin() + static_cast<long>(t));
        const auto& l = forms[J[t]];
        d.set(lower.at(face), c, t % 2 == 0 ? l : -l);
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex<F>(std::move(modules), std::move(diffs));
}

// Resolution of (S/I)(-twist) read off a resolution of I: C_0 = S(-twist),
// C_i = F_{i-1}(-twist), with the augmentation as the first differential.
template <ExactField F>
FreeComplex<F> quotient_resolution(const Resolution<F>& res, int twist) {
  std::vector<GradedFreeModule> modules{GradedFreeModule({twist})};
  std::vector<GradedMap<F>> diffs;
  for (std::size_t i = 0; i < res.num_modules(); ++i) {
    modules.push_back(res.module(i).twisted(twist));
    if (i == 0)
      diffs.push_back(res.augmentation_map().twisted(twist));
    else
      diffs.push_back(res.differential(i).twisted(twist));
  }
  return FreeComplex<F>(std::move(modules), std::move(diffs));
}

// Solves sigma(x_j) = targets_j for elements of degree e. Free variables are
// set to zero. nullopt marks a target outside the image of sigma.
template <ExactField F>
std::vector<std::optional<ModuleElement<F>>> lift_through(const GradedMap<F>& sigma,
                                                          const std::vector<ModuleElement<F>>& targets, int e,
                                                          std::size_t nvars) {
  auto piece = graded_piece(sigma, e, nvars);
  Matrix<F> rhs(piece.target_basis.size(), targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    auto coords = piece.target_basis.template coordinates<F>(targets[j]);
    for (std::size_t r = 0; r < coords.size(); ++r) rhs.at(r, j) = coords[r];
  }
  std::vector<std::optional<ModuleElement<F>>> out;
  for (auto& sol : solve_many(piece.matrix, rhs)) {
    if (sol)
      out.emplace_back(piece.source_basis.template element<F>(*sol));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

template <ExactField F>
std::optional<ModuleElement<F>> lift_through(const GradedMap<F>& sigma, const ModuleElement<F>& target, int e,
                                             std::size_t nvars) {
  return std::move(lift_through(sigma, std::vector<ModuleElement<F>>{target}, e, nvars).front());
}

struct HorseshoeOptions {
  // For monomial data, take the first connecting map from monomial division
  // (smallest t with f_t | u*f_k) instead of solving a linear system.
  bool monomial_fast_path = true;
};

namespace detail {

template <ExactField F>
GradedMap<F> zero_map(const GradedFreeModule& s, const GradedFreeModule& t) {
  return GradedMap<F>(s, t);
}

// Lifts each column of `targets` (a map C_i -> A_{i-2}, or C_1 -> S) through
// sigma, grouping columns by degree. sigma may be absent when A_{i-1} is zero,
// in which case every target must vanish.
template <ExactField F>
GradedMap<F> lift_columns(const GradedMap<F>* sigma, const GradedFreeModule& lift_target_module,
                          const GradedMap<F>& targets, std::size_t nvars, std::size_t step, std::size_t position) {
  GradedMap<F> lambda(targets.source(), lift_target_module);
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t j = 0; j < targets.source().rank(); ++j) {
    if (targets.column(j).empty()) continue;
    by_degree[targets.source().shift(j)].push_back(j);
  }
  for (const auto& [e, cols] : by_degree) {
    if (sigma == nullptr)
      throw ConstructionError(step, position, "nonzero obstruction with nothing to lift through");
    std::vector<ModuleElement<F>> rhs;
    for (auto j : cols) {
      ModuleElement<F> v(targets.target().rank());
      for (const auto& [r, p] : targets.column(j)) v[r] = p;
      rhs.push_back(std::move(v));
    }
    auto sols = lift_through(*sigma, rhs, e, nvars);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!sols[c])
        throw ConstructionError(step, position,
                                "lift has no solution in degree " + std::to_string(e) +
                                    " (the sequence is not exact: colon not generated by the given forms)");
      for (std::size_t r = 0; r < sols[c]->size(); ++r) lambda.set(r, cols[c], (*sols[c])[r]);
    }
  }
  return lambda;
}

template <ExactField F>
std::optional<GradedMap<F>> monomial_first_lift(const Resolution<F>& resA, const GradedMap<F>& deltaC1,
                                                const Polynomial<F>& fk) {
  if (!fk.is_monomial()) return std::nullopt;
  for (const auto& g : resA.augmentation())
    if (!g.is_monomial()) return std::nullopt;
  const Monomial& fm = fk.leading_term().monomial;
  GradedMap<F> lambda(deltaC1.source(), resA.module(0));
  for (std::size_t j = 0; j < deltaC1.source().rank(); ++j) {
    const auto& col = deltaC1.column(j);
    if (col.empty()) continue;
    const auto& entry = col.begin()->second;
    if (!entry.is_monomial()) return std::nullopt;
    const Monomial target = entry.leading_term().monomial * fm;
    std::optional<std::size_t> t;
    for (std::size_t s = 0; s < resA.augmentation().size() && !t; ++s)
      if (resA.augmentation()[s].leading_term().monomial.divides(target)) t = s;
    if (!t) return std::nullopt;
    lambda.set(*t, j,
               Polynomial<F>::monomial(mono_quotient(target, resA.augmentation()[*t].leading_term().monomial),
                                       -entry.leading_term().coeff));
  }
  return lambda;
}

}  // namespace detail

// One horseshoe step for 0 -> I_{k-1} -> I_k -> (S/L)(-d) -> 0.
//
// resA resolves I_{k-1}; resC resolves the cyclic module (S/L)(-d) with C_0 of
// rank one; f_k is the image of the C_0 generator. The new resolution has
// F_i = A_i + C_i and differential [[dA_i, lambda_i], [0, dC_i]] where
//   augA o lambda_1      = -f_k * dC_1
//   dA_{i-1} o lambda_i  = -lambda_{i-1} o dC_i   (i >= 2).
template <ExactField F>
Resolution<F> horseshoe_step(const Resolution<F>& resA, const FreeComplex<F>& resC, const Polynomial<F>& fk,
                             std::size_t nvars, std::size_t step = 0, HorseshoeOptions opts = {}) {
  if (resA.empty()) throw ContractViolation("horseshoe_step needs a resolution of I_{k-1}");
  if (resC.empty() || resC.module(0).rank() != 1) throw ContractViolation("horseshoe_step needs C_0 of rank one");
  if (fk.is_zero() || *fk.degree() != resC.module(0).shift(0))
    throw ContractViolation("f_k must have the degree of the C_0 generator");

  const std::size_t pA = resA.length(), pC = resC.length(), p = std::max(pA, pC);
  const auto& A = resA.complex();
  auto modA = [&](std::size_t i) { return A.module_or_zero(i); };
  auto modC = [&](std::size_t i) { return resC.module_or_zero(i); };

  // lambda[i]: C_i -> A_{i-1}, for i = 1..pC.
  std::vector<GradedMap<F>> lambda(pC + 1);
  for (std::size_t i = 1; i <= pC; ++i) {
    const auto& dC = resC.differential(i);
    GradedMap<F> obstruction;
    if (i == 1) {
      obstruction = GradedMap<F>(dC.source(), GradedFreeModule({0}));
      for (std::size_t j = 0; j < dC.source().rank(); ++j)
        for (const auto& [r, p0] : dC.column(j)) obstruction.set_unchecked(0, j, -(fk * p0));
      std::optional<GradedMap<F>> fast;
      if (opts.monomial_fast_path) fast = detail::monomial_first_lift(resA, dC, fk);
      if (fast) {
        lambda[1] = std::move(*fast);
        continue;
      }
      auto eps = resA.augmentation_map();
      lambda[1] = detail::lift_columns(&eps, modA(0), obstruction, nvars, step, i);
    } else {
      auto composite = map_compose(lambda[i - 1], dC);
      obstruction = GradedMap<F>(composite.source(), composite.target());
      for (std::size_t j = 0; j < composite.source().rank(); ++j)
        for (const auto& [r, p0] : composite.column(j)) obstruction.set_unchecked(r, j, -p0);
      const GradedMap<F>* sigma = i - 1 <= pA && i - 1 >= 1 ? &A.differential(i - 1) : nullptr;
      lambda[i] = detail::lift_columns(sigma, modA(i - 1), obstruction, nvars, step, i);
    }
  }

  std::vector<GradedFreeModule> modules;
  for (std::size_t i = 0; i <= p; ++i) modules.push_back(direct_sum(modA(i), modC(i)));
  std::vector<GradedMap<F>> diffs;
  for (std::size_t i = 1; i <= p; ++i) {
    GradedMap<F> d(modules[i], modules[i - 1]);
    const std::size_t rowOff = modA(i - 1).rank(), colOff = modA(i).rank();
    if (i <= pA)
      for (std::size_t j = 0; j < modA(i).rank(); ++j)
        for (const auto& [r, v] : A.differential(i).column(j)) d.set(r, j, v);
    if (i <= pC) {
      for (std::size_t j = 0; j < modC(i).rank(); ++j) {
        for (const auto& [r, v] : lambda[i].column(j)) d.set(r, colOff + j, v);
        for (const auto& [r, v] : resC.differential(i).column(j)) d.set(rowOff + r, colOff + j, v);
      }
    }
    diffs.push_back(std::move(d));
  }
  while (modules.size() > 1 && modules.back().empty()) {
    modules.pop_back();
    diffs.pop_back();
  }
  auto aug = resA.augmentation();
  aug.push_back(fk);
  return Resolution<F>(FreeComplex<F>(std::move(modules), std::move(diffs)), std::move(aug), resA.degree());
}

// Builds the resolution of I by horseshoe steps k = 2..m, starting from the
// principal resolution of <f_1>; step k uses the Koszul complex on the
// certificate's forms for L_k, twisted by (-d).
template <ExactField F>
Resolution<F> build_resolution(const IdealPresentation<F>& ideal, const ColonCertificate<F>& cert,
                               HorseshoeOptions opts = {}) {
  if (cert.forms.size() != ideal.size()) throw ContractViolation("certificate does not match the ideal");
  const std::size_t n = ideal.nvars();
  auto res = principal_resolution(ideal.generator(0));
  for (std::size_t k = 1; k < ideal.size(); ++k) {
    auto resC = koszul_resolution<F>(cert.forms[k], ideal.degree(), n);
    res = horseshoe_step(res, resC, ideal.generator(k), n, k + 1, opts);
  }
  return res;
}

// Resolution of an ideal of independent linear forms, by induction on r: the
// twisted resolution of I_{r-1}, extended by S(-1), resolves I_r/I_{r-1}, and
// one horseshoe step joins it with the resolution of I_{r-1}.
template <ExactField F>
Resolution<F> linear_ideal_resolution(const IdealPresentation<F>& ideal) {
  if (ideal.kind() != IdealKind::linear_forms) throw ContractViolation("linear_ideal_resolution needs linear forms");
  const std::size_t n = ideal.nvars();
  auto res = principal_resolution(ideal.generator(0));
  for (std::size_t r = 1; r < ideal.size(); ++r) {
    auto quotient = quotient_resolution(res, 1);
    res = horseshoe_step(res, quotient, ideal.generator(r), n, r + 1, HorseshoeOptions{false});
  }
  return res;
}

}  // namespace lqres
