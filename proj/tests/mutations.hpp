#pragma once
// Single-point corruptions of a built resolution, each aimed at one checker.

#include <string>
#include <vector>

#include "lqres/lqres.hpp"

namespace mutation {

using namespace lqres;

enum class Kind { sign_flip, entry_deletion, shift_bump, rank_pad };

inline const std::vector<Kind>& catalogue() {
  static const std::vector<Kind> all{Kind::sign_flip, Kind::entry_deletion, Kind::shift_bump, Kind::rank_pad};
  return all;
}

inline std::string name(Kind k) {
  switch (k) {
    case Kind::sign_flip: return "sign flip";
    case Kind::entry_deletion: return "entry deletion";
    case Kind::shift_bump: return "shift bump";
    case Kind::rank_pad: return "rank pad";
  }
  return "?";
}

// Check that must report the mutation.
inline std::string intended_checker(Kind k) {
  switch (k) {
    case Kind::sign_flip: return "complex";
    case Kind::entry_deletion: return "exactness_degreewise";
    case Kind::shift_bump: return "linear_and_minimal";
    case Kind::rank_pad: return "euler";
  }
  return "?";
}

template <ExactField F>
GradedMap<F> copy_columns(const GradedMap<F>& f, const GradedFreeModule& source, const std::vector<long>& from) {
  GradedMap<F> g(source, f.target());
  for (std::size_t j = 0; j < from.size(); ++j) {
    if (from[j] < 0) continue;
    for (const auto& [r, p] : f.column(static_cast<std::size_t>(from[j]))) g.set_unchecked(r, j, p);
  }
  return g;
}

// Needs length >= 1.
template <ExactField F>
Resolution<F> apply(const Resolution<F>& res, Kind kind) {
  const std::size_t p = res.length();
  if (p == 0) throw ContractViolation("mutations need a resolution of positive length");
  auto modules = res.complex().modules();
  auto diffs = res.complex().differentials();
  switch (kind) {
    case Kind::sign_flip: {
      // negate the first entry of the first column of delta_1
      auto& d1 = diffs[0];
      const auto& [r, v] = *d1.column(0).begin();
      d1.set_unchecked(r, 0, -v);
      break;
    }
    case Kind::entry_deletion: {
      // drop the last basis element of F_p together with its column
      auto shifts = modules[p].shifts();
      shifts.pop_back();
      std::vector<long> from(shifts.size());
      for (std::size_t j = 0; j < from.size(); ++j) from[j] = static_cast<long>(j);
      modules[p] = GradedFreeModule(shifts);
      diffs[p - 1] = copy_columns(diffs[p - 1], modules[p], from);
      break;
    }
    case Kind::shift_bump: {
      auto shifts = modules[p].shifts();
      shifts.back() += 1;
      modules[p] = GradedFreeModule(shifts);
      diffs[p - 1] = diffs[p - 1].with_modules_unchecked(modules[p], modules[p - 1]);
      break;
    }
    case Kind::rank_pad: {
      // extra generator of the right degree mapping to zero
      auto shifts = modules[p].shifts();
      shifts.push_back(res.degree() + static_cast<int>(p));
      std::vector<long> from(shifts.size());
      for (std::size_t j = 0; j < from.size(); ++j) from[j] = j + 1 < from.size() ? static_cast<long>(j) : -1;
      modules[p] = GradedFreeModule(shifts);
      diffs[p - 1] = copy_columns(diffs[p - 1], modules[p], from);
      break;
    }
  }
  return Resolution<F>(FreeComplex<F>(std::move(modules), std::move(diffs)), res.augmentation(), res.degree());
}

}  // namespace mutation
