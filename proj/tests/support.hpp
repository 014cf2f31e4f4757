#pragma once
// Glue between library types and the oracles.

#include <random>
#include <string>
#include <vector>

#include "lqres/lqres.hpp"
#include "oracles.hpp"

namespace support {

using namespace lqres;
using Q = Rational;

template <ExactField F = Q>
IdealPresentation<F> ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  Ring ring(vars);
  std::vector<Polynomial<F>> ps;
  for (const auto& g : gens) ps.push_back(ring.parse<F>(g));
  return IdealPresentation<F>(ring, std::move(ps));
}

template <ExactField F = Q>
Polynomial<F> poly(const Ring& ring, const std::string& s) {
  return ring.parse<F>(s);
}

inline oracle::Exps exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

template <ExactField F>
std::vector<oracle::Exps> exps(const IdealPresentation<F>& I) {
  std::vector<oracle::Exps> out;
  for (const auto& m : I.monomials()) out.push_back(exps(m));
  return out;
}

inline std::map<std::pair<int, int>, long long> as_map(const BettiTable& t) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : t.entries())
    if (v != 0) out[k] = static_cast<long long>(v);
  return out;
}

template <ExactField F>
std::map<std::pair<int, int>, long long> koszul_homology_betti(const IdealPresentation<F>& I) {
  return oracle::betti_monomial(exps(I), I.nvars());
}

// Value of a rational polynomial at an integer point, reduced mod the oracle
// prime. Only reads terms; no library arithmetic.
inline long long eval_mod(const Polynomial<Q>& p, const std::vector<long long>& point) {
  long long acc = 0;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coeff.value();
    mpz_class modulus(static_cast<long>(oracle::kPrime));
    mpz_class num = c.get_num() % modulus, den = c.get_den() % modulus;
    long long v = oracle::pmod(num.get_si()) * oracle::power(den.get_si(), oracle::kPrime - 2) % oracle::kPrime;
    for (std::size_t a = 0; a < point.size(); ++a) v = v * oracle::power(point[a], t.monomial[a]) % oracle::kPrime;
    acc = (acc + v) % oracle::kPrime;
  }
  return acc;
}

inline std::vector<std::vector<long long>> eval_map(const GradedMap<Q>& f, const std::vector<long long>& point) {
  std::vector<std::vector<long long>> m(f.target().rank(), std::vector<long long>(f.source().rank(), 0));
  for (std::size_t j = 0; j < f.source().rank(); ++j)
    for (const auto& [i, p] : f.column(j)) m[i][j] = eval_mod(p, point);
  return m;
}

inline std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& a,
                                                   const std::vector<std::vector<long long>>& b, std::size_t cols) {
  std::vector<std::vector<long long>> c(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % oracle::kPrime;
  return c;
}

// delta_i o delta_{i+1} and aug o delta_1 vanish at a few random points.
inline bool complex_vanishes_at_points(const Resolution<Q>& res, std::size_t trials = 3) {
  std::mt19937_64 rng(99);
  const std::size_t n = res.augmentation().empty() ? 0 : res.augmentation().front().terms().front().monomial.nvars();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<long long> pt(n);
    for (auto& v : pt) v = static_cast<long long>(rng() % oracle::kPrime);
    std::vector<std::vector<long long>> aug(1, std::vector<long long>(res.module(0).rank()));
    for (std::size_t j = 0; j < aug[0].size(); ++j) aug[0][j] = eval_mod(res.augmentation()[j], pt);
    std::vector<std::vector<long long>> prev = aug;
    for (std::size_t i = 1; i <= res.length(); ++i) {
      auto d = eval_map(res.differential(i), pt);
      auto c = mat_mul(prev, d, res.module(i).rank());
      for (auto& row : c)
        for (auto v : row)
          if (v != 0) return false;
      prev = d;
    }
  }
  return true;
}

}  // namespace support
