#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lqres/errors.hpp"
#include "lqres/field.hpp"

namespace lqres {

// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Reduced row echelon form. Columns are scanned left to right; the pivot of a
// column is the first remaining row with a nonzero entry there. Only the
// first `pivot_columns` columns may hold pivots, so trailing columns can carry
// right-hand sides through the same elimination.
template <ExactField F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[r] is the pivot column of row r
  std::size_t rank() const { return pivot_cols.size(); }
};

template <ExactField F>
RowEchelon<F> row_reduce(Matrix<F> m, std::optional<std::size_t> pivot_columns = std::nullopt) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t limit = pivot_columns.value_or(cols);
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < limit && next_row < rows; ++c) {
    std::size_t p = next_row;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != next_row)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(next_row, j));
    const F inv = F::from_int(1) / m.at(next_row, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m.at(next_row, j).is_zero()) continue;
      m.at(next_row, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || m.at(r, c).is_zero()) continue;
      const F factor = m.at(r, c);
      for (std::size_t j : support) m.at(r, j) -= factor * m.at(next_row, j);
    }
    pivots.push_back(c);
    ++next_row;
  }
  return {std::move(m), std::move(pivots)};
}

// Forward elimination only; rows above the pivot are left alone.
template <ExactField F>
std::size_t rank(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t next_row = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::size_t p = next_row;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != next_row)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(next_row, j));
    const F inv = F::from_int(1) / m.at(next_row, c);
    support.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!m.at(next_row, j).is_zero()) support.push_back(j);
    for (std::size_t r = next_row + 1; r < rows; ++r) {
      if (m.at(r, c).is_zero()) continue;
      const F factor = m.at(r, c) * inv;
      for (std::size_t j : support) m.at(r, j) -= factor * m.at(next_row, j);
    }
    ++next_row;
  }
  return next_row;
}

// Rank of a rational matrix reduced modulo 2^31 - 1, a lower bound for the
// rational rank. nullopt when some denominator vanishes mod p.
inline std::optional<std::size_t> modular_rank(const Matrix<Rational>& m) {
  using Fp = PrimeField<2147483647u>;
  Matrix<Fp> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m.at(i, j).value();
      if (sgn(q) == 0) continue;
      const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), Fp::modulus);
      if (den == 0) return std::nullopt;
      r.at(i, j) = Fp::from_int(static_cast<long>(mpz_fdiv_ui(q.get_num_mpz_t(), Fp::modulus))) /
                   Fp::from_int(static_cast<long>(den));
    }
  return rank(std::move(r));
}

// One basis vector per free column: 1 at the free column, minus the reduced
// entries at the pivot columns.
template <ExactField F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F::from_int(1);
    for (std::size_t r = 0; r < ech.rank(); ++r) v[ech.pivot_cols[r]] = -ech.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m * x = b_j for every column b_j of rhs with one elimination. Free
// variables are set to zero; an inconsistent system yields nullopt.
template <ExactField F>
std::vector<std::optional<std::vector<F>>> solve_many(const Matrix<F>& m, const Matrix<F>& rhs) {
  if (rhs.rows() != m.rows()) throw ContractViolation("right-hand side has wrong length");
  const std::size_t n = m.cols(), k = rhs.cols();
  Matrix<F> aug(m.rows(), n + k);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    for (std::size_t c = 0; c < k; ++c) aug.at(r, n + c) = rhs.at(r, c);
  }
  auto ech = row_reduce(std::move(aug), n);
  std::vector<std::optional<std::vector<F>>> out;
  out.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    bool consistent = true;
    for (std::size_t r = ech.rank(); r < m.rows(); ++r)
      if (!ech.reduced.at(r, n + c).is_zero()) {
        consistent = false;
        break;
      }
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<F> x(n);
    for (std::size_t r = 0; r < ech.rank(); ++r) x[ech.pivot_cols[r]] = ech.reduced.at(r, n + c);
    out.emplace_back(std::move(x));
  }
  return out;
}

template <ExactField F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  Matrix<F> rhs(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) rhs.at(r, 0) = b[r];
  return std::move(solve_many(m, rhs).front());
}

// Rows of the given vectors as a matrix (each vector one row).
template <ExactField F>
Matrix<F> matrix_from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
  Matrix<F> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ContractViolation("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace lqres
