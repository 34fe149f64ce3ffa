#pragma once

#include "sixv/algebra/multipoly.hpp"
#include "sixv/error.hpp"

#include <utility>
#include <vector>

namespace sixv {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

namespace detail {

template <class T>
bool entry_is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) return x.is_zero();
  else return ScalarTraits<T>::is_zero(x);
}

template <class T>
bool pivot_better(const T& candidate, const T& current) {
  if constexpr (requires { ScalarTraits<T>::better_pivot(candidate, current); }) {
    return ScalarTraits<T>::better_pivot(candidate, current);
  } else {
    return entry_is_zero(current) && !entry_is_zero(candidate);
  }
}

}  // namespace detail

/// Determinant over a field by Gaussian elimination. `one` is returned for
/// the empty matrix.
template <class T>
T det(Matrix<T> m, const T& one) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  T result = one;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::pivot_better(m(r, col), m(pivot, col))) pivot = r;
    }
    if (detail::entry_is_zero(m(pivot, col))) return one - one;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      negate = !negate;
    }
    const T inv = one / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::entry_is_zero(m(r, col))) continue;
      T factor = m(r, col) * inv;
      for (std::size_t k = col; k < n; ++k) m(r, k) -= factor * m(col, k);
    }
    result *= m(col, col);
  }
  return negate ? T(-result) : result;
}

template <class F>
F det(const Matrix<F>& m) {
  return det(m, F(1));
}

namespace detail {

// Cofactor expansion along the first row of the columns in `cols`.
template <class F>
MultiPoly<F> laplace(const Matrix<MultiPoly<F>>& m, std::size_t row, std::vector<std::size_t>& cols,
                     const RingPtr& ring) {
  if (cols.empty()) return MultiPoly<F>::constant(ring, F(1));
  MultiPoly<F> sum(ring);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    if (m(row, c).is_zero()) continue;
    cols.erase(cols.begin() + long(i));
    MultiPoly<F> term = m(row, c) * laplace(m, row + 1, cols, ring);
    cols.insert(cols.begin() + long(i), c);
    sum = i % 2 ? MultiPoly<F>(sum - term) : MultiPoly<F>(sum + term);
  }
  return sum;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant for polynomial entries. Inexact
/// coefficients use cofactor expansion instead, which never divides.
template <class F>
MultiPoly<F> det(Matrix<MultiPoly<F>> m, const RingPtr& ring) {
  using P = MultiPoly<F>;
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return P::constant(ring, F(1));
  if constexpr (!ScalarTraits<F>::exact) {
    if (n > 8) throw BudgetError("cofactor expansion limited to 8 x 8");
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return detail::laplace(m, 0, cols, ring);
  }
  bool negate = false;
  P prev = P::constant(ring, F(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return P(ring);
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev);
      }
    }
    prev = m(k, k);
  }
  P result = m(n - 1, n - 1);
  return negate ? P(-result) : result;
}

}  // namespace sixv
