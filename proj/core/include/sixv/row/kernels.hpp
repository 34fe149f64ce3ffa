#pragma once

// Polynomial building blocks shared by the residue representations.

#include "sixv/algebra/multipoly.hpp"

#include <vector>

namespace sixv::kernel {

template <class F>
MultiPoly<F> var(const RingPtr& ring, std::size_t i) {
  return MultiPoly<F>::variable(ring, i);
}

template <class F>
MultiPoly<F> one(const RingPtr& ring) {
  return MultiPoly<F>::constant(ring, F(1));
}

/// t^2 x_j x_k - 2 Delta t x_j + 1.
template <class F>
MultiPoly<F> pair_factor(const RingPtr& ring, std::size_t j, std::size_t k, const F& t, const F& delta) {
  MultiPoly<F> xj = var<F>(ring, j);
  return (xj * var<F>(ring, k)) * F(t * t) - xj * F(F(2) * delta * t) + F(1);
}

/// (t^2 - 2 Delta t) x_j + 1.
template <class F>
MultiPoly<F> linear_factor(const RingPtr& ring, std::size_t j, const F& t, const F& delta) {
  return var<F>(ring, j) * F(t * t - F(2) * delta * t) + F(1);
}

/// x_j - p.
template <class F>
MultiPoly<F> shifted_var(const RingPtr& ring, std::size_t j, const F& p) {
  return var<F>(ring, j) - p;
}

/// sum_i coeffs[i] x_j^i.
template <class F>
MultiPoly<F> univariate(const RingPtr& ring, std::size_t j, const std::vector<F>& coeffs) {
  std::vector<typename MultiPoly<F>::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.emplace_back(mono::unit(j, unsigned(i)), coeffs[i]);
  return MultiPoly<F>::from_terms(ring, std::move(terms));
}

}  // namespace sixv::kernel
