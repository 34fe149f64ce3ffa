#pragma once

// Multiple residues of rational integrands whose only poles near the
// expansion point are powers of (x_i - p_i).
//
// After the shift x_i = p_i + u_i, every denominator factor either has a
// nonzero constant term (it is inverted as a truncated power series) or is a
// single monomial (it contributes pole orders). The residue is then one
// coefficient of a truncated product, so the variable order does not matter
// and the truncation bounds are known up front.

#include "sixv/algebra/multipoly.hpp"
#include "sixv/algebra/rational_fn.hpp"
#include "sixv/error.hpp"

#include <span>
#include <vector>

namespace sixv {

template <class F>
using DenominatorFactor = typename RationalFn<F>::Factor;

/// Truncated power-series inverse of p, which must have a nonzero constant term.
template <class F>
MultiPoly<F> inverse_series(const MultiPoly<F>& p, Monomial bound) {
  F c0 = p.constant_term();
  if (ScalarTraits<F>::is_zero(c0)) throw ResidueError("series inverse of a factor vanishing at the point");
  MultiPoly<F> g = p / c0 - c0 / c0;
  MultiPoly<F> minus_g = -g;
  MultiPoly<F> result = MultiPoly<F>::constant(p.ring(), F(1));
  MultiPoly<F> term = result;
  const unsigned max_steps = mono::total_degree(bound);
  for (unsigned k = 0; k < max_steps; ++k) {
    term = term.mul_truncated(minus_g, bound);
    if (term.is_zero()) break;
    result += term;
  }
  return result / c0;
}

/// Residue of prod(numerator) / prod(denominator^mult) at x_i = points[i],
/// taken in all ring variables.
template <class F>
F residue_of_product(const std::vector<MultiPoly<F>>& numerator,
                     const std::vector<DenominatorFactor<F>>& denominator,
                     std::span<const F> points) {
  if (numerator.empty()) throw DomainError("residue of an empty product");
  const RingPtr& ring = numerator.front().ring();
  const std::size_t n = ring->size();
  if (points.size() != n) throw DomainError("residue needs one point per variable");

  std::vector<unsigned> pole(n, 0);
  F scale(1);
  std::vector<std::pair<MultiPoly<F>, unsigned>> units;
  for (const auto& f : denominator) {
    MultiPoly<F> d = f.poly.shifted(points);
    if (d.is_zero()) throw ResidueError("denominator vanishes identically");
    if (!ScalarTraits<F>::is_zero(d.constant_term())) {
      units.emplace_back(std::move(d), f.multiplicity);
      continue;
    }
    if (d.size() != 1) {
      throw ResidueError("denominator factor " + f.poly.str() +
                         " vanishes at the point without being a pure pole");
    }
    const auto& [m, c] = d.leading_term();
    for (std::size_t i = 0; i < n; ++i) pole[i] += mono::exponent(m, i) * f.multiplicity;
    scale /= power(c, long(f.multiplicity));
  }

  Monomial bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pole[i] == 0) return F(0);
    if (pole[i] - 1 > kMaxExponent) throw BudgetError("pole order exceeds 256");
    bound |= mono::unit(i, pole[i] - 1);
  }

  MultiPoly<F> acc = MultiPoly<F>::constant(ring, F(1));
  for (const auto& p : numerator) {
    acc = acc.mul_truncated(p.shifted(points, bound), bound);
    if (acc.is_zero()) return F(0);
  }
  for (const auto& [d, mult] : units) {
    MultiPoly<F> inv = inverse_series(d, bound);
    for (unsigned k = 0; k < mult; ++k) acc = acc.mul_truncated(inv, bound);
  }
  return acc.coefficient(bound) * scale;
}

/// Iterated residue of f in the variables `order`, about points[i] for
/// order[i]. The order must list every ring variable exactly once.
template <class F>
F iterated_residue(const RationalFn<F>& f, std::span<const std::size_t> order, std::span<const F> points) {
  const std::size_t n = f.ring()->size();
  if (order.size() != n || points.size() != n) {
    throw DomainError("residue order must cover every variable of the integrand");
  }
  std::vector<F> by_var(n, F(0));
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || seen[order[i]]) throw DomainError("residue order is not a permutation");
    seen[order[i]] = true;
    by_var[order[i]] = points[i];
  }
  return residue_of_product<F>({f.numerator()}, f.factors(), by_var);
}

/// Residue in all variables, in ring order.
template <class F>
F iterated_residue(const RationalFn<F>& f, std::span<const F> points) {
  std::vector<std::size_t> order(f.ring()->size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return iterated_residue(f, std::span<const std::size_t>(order), points);
}

}  // namespace sixv
