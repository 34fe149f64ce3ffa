#pragma once

#include "sixv/algebra/multipoly.hpp"
#include "sixv/algebra/rational_fn.hpp"
#include "sixv/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace sixv {

inline constexpr std::size_t kMaxAntisymmetrizeSize = 8;

struct SignedPermutation {
  std::vector<std::size_t> image;  // j -> image[j]
  int sign;
};

/// All permutations of 0..s-1 in lexicographic order, with signs.
const std::vector<SignedPermutation>& signed_permutations(std::size_t s);

int permutation_sign(std::span<const std::size_t> p);

/// (1/s!) sum_P sign(P) f(x_{P(1)}, ..., x_{P(s)}) evaluated pointwise.
template <class F>
F antisymmetrize_at(const std::function<F(std::span<const F>)>& f, std::span<const F> point) {
  const std::size_t s = point.size();
  if (s > kMaxAntisymmetrizeSize) throw BudgetError("antisymmetrization limited to 8 variables");
  F sum(0);
  std::vector<F> args(s, F(0));
  for (const auto& perm : signed_permutations(s)) {
    for (std::size_t i = 0; i < s; ++i) args[i] = point[perm.image[i]];
    F v = f(args);
    if (perm.sign > 0) sum += v;
    else sum -= v;
  }
  return sum / F(factorial(static_cast<unsigned>(s)));
}

namespace detail {

inline void check_vars(const PolyRing& ring, std::span<const std::size_t> vars) {
  if (vars.size() > kMaxAntisymmetrizeSize) throw BudgetError("antisymmetrization limited to 8 variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] >= ring.size()) throw DomainError("antisymmetrization variable not in the ring");
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) throw DomainError("antisymmetrization variables must be distinct");
    }
  }
}

template <class Fn>
Fn antisymmetrize_generic(const Fn& f, const PolyRing& ring, std::span<const std::size_t> vars, Fn zero) {
  check_vars(ring, vars);
  const std::size_t s = vars.size();
  std::vector<std::size_t> target(ring.size());
  Fn sum = std::move(zero);
  for (const auto& perm : signed_permutations(s)) {
    std::iota(target.begin(), target.end(), std::size_t{0});
    for (std::size_t i = 0; i < s; ++i) target[vars[i]] = vars[perm.image[i]];
    Fn term = f.permuted(target);
    sum = perm.sign > 0 ? Fn(sum + term) : Fn(sum - term);
  }
  return sum;
}

}  // namespace detail

/// Signed average of f over permutations of the listed variables.
template <class F>
RationalFn<F> antisymmetrize(const RationalFn<F>& f, std::span<const std::size_t> vars) {
  RationalFn<F> sum = detail::antisymmetrize_generic(f, *f.ring(), vars, RationalFn<F>(MultiPoly<F>(f.ring())));
  return sum / F(factorial(static_cast<unsigned>(vars.size())));
}

template <class F>
MultiPoly<F> antisymmetrize(const MultiPoly<F>& f, std::span<const std::size_t> vars) {
  MultiPoly<F> sum = detail::antisymmetrize_generic(f, *f.ring(), vars, MultiPoly<F>(f.ring()));
  return sum / F(factorial(static_cast<unsigned>(vars.size())));
}

template <class F>
RationalFn<F> antisymmetrize(const RationalFn<F>& f, const std::vector<std::string>& names) {
  std::vector<std::size_t> vars;
  for (const auto& n : names) vars.push_back(f.ring()->require(n));
  return antisymmetrize(f, std::span<const std::size_t>(vars));
}

/// prod_{j<k} (x_{vars[k]} - x_{vars[j]}).
template <class F>
MultiPoly<F> vandermonde(const RingPtr& ring, std::span<const std::size_t> vars) {
  MultiPoly<F> v = MultiPoly<F>::constant(ring, F(1));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    for (std::size_t k = j + 1; k < vars.size(); ++k) {
      v *= MultiPoly<F>::variable(ring, vars[k]) - MultiPoly<F>::variable(ring, vars[j]);
    }
  }
  return v;
}

/// Exact quotient p / prod_{j<k}(x_k - x_j). Throws NotDivisibleError when p
/// is not antisymmetric in the listed variables.
template <class F>
MultiPoly<F> vandermonde_quotient(const MultiPoly<F>& p, std::span<const std::size_t> vars) {
  detail::check_vars(*p.ring(), vars);
  MultiPoly<F> q = p;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    for (std::size_t k = j + 1; k < vars.size(); ++k) {
      q = divide_exact(q, MultiPoly<F>::variable(p.ring(), vars[k]) - MultiPoly<F>::variable(p.ring(), vars[j]));
    }
  }
  return q;
}

/// prod_{j<k} (x_k - x_j) for numeric values.
template <class F>
F vandermonde_value(std::span<const F> x) {
  F v(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k < x.size(); ++k) v *= x[k] - x[j];
  }
  return v;
}

}  // namespace sixv
