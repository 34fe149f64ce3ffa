#pragma once

#include "sixv/algebra/scalar.hpp"
#include "sixv/error.hpp"

#include <type_traits>
#include <vector>

namespace sixv {

/// Homogeneous weight triple with t = b/a and anisotropy Delta.
template <class F>
struct VertexWeights {
  F a;
  F b;
  F c;

  VertexWeights(F a_, F b_, F c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (ScalarTraits<F>::is_zero(a) || ScalarTraits<F>::is_zero(b)) {
      throw DomainError("weights a and b must be nonzero");
    }
  }

  F t() const { return b / a; }
  F delta() const { return (a * a + b * b - c * c) / (F(2) * a * b); }
  /// t^2 - 2 Delta t, the coefficient appearing in u(z).
  F t2_minus_2delta_t() const {
    F tt = t();
    return tt * tt - F(2) * delta() * tt;
  }
  bool positive() const { return a > 0 && b > 0 && c > 0; }
};

/// a = sin(lambda + eta), b = sin(lambda - eta), c = sin(2 eta).
VertexWeights<Real> weights_from_angles(const Real& lambda, const Real& eta);

/// Spectral parameters lambda_1..lambda_N (vertical lines), nu_1..nu_N
/// (horizontal lines) and the crossing parameter eta.
struct SpectralParams {
  std::vector<Real> lambda;
  std::vector<Real> nu;
  Real eta;

  SpectralParams(std::vector<Real> lambda_, std::vector<Real> nu_, Real eta_);

  /// All lambda equal to `lambda`, all nu zero.
  static SpectralParams homogeneous(std::size_t n, const Real& lambda, const Real& eta);

  std::size_t size() const { return lambda.size(); }

  /// Throws DomainError unless the lambdas and the nus are pairwise distinct.
  void require_distinct() const;

  Real a(std::size_t alpha, std::size_t k) const;  // 1-based
  Real b(std::size_t alpha, std::size_t k) const;
  Real c() const;
};

/// Per-vertex weights of an N x N lattice: vertex (alpha, k) sits on
/// vertical line alpha (counted from the right) and horizontal line k
/// (counted from the top).
template <class F>
class LatticeWeights {
 public:
  static LatticeWeights homogeneous(const VertexWeights<F>& w, std::size_t n) {
    LatticeWeights lw(n, w.c);
    lw.a_.assign(n * n, w.a);
    lw.b_.assign(n * n, w.b);
    return lw;
  }

  static LatticeWeights trigonometric(const SpectralParams& p)
    requires std::is_same_v<F, Real>
  {
    const std::size_t n = p.size();
    LatticeWeights lw(n, p.c());
    lw.a_.reserve(n * n);
    lw.b_.reserve(n * n);
    for (std::size_t alpha = 1; alpha <= n; ++alpha) {
      for (std::size_t k = 1; k <= n; ++k) {
        lw.a_.push_back(p.a(alpha, k));
        lw.b_.push_back(p.b(alpha, k));
      }
    }
    return lw;
  }

  std::size_t size() const { return n_; }
  const F& a(std::size_t alpha, std::size_t k) const { return a_[index(alpha, k)]; }
  const F& b(std::size_t alpha, std::size_t k) const { return b_[index(alpha, k)]; }
  const F& c() const { return c_; }

  bool positive() const {
    if (!(c_ > 0)) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!(a_[i] > 0) || !(b_[i] > 0)) return false;
    }
    return true;
  }

 private:
  LatticeWeights(std::size_t n, F c) : n_(n), c_(std::move(c)) {}

  std::size_t index(std::size_t alpha, std::size_t k) const {
    if (alpha < 1 || alpha > n_ || k < 1 || k > n_) throw DomainError("vertex index out of range");
    return (alpha - 1) * n_ + (k - 1);
  }

  std::size_t n_;
  F c_;
  std::vector<F> a_;
  std::vector<F> b_;
};

}  // namespace sixv
