#pragma once

// Izergin-Korepin determinant, inhomogeneous and homogeneous.

#include "sixv/algebra/jet.hpp"
#include "sixv/algebra/scalar.hpp"
#include "sixv/qism/oracle.hpp"
#include "sixv/qism/weights.hpp"

#include <string>

namespace sixv {

/// phi(lambda, nu) = c / (a(lambda, nu) b(lambda, nu)).
struct PhiKernel {
  Real eta;

  Real operator()(const Real& lambda, const Real& nu) const;

  /// Jet of phi(x, 0) about x = lambda to the given order.
  Jet<Real> homogeneous_jet(const Real& lambda, std::size_t order) const;
};

/// Inhomogeneous determinant formula. Throws DomainError on coincident
/// spectral parameters and SingularError on a vanishing weight.
Real ik_det_inhom(const SpectralParams& params);

/// Homogeneous limit at spectral parameter lambda (all nu = 0), with the
/// derivatives of phi taken from its exact jet.
Real ik_det_hom(std::size_t n, const Real& lambda, const Real& eta);

/// Homogeneous determinant for rational weights, evaluated exactly in
/// Q(sqrt(d)) with d = (1 + Delta)/(1 - Delta). Throws DomainError when
/// Delta = +-1 or the parametrization degenerates.
Rational ik_det_hom_exact(std::size_t n, const VertexWeights<Rational>& w);

/// Same route in float arithmetic; requires |Delta| < 1.
Real ik_det_hom_weights(std::size_t n, const VertexWeights<Real>& w);

template <class F>
struct PartitionValue {
  F value;
  std::string route;  // "ik-determinant" or "qism-oracle"
};

/// Z_N at homogeneous weights from the determinant route, falling back to the
/// QISM oracle where the trigonometric parametrization degenerates.
PartitionValue<Rational> homogeneous_partition(std::size_t n, const VertexWeights<Rational>& w,
                                               const OracleBounds& bounds = {});
PartitionValue<Real> homogeneous_partition(std::size_t n, const VertexWeights<Real>& w,
                                           const OracleBounds& bounds = {});

}  // namespace sixv
