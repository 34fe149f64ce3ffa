#include "sixv/qism/weights.hpp"

namespace sixv {

VertexWeights<Real> weights_from_angles(const Real& lambda, const Real& eta) {
  return VertexWeights<Real>(sin(lambda + eta), sin(lambda - eta), sin(Real(2) * eta));
}

SpectralParams::SpectralParams(std::vector<Real> lambda_, std::vector<Real> nu_, Real eta_)
    : lambda(std::move(lambda_)), nu(std::move(nu_)), eta(std::move(eta_)) {
  if (lambda.size() != nu.size()) throw DomainError("lambda and nu lists must have equal length");
  if (lambda.empty()) throw DomainError("empty spectral parameter lists");
}

SpectralParams SpectralParams::homogeneous(std::size_t n, const Real& lambda, const Real& eta) {
  return SpectralParams(std::vector<Real>(n, lambda), std::vector<Real>(n, Real(0)), eta);
}

void SpectralParams::require_distinct() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (lambda[i] == lambda[j]) throw DomainError("spectral parameters lambda must be pairwise distinct");
      if (nu[i] == nu[j]) throw DomainError("spectral parameters nu must be pairwise distinct");
    }
  }
}

Real SpectralParams::a(std::size_t alpha, std::size_t k) const {
  return sin(lambda.at(alpha - 1) - nu.at(k - 1) + eta);
}

Real SpectralParams::b(std::size_t alpha, std::size_t k) const {
  return sin(lambda.at(alpha - 1) - nu.at(k - 1) - eta);
}

Real SpectralParams::c() const { return sin(Real(2) * eta); }

}  // namespace sixv
