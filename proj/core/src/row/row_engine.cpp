#include "sixv/row/row_engine.hpp"

namespace sixv {

Real ztop_bethe(std::size_t n, const std::vector<std::size_t>& positions, const Real& lambda,
                const std::vector<Real>& nus, const Real& eta) {
  const RowConfig cfg(n, positions);
  const std::size_t s = cfg.row();
  if (nus.size() != s) throw DomainError("ztop_bethe needs one nu per up arrow");
  if (s == 0) return Real(1);
  const Real c = sin(Real(2) * eta);
  const Real delta = cos(Real(2) * eta);
  std::vector<Real> t;
  Real pref = pow(c, static_cast<long>(s));
  for (const Real& nu : nus) {
    Real a = sin(lambda - nu + eta);
    if (a == 0) throw SingularError("vanishing weight a(lambda, nu)");
    t.push_back(sin(lambda - nu - eta) / a);
    pref *= pow(a, static_cast<long>(n - 1));
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = j + 1; k < s; ++k) {
      if (t[k] == t[j]) throw DomainError("coincident nu values; use the residue form");
      pref /= t[k] - t[j];
    }
  }
  Real sum(0);
  for (const auto& perm : signed_permutations(s)) {
    Real term(1);
    for (std::size_t j = 0; j < s; ++j) term *= pow(t[perm.image[j]], static_cast<long>(cfg.position(j + 1) - 1));
    for (std::size_t j = 0; j < s; ++j) {
      const Real& tj = t[perm.image[j]];
      for (std::size_t k = j + 1; k < s; ++k) term *= tj * t[perm.image[k]] - Real(2) * delta * tj + Real(1);
    }
    if (perm.sign > 0) sum += term;
    else sum -= term;
  }
  return pref * sum;
}

Real zbot_sum_inhom(const RowConfig& cfg, const SpectralParams& params) {
  params.require_distinct();
  const std::size_t n = params.size();
  if (cfg.size() != n) throw DomainError("row configuration has the wrong lattice size");
  const std::size_t s = cfg.row();
  if (s == 0) return ik_det_inhom(params);

  std::uint64_t terms = 1;
  for (std::size_t j = 1; j <= s; ++j) {
    terms *= cfg.position(j) - (j - 1);
    if (terms > kMaxInhomogeneousTerms) throw BudgetError("inhomogeneous sum exceeds 10^6 terms");
  }

  const Real& eta = params.eta;
  const Real two_eta = Real(2) * eta;
  const Real sin_two_eta = sin(two_eta);
  auto f = [&](std::size_t l1, std::size_t l) {
    return sin(params.lambda[l] - params.lambda[l1] + two_eta) / sin(params.lambda[l] - params.lambda[l1]);
  };
  auto g_over_f = [&](std::size_t l1, std::size_t l) {
    return sin_two_eta / sin(params.lambda[l] - params.lambda[l1] + two_eta);
  };
  const std::vector<Real> rest_nu(params.nu.begin() + static_cast<long>(s), params.nu.end());

  Real total(0);
  std::vector<bool> chosen(n, false);
  auto visit = [&](auto&& self, std::size_t j, const Real& weight) -> void {
    if (j == s) {
      std::vector<Real> rest_lambda;
      for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i]) rest_lambda.push_back(params.lambda[i]);
      }
      Real inner = rest_lambda.empty() ? Real(1) : ik_det_inhom(SpectralParams(rest_lambda, rest_nu, eta));
      total += weight * inner;
      return;
    }
    const std::size_t r = cfg.position(j + 1) - 1;
    for (std::size_t alpha = 0; alpha <= r; ++alpha) {
      if (chosen[alpha]) continue;
      Real w = weight;
      for (std::size_t k = s; k < n; ++k) w *= sin(params.lambda[alpha] - params.nu[k] + eta);
      w *= g_over_f(alpha, r);
      for (std::size_t beta = 0; beta <= r; ++beta) {
        if (beta == alpha || chosen[beta]) continue;
        w *= f(alpha, beta);
      }
      chosen[alpha] = true;
      self(self, j + 1, w);
      chosen[alpha] = false;
    }
  };
  visit(visit, 0, Real(1));
  return total;
}

}  // namespace sixv
