#include "sixv/algebra/jet.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace sixv {

Jet<Real> trig_jet(TrigKind kind, const Real& offset, const Real& center, std::size_t order) {
  Real x = center + offset;
  Real s = sin(x);
  Real c = cos(x);
  // d^n sin = sin, cos, -sin, -cos, ...
  const Real cycle_sin[4] = {s, c, -s, -c};
  const Real cycle_cos[4] = {c, -s, -c, s};
  const Real* cycle = kind == TrigKind::sin ? cycle_sin : cycle_cos;
  std::vector<Real> coeffs;
  coeffs.reserve(order + 1);
  Real inv_fact(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Real(static_cast<long>(n));
    coeffs.push_back(cycle[n % 4] * inv_fact);
  }
  return Jet<Real>(std::move(coeffs));
}

namespace {

Jet<Rational> maclaurin(std::size_t order, bool odd) {
  std::vector<Rational> c(order + 1, Rational(0));
  Rational term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) term /= Rational(static_cast<long>(n));
    bool is_odd = n % 2 == 1;
    if (is_odd != odd) continue;
    long k = static_cast<long>(n / 2);
    c[n] = (k % 2 == 0) ? term : Rational(-term);
  }
  return Jet<Rational>(std::move(c));
}

}  // namespace

Jet<Rational> sin_series(std::size_t order) { return maclaurin(order, true); }
Jet<Rational> cos_series(std::size_t order) { return maclaurin(order, false); }

}  // namespace sixv
