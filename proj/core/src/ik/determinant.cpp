#include "sixv/ik/determinant.hpp"

#include "sixv/algebra/matrix.hpp"
#include "sixv/algebra/quadratic.hpp"

namespace sixv {

Real PhiKernel::operator()(const Real& lambda, const Real& nu) const {
  Real a = sin(lambda - nu + eta);
  Real b = sin(lambda - nu - eta);
  if (a == 0 || b == 0) throw SingularError("phi kernel at a vanishing weight");
  return sin(Real(2) * eta) / (a * b);
}

Jet<Real> PhiKernel::homogeneous_jet(const Real& lambda, std::size_t order) const {
  Jet<Real> sa = trig_jet(TrigKind::sin, eta, lambda, order);
  Jet<Real> sb = trig_jet(TrigKind::sin, Real(-eta), lambda, order);
  Jet<Real> prod = sa * sb;
  if (prod[0] == 0) throw SingularError("phi kernel at a vanishing weight");
  return prod.reciprocal() * Real(sin(Real(2) * eta));
}

Real ik_det_inhom(const SpectralParams& params) {
  params.require_distinct();
  const std::size_t n = params.size();
  const PhiKernel phi{params.eta};
  Real num(1);
  Matrix<Real> m(n, n, Real(0));
  for (std::size_t alpha = 1; alpha <= n; ++alpha) {
    for (std::size_t k = 1; k <= n; ++k) {
      Real a = params.a(alpha, k);
      Real b = params.b(alpha, k);
      if (a == 0 || b == 0) throw SingularError("vanishing weight in the determinant formula");
      num *= a * b;
      m(alpha - 1, k - 1) = phi(params.lambda[alpha - 1], params.nu[k - 1]);
    }
  }
  Real den(1);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    for (std::size_t beta = alpha + 1; beta < n; ++beta) den *= sin(params.lambda[beta] - params.lambda[alpha]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) den *= sin(params.nu[j] - params.nu[k]);
  }
  if (den == 0) throw DomainError("coincident spectral parameters (modulo pi)");
  return num / den * det(m);
}

namespace {

// det[(i+k)! phi_{i+k}] / prod_{j<N} (j!)^2 for a jet phi of order 2N-2.
template <class T>
T hankel_part(std::size_t n, const Jet<T>& phi, const T& one, const std::function<T(const Rational&)>& embed) {
  Matrix<T> m(n, n, one - one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) m(i, k) = phi[i + k] * embed(Rational(factorial(unsigned(i + k))));
  }
  Integer fact_sq(1);
  for (std::size_t j = 1; j < n; ++j) {
    Integer f = factorial(unsigned(j));
    fact_sq *= f * f;
  }
  return det(m, one) * embed(Rational(Integer(1), fact_sq));
}

// With X = cot(lambda + eta), Y = cot(lambda - eta) and
// kappa = c (1 + h^2) / (2h), h = cot(eta):
//   phi(lambda + e) = kappa^{-1} (Y - X) / ((cos e + X sin e)(cos e + Y sin e)).
template <class T>
T homogeneous_route(std::size_t n, const T& a, const T& b, const T& c, const T& h, const T& one,
                    const std::function<T(const Rational&)>& embed) {
  const T t = b / a;
  const T p = h * (one - t) / (one + t);
  const T x = (p * h - one) / (p + h);
  const T y = (p * h + one) / (h - p);
  const T kappa = c * (one + h * h) / (embed(Rational(2)) * h);
  const std::size_t order = 2 * n - 2;
  Jet<T> s = lift_jet<T>(sin_series(order), embed);
  Jet<T> co = lift_jet<T>(cos_series(order), embed);
  Jet<T> den = (co + s * x) * (co + s * y);
  Jet<T> phi = den.reciprocal(one / den[0]) * T(y - x);
  T value = hankel_part(n, phi, one, embed);
  T ratio = a * b / kappa;
  T scale = one;
  for (std::size_t i = 0; i < n * n; ++i) scale *= ratio;
  return value * scale;
}

}  // namespace

Real ik_det_hom(std::size_t n, const Real& lambda, const Real& eta) {
  if (n == 0) throw DomainError("lattice size must be positive");
  const Real a = sin(lambda + eta);
  const Real b = sin(lambda - eta);
  if (a == 0 || b == 0) throw SingularError("singular weights in the homogeneous limit");
  Jet<Real> phi = PhiKernel{eta}.homogeneous_jet(lambda, 2 * n - 2);
  Real value = hankel_part<Real>(n, phi, Real(1), [](const Rational& q) { return Real(q); });
  return value * pow(a * b, static_cast<long>(n * n));
}

Rational ik_det_hom_exact(std::size_t n, const VertexWeights<Rational>& w) {
  if (n == 0) throw DomainError("lattice size must be positive");
  const Rational delta = w.delta();
  if (delta == 1 || delta == -1) throw DomainError("homogeneous determinant route undefined at Delta = +-1");
  const Rational d = (Rational(1) + delta) / (Rational(1) - delta);
  auto field = QuadraticField::make(d);
  const std::function<QuadraticNumber(const Rational&)> embed = [&field](const Rational& q) {
    return field->element(q);
  };
  const QuadraticNumber one = field->element(Rational(1));
  const QuadraticNumber h = field->sqrt_d();
  QuadraticNumber z;
  try {
    z = homogeneous_route<QuadraticNumber>(n, embed(w.a), embed(w.b), embed(w.c), h, one, embed);
  } catch (const SingularError&) {
    throw DomainError("homogeneous determinant route degenerates at these weights");
  }
  if (!z.is_rational()) throw Error("homogeneous determinant produced an irrational value: " + z.str());
  return z.rational_part();
}

Real ik_det_hom_weights(std::size_t n, const VertexWeights<Real>& w) {
  if (n == 0) throw DomainError("lattice size must be positive");
  const Real delta = w.delta();
  if (!(abs(delta) < 1)) throw DomainError("float homogeneous route requires |Delta| < 1");
  const Real h = sqrt((Real(1) + delta) / (Real(1) - delta));
  const std::function<Real(const Rational&)> embed = [](const Rational& q) { return Real(q); };
  return homogeneous_route<Real>(n, w.a, w.b, w.c, h, Real(1), embed);
}

PartitionValue<Rational> homogeneous_partition(std::size_t n, const VertexWeights<Rational>& w,
                                               const OracleBounds& bounds) {
  try {
    return {ik_det_hom_exact(n, w), "ik-determinant"};
  } catch (const DomainError&) {
    return {partition_qism(LatticeWeights<Rational>::homogeneous(w, n), bounds), "qism-oracle"};
  }
}

PartitionValue<Real> homogeneous_partition(std::size_t n, const VertexWeights<Real>& w, const OracleBounds& bounds) {
  try {
    return {ik_det_hom_weights(n, w), "ik-determinant"};
  } catch (const Error&) {
    return {partition_qism(LatticeWeights<Real>::homogeneous(w, n), bounds), "qism-oracle"};
  }
}

}  // namespace sixv
