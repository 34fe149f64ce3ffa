#include "support.hpp"

#include <sixv/ik/determinant.hpp>
#include <sixv/qism/oracle.hpp>

#include <gtest/gtest.h>

using namespace sixv;
using sixv::test::Gen;

namespace {

Real pi() { return 4 * atan(Real(1)); }

SpectralParams random_params(Gen& g, std::size_t n, const Real& eta) {
  std::vector<Real> lambda, nu;
  for (std::size_t i = 0; i < n; ++i) {
    lambda.push_back(g.real(0.9, 1.4));
    nu.push_back(g.real(-0.2, 0.2));
  }
  return SpectralParams(lambda, nu, eta);
}

}  // namespace

TEST(Determinant, SingleSiteIsC) {
  SpectralParams p({Real("1.1")}, {Real("0.05")}, Real("0.3"));
  EXPECT_TRUE(approx_equal(ik_det_inhom(p), p.c()));
  EXPECT_TRUE(approx_equal(ik_det_hom(1, Real("1.1"), Real("0.3")), Real(sin(Real("0.6")))));
  EXPECT_EQ(ik_det_hom_exact(1, VertexWeights<Rational>(2, 1, 2)), Rational(2));
}

TEST(Determinant, InhomogeneousMatchesOracle) {
  Gen g(101);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      SpectralParams p = random_params(g, n, Real("0.3"));
      Real det = ik_det_inhom(p);
      Real z = partition_qism(LatticeWeights<Real>::trigonometric(p));
      EXPECT_LT(relative_difference(det, z), Real("1e-25")) << "N=" << n;
    }
  }
}

TEST(Determinant, SymmetricUnderSwaps) {
  Gen g(103);
  SpectralParams p = random_params(g, 4, Real("0.25"));
  Real base = ik_det_inhom(p);
  SpectralParams q = p;
  std::swap(q.lambda[0], q.lambda[2]);
  std::swap(q.nu[1], q.nu[3]);
  EXPECT_LT(relative_difference(base, ik_det_inhom(q)), Real("1e-40"));
}

TEST(Determinant, CoincidentParametersRejected) {
  SpectralParams p({Real(1), Real(1)}, {Real(0), Real("0.1")}, Real("0.3"));
  EXPECT_THROW(ik_det_inhom(p), DomainError);
}

TEST(Determinant, HomogeneousIsLimitOfInhomogeneous) {
  PrecisionScope scope(200);
  const Real lambda("1.05"), eta("0.3"), eps("1e-20");
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Real> l, nu;
    for (std::size_t i = 0; i < n; ++i) {
      l.push_back(lambda + eps * Real(long(i + 1)));
      nu.push_back(-eps * Real(long(2 * i + 1)));
    }
    Real inhom = ik_det_inhom(SpectralParams(l, nu, eta));
    Real limit = ik_det_hom(n, lambda, eta);
    EXPECT_LT(relative_difference(inhom, limit), Real("1e-15")) << "N=" << n;
  }
}

TEST(Determinant, HomogeneousMatchesOracle) {
  const Real eta("0.3");
  for (const char* l : {"0.7", "1.2"}) {
    const Real lambda(l);
    for (std::size_t n = 1; n <= 6; ++n) {
      Real z = partition_qism(LatticeWeights<Real>::trigonometric(SpectralParams::homogeneous(n, lambda, eta)));
      EXPECT_LT(relative_difference(ik_det_hom(n, lambda, eta), z), Real("1e-30")) << "N=" << n;
    }
  }
}

TEST(Determinant, IcePointFromAngles) {
  // lambda = pi/2, eta = pi/6 gives a = b = c = sqrt(3)/2.
  const Real lambda = pi() / 2, eta = pi() / 6;
  const std::vector<long> asm_counts{1, 2, 7, 42, 429, 7436};
  const Real a = sin(lambda + eta);
  for (std::size_t n = 1; n <= 6; ++n) {
    Real ratio = ik_det_hom(n, lambda, eta) / pow(a, long(n * n));
    EXPECT_LT(relative_difference(ratio, Real(asm_counts[n - 1])), Real("1e-30")) << "N=" << n;
  }
}

TEST(Determinant, ExactHomogeneousMatchesOracle) {
  for (const auto& w : test::weight_set()) {
    for (std::size_t n = 1; n <= 6; ++n) {
      EXPECT_EQ(ik_det_hom_exact(n, w), partition_qism(LatticeWeights<Rational>::homogeneous(w, n)))
          << "N=" << n << " Delta=" << to_string(w.delta());
    }
  }
}

TEST(Determinant, ExactRouteRandomWeights) {
  Gen g(107);
  for (int i = 0; i < 12; ++i) {
    VertexWeights<Rational> w(g.nonzero(), g.nonzero(), g.nonzero());
    const Rational d = w.delta();
    if (d == 1 || d == -1) continue;
    for (std::size_t n = 1; n <= 4; ++n) {
      EXPECT_EQ(ik_det_hom_exact(n, w), partition_qism(LatticeWeights<Rational>::homogeneous(w, n)));
    }
  }
}

TEST(Determinant, FreeFermionAndFallback) {
  VertexWeights<Rational> iso(1, 2, 1);  // Delta = 1
  EXPECT_THROW(ik_det_hom_exact(3, iso), DomainError);
  auto pv = homogeneous_partition(3, iso);
  EXPECT_EQ(pv.route, "qism-oracle");
  EXPECT_EQ(pv.value, partition_qism(LatticeWeights<Rational>::homogeneous(iso, 3)));
  auto ff = homogeneous_partition(3, VertexWeights<Rational>(3, 4, 5));
  EXPECT_EQ(ff.route, "ik-determinant");
  EXPECT_EQ(ff.value, Rational(1953125));
}

TEST(Determinant, FloatWeightsRoute) {
  VertexWeights<Real> w(Real(2), Real(1), Real(2));
  const std::vector<long> z{2, 20, 968, 224208, 247820832};
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_LT(relative_difference(ik_det_hom_weights(n, w), Real(z[n - 1])), Real("1e-30"));
  }
  EXPECT_THROW(ik_det_hom_weights(2, VertexWeights<Real>(Real(3), Real(1), Real(1))), DomainError);
}
