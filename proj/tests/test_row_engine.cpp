#include "support.hpp"

#include <sixv/qism/oracle.hpp>
#include <sixv/row/row_engine.hpp>

#include <gtest/gtest.h>

using namespace sixv;
using sixv::test::Gen;

namespace {

using LW = LatticeWeights<Rational>;

std::vector<VertexWeights<Rational>> row_weights() { return {{1, 1, 1}, {2, 1, 2}, {3, 4, 5}, {1, 1, 3}}; }

}  // namespace

TEST(RowEngine, UpperResidueMatchesOracle) {
  for (const auto& w : row_weights()) {
    RowEngine<Rational> eng(w);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto lw = LW::homogeneous(w, n);
      for (std::size_t s = 1; s <= n; ++s) {
        for (const auto& cfg : RowConfig::all(n, s)) {
          EXPECT_EQ(eng.ztop_residue(cfg), ztop_oracle(cfg, lw)) << cfg.str();
        }
      }
    }
  }
}

TEST(RowEngine, LowerResidueMatchesOracle) {
  for (const auto& w : row_weights()) {
    RowEngine<Rational> eng(w);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto lw = LW::homogeneous(w, n);
      for (std::size_t s = 1; s <= n; ++s) {
        for (const auto& cfg : RowConfig::all(n, s)) {
          EXPECT_EQ(eng.zbot_residue(cfg), zbot_oracle(cfg, lw)) << cfg.str();
        }
      }
    }
  }
}

TEST(RowEngine, FormulaTableIsNormalized) {
  for (const auto& w : test::weight_set()) {
    RowEngine<Rational> eng(w);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t s = 1; s <= n; ++s) {
        auto table = eng.row_prob_table(n, s);
        Rational sum = 0;
        for (const auto& p : table) sum += p;
        EXPECT_EQ(sum, Rational(1)) << "N=" << n << " s=" << s;
        EXPECT_EQ(table, row_prob_table_oracle(s, LW::homogeneous(w, n)));
      }
    }
  }
}

TEST(RowEngine, HMultiReducesToBoundaryGenerating) {
  for (const auto& w : row_weights()) {
    RowEngine<Rational> eng(w);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto hm = eng.h_multi_build(n, 1);
      auto h = eng.boundary(n);
      for (std::size_t r = 0; r < n; ++r) {
        EXPECT_EQ(hm.poly.coefficient(mono::unit(0, unsigned(r))), h.coefficients[r]);
      }
      EXPECT_LE(hm.poly.size(), n);
    }
  }
}

TEST(RowEngine, HMultiIsSymmetricAndNormalized) {
  for (const auto& w : row_weights()) {
    RowEngine<Rational> eng(w);
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t s = 2; s <= n; ++s) {
        auto hm = eng.h_multi_build(n, s);
        std::vector<std::size_t> perm(s);
        for (std::size_t i = 0; i < s; ++i) perm[i] = (i + 1) % s;
        EXPECT_EQ(hm.poly.permuted(perm), hm.poly);
        std::vector<std::size_t> swap(s);
        for (std::size_t i = 0; i < s; ++i) swap[i] = i;
        std::swap(swap[0], swap[1]);
        EXPECT_EQ(hm.poly.permuted(swap), hm.poly);
        std::vector<Rational> ones(s, Rational(1));
        EXPECT_EQ(hm.poly.evaluate(ones), Rational(1));
      }
    }
  }
}

TEST(RowEngine, BoundaryGeneratingAtOneIsOne) {
  RowEngine<Rational> eng(VertexWeights<Rational>(2, 1, 2));
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(eng.boundary(n).evaluate(Rational(1)), Rational(1));
}

TEST(RowEngine, FloatBackendMatchesOracle) {
  VertexWeights<Real> w(Real(2), Real(1), Real(2));
  RowEngine<Real> eng(w);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto lw = LatticeWeights<Real>::homogeneous(w, n);
    for (std::size_t s = 1; s <= n; ++s) {
      for (const auto& cfg : RowConfig::all(n, s)) {
        EXPECT_TRUE(approx_equal(eng.row_prob_formula(cfg), row_prob_oracle(cfg, lw))) << cfg.str();
      }
    }
  }
}

TEST(RowEngine, BetheSumMatchesOracle) {
  Gen g(211);
  const Real eta("0.3");
  for (std::size_t n = 1; n <= 4; ++n) {
    const Real lambda = g.real(0.9, 1.3);
    std::vector<Real> nu;
    for (std::size_t k = 0; k < n; ++k) nu.push_back(Real("-0.2") + Real("0.11") * Real(long(k)) + g.real(0, 0.05));
    auto lw = LatticeWeights<Real>::trigonometric(SpectralParams(std::vector<Real>(n, lambda), nu, eta));
    for (std::size_t s = 1; s <= n; ++s) {
      std::vector<Real> nus(nu.begin(), nu.begin() + long(s));
      for (const auto& cfg : RowConfig::all(n, s)) {
        Real bethe = ztop_bethe(n, cfg.positions(), lambda, nus, eta);
        EXPECT_LT(relative_difference(bethe, ztop_oracle(cfg, lw)), Real("1e-25")) << cfg.str();
      }
    }
  }
}

TEST(RowEngine, BetheSumTendsToResidue) {
  PrecisionScope scope(200);
  const Real lambda("1.1"), eta("0.3"), eps("1e-25");
  RowEngine<Real> eng(weights_from_angles(lambda, eta));
  for (std::size_t s = 1; s <= 3; ++s) {
    std::vector<Real> nus;
    for (std::size_t j = 1; j <= s; ++j) nus.push_back(eps * Real(long(j)));
    for (const auto& cfg : RowConfig::all(4, s)) {
      Real bethe = ztop_bethe(4, cfg.positions(), lambda, nus, eta);
      EXPECT_LT(relative_difference(bethe, eng.ztop_residue(cfg)), Real("1e-15")) << cfg.str();
    }
  }
  EXPECT_THROW(ztop_bethe(3, {1, 2}, lambda, {Real(0), Real(0)}, eta), DomainError);
}

TEST(RowEngine, InhomogeneousLowerSumMatchesOracle) {
  Gen g(223);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Real> lambda, nu;
    for (std::size_t i = 0; i < n; ++i) {
      lambda.push_back(Real("0.9") + Real("0.1") * Real(long(i)) + g.real(0, 0.05));
      nu.push_back(Real("-0.15") + Real("0.1") * Real(long(i)) + g.real(0, 0.05));
    }
    SpectralParams p(lambda, nu, Real("0.3"));
    auto lw = LatticeWeights<Real>::trigonometric(p);
    for (std::size_t s = 1; s <= n; ++s) {
      for (const auto& cfg : RowConfig::all(n, s)) {
        EXPECT_LT(relative_difference(zbot_sum_inhom(cfg, p), zbot_oracle(cfg, lw)), Real("1e-25")) << cfg.str();
      }
    }
  }
}
