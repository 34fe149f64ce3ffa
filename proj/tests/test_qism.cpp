#include "support.hpp"

#include <sixv/qism/chain.hpp>
#include <sixv/qism/oracle.hpp>

#include <gtest/gtest.h>

#include <bit>

using namespace sixv;
using sixv::test::Gen;

namespace {

using LW = LatticeWeights<Rational>;

LW hom(const VertexWeights<Rational>& w, std::size_t n) { return LW::homogeneous(w, n); }

Integer pow_int(long base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

SpectralParams random_params(Gen& g, std::size_t n) {
  std::vector<Real> lambda, nu;
  for (std::size_t i = 0; i < n; ++i) {
    lambda.push_back(g.real(0.9, 1.4));
    nu.push_back(g.real(-0.2, 0.2));
  }
  return SpectralParams(lambda, nu, g.real(0.2, 0.4));
}

ChainVector<Real> random_vector(Gen& g, std::size_t sites) {
  ChainVector<Real> v(sites);
  for (std::uint64_t m = 0; m < v.dimension(); ++m) v[m] = g.real(-1, 1);
  return v;
}

Real max_abs_diff(const ChainVector<Real>& x, const ChainVector<Real>& y) {
  Real d = 0;
  for (std::uint64_t m = 0; m < x.dimension(); ++m) d = std::max<Real>(d, abs(x[m] - y[m]));
  return d;
}

}  // namespace

TEST(Chain, DiagonalEntriesOnAllUp) {
  std::vector<SiteWeight<Rational>> w{{2, 3, 5}, {7, 11, 5}, {13, 17, 5}};
  auto up = ChainVector<Rational>::all_up(3);
  auto a = apply_entry<Rational>(Entry::A, w, up);
  auto d = apply_entry<Rational>(Entry::D, w, up);
  EXPECT_EQ(a[7], Rational(2 * 7 * 13));
  EXPECT_EQ(d[7], Rational(3 * 11 * 17));
  for (std::uint64_t m = 0; m < 7; ++m) {
    EXPECT_EQ(a[m], 0);
    EXPECT_EQ(d[m], 0);
  }
  EXPECT_TRUE(apply_entry<Rational>(Entry::C, w, up).is_zero());
  EXPECT_TRUE(apply_entry<Rational>(Entry::B, w, ChainVector<Rational>::all_down(3)).is_zero());
}

TEST(Chain, SpinBookkeeping) {
  Gen g(3);
  std::vector<SiteWeight<Rational>> w;
  for (int i = 0; i < 4; ++i) w.push_back({g.nonzero(), g.nonzero(), g.nonzero()});
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const int ups = std::popcount(mask);
    auto v = ChainVector<Rational>::basis(4, mask);
    auto b = apply_entry<Rational>(Entry::B, w, v);
    auto c = apply_entry<Rational>(Entry::C, w, v);
    auto a = apply_entry<Rational>(Entry::A, w, v);
    for (std::uint64_t m = 0; m < 16; ++m) {
      if (b[m] != 0) EXPECT_EQ(std::popcount(m), ups - 1);
      if (c[m] != 0) EXPECT_EQ(std::popcount(m), ups + 1);
      if (a[m] != 0) EXPECT_EQ(std::popcount(m), ups);
    }
  }
}

TEST(Chain, LoweringAndRaising) {
  auto v = ChainVector<Rational>::basis(3, 0b101);
  EXPECT_EQ(v.lowered(1)[0b100], 1);
  EXPECT_TRUE(v.lowered(2).is_zero());
  EXPECT_EQ(v.raised(2)[0b111], 1);
  EXPECT_THROW(v.lowered(4), DomainError);
  EXPECT_THROW(ChainVector<Rational>(23), BudgetError);
}

TEST(Chain, SameTypeOperatorsCommute) {
  Gen g(7);
  const Real eta("0.3");
  std::vector<Real> sites{Real("0.1"), Real("-0.05"), Real("0.2")};
  for (int trial = 0; trial < 3; ++trial) {
    Real l1 = g.real(0.5, 1.5), l2 = g.real(0.5, 1.5);
    auto v = random_vector(g, 3);
    for (Entry e : {Entry::A, Entry::B, Entry::C, Entry::D}) {
      auto x = apply_monodromy_entry(e, Orientation::vertical, l1, sites, eta,
                                     apply_monodromy_entry(e, Orientation::vertical, l2, sites, eta, v));
      auto y = apply_monodromy_entry(e, Orientation::vertical, l2, sites, eta,
                                     apply_monodromy_entry(e, Orientation::vertical, l1, sites, eta, v));
      EXPECT_LT(max_abs_diff(x, y), Real("1e-40"));
    }
  }
}

TEST(Oracle, IcePointCountsAlternatingSignMatrices) {
  const VertexWeights<Rational> ice(1, 1, 1);
  const std::vector<long> expected{1, 2, 7, 42, 429, 7436};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(partition_qism(hom(ice, n)), Rational(expected[n - 1])) << "N=" << n;
  }
  auto dfs = enumerate_dfs(hom(ice, 4));
  EXPECT_EQ(dfs.value, Rational(42));
  EXPECT_EQ(dfs.configurations, 42u);
}

TEST(Oracle, FrozenPartitionFunctions) {
  const std::vector<std::pair<VertexWeights<Rational>, std::vector<std::string>>> table{
      {{2, 1, 2}, {"2", "20", "968", "224208", "247820832"}},
      {{1, 1, 3}, {"3", "18", "405", "26730", "6391143"}},
      {{3, 1, 1}, {"1", "10", "919", "764938", "5743046701"}},
  };
  for (const auto& [w, values] : table) {
    for (std::size_t n = 1; n <= values.size(); ++n) {
      EXPECT_EQ(partition_qism(hom(w, n)), parse_rational(values[n - 1])) << "N=" << n;
    }
  }
  EXPECT_EQ(partition_qism(hom({2, 1, 2}, 6)), parse_rational("1306069945664"));
}

TEST(Oracle, FreeFermionTriple) {
  // a^2 + b^2 = c^2 makes Z_N = c^{N^2}.
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(partition_qism(hom({3, 4, 5}, n)), Rational(pow_int(5, unsigned(n * n))));
  }
}

TEST(Oracle, TwoByTwoClosedForm) {
  Gen g(13);
  for (int i = 0; i < 20; ++i) {
    Rational a = g.nonzero(), b = g.nonzero(), c = g.nonzero();
    EXPECT_EQ(partition_qism(hom({a, b, c}, 2)), c * c * (a * a + b * b));
  }
}

TEST(Oracle, EnumeratorMatchesQism) {
  for (const auto& w : test::weight_set()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto lw = hom(w, n);
      EXPECT_EQ(enumerate_dfs(lw).value, partition_qism(lw));
      EXPECT_EQ(partition_qism_horizontal(lw), partition_qism(lw));
    }
  }
}

TEST(Oracle, RandomRationalWeights) {
  Gen g(19);
  for (int i = 0; i < 10; ++i) {
    VertexWeights<Rational> w(g.nonzero(), g.nonzero(), g.nonzero());
    auto lw = hom(w, 3);
    EXPECT_EQ(enumerate_dfs(lw).value, partition_qism(lw));
  }
}

TEST(Oracle, InhomogeneousOrientationsAgree) {
  Gen g(23);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto lw = LatticeWeights<Real>::trigonometric(random_params(g, n));
    Real v = partition_qism(lw);
    EXPECT_TRUE(approx_equal(v, partition_qism_horizontal(lw)));
    EXPECT_TRUE(approx_equal(v, enumerate_dfs(lw).value));
  }
}

TEST(Oracle, SymmetricInSpectralParameters) {
  Gen g(29);
  SpectralParams p = random_params(g, 4);
  Real z = partition_qism(LatticeWeights<Real>::trigonometric(p));
  SpectralParams q = p;
  std::reverse(q.lambda.begin(), q.lambda.end());
  std::rotate(q.nu.begin(), q.nu.begin() + 1, q.nu.end());
  EXPECT_TRUE(approx_equal(z, partition_qism(LatticeWeights<Real>::trigonometric(q))));
}

TEST(Oracle, RowPartitionFunctionsFrozen) {
  const VertexWeights<Rational> ice(1, 1, 1), w212(2, 1, 2);
  EXPECT_EQ(ztop_oracle(RowConfig(3, {2}), hom(ice, 3)), Rational(1));
  EXPECT_EQ(zbot_oracle(RowConfig(3, {2}), hom(ice, 3)), Rational(3));
  EXPECT_EQ(ztop_oracle(RowConfig(3, {1, 3}), hom(w212, 3)), Rational(72));
  EXPECT_EQ(zbot_oracle(RowConfig(3, {1, 3}), hom(w212, 3)), Rational(4));
  EXPECT_EQ(ztop_oracle(RowConfig(4, {1, 2, 3}), hom(w212, 4)), Rational(7744));
  EXPECT_EQ(zbot_oracle(RowConfig(4, {1, 2, 3}), hom(w212, 4)), Rational(16));
}

TEST(Oracle, RowProbabilityTablesFrozen) {
  const VertexWeights<Rational> ice(1, 1, 1);
  using V = std::vector<Rational>;
  EXPECT_EQ(boundary_generating(3, ice), (V{Rational(2, 7), Rational(3, 7), Rational(2, 7)}));
  EXPECT_EQ(boundary_generating(4, ice), (V{Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)}));
  EXPECT_EQ(row_prob_table_oracle(2, hom(ice, 3)), (V{Rational(2, 7), Rational(3, 7), Rational(2, 7)}));
  V ff;
  for (long x : {6561, 46656, 62208, 62208, 147456, 65536}) ff.push_back(Rational(x, 390625));
  EXPECT_EQ(row_prob_table_oracle(2, hom({3, 4, 5}, 4)), ff);
}

TEST(Oracle, RowConstrainedEnumerationMatchesSplit) {
  for (const auto& w : test::weight_set()) {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto lw = hom(w, n);
      for (std::size_t s = 1; s <= n; ++s) {
        for (const auto& cfg : RowConfig::all(n, s)) {
          EXPECT_EQ(enumerate_dfs(lw, {}, cfg).value, ztop_oracle(cfg, lw) * zbot_oracle(cfg, lw)) << cfg.str();
        }
      }
    }
  }
}

TEST(Oracle, LoweringOrderIrrelevant) {
  for (const auto& w : test::weight_set()) {
    auto lw = hom(w, 4);
    for (std::size_t s = 1; s <= 4; ++s) {
      for (const auto& cfg : RowConfig::all(4, s)) {
        EXPECT_EQ(ztop_oracle(cfg, lw, {}, false), ztop_oracle(cfg, lw, {}, true));
      }
    }
  }
}

TEST(Oracle, ProbabilitiesInUnitIntervalAndNormalized) {
  for (const auto& w : test::weight_set()) {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto lw = hom(w, n);
      for (std::size_t s = 1; s <= n; ++s) {
        auto table = row_prob_table_oracle(s, lw);
        Rational sum = 0;
        for (const auto& p : table) {
          EXPECT_GE(p, 0);
          EXPECT_LE(p, 1);
          sum += p;
        }
        EXPECT_EQ(sum, Rational(1));
      }
    }
  }
}

TEST(Oracle, EmptinessFormationFrozen) {
  auto lw = hom({2, 1, 2}, 3);
  EXPECT_EQ(efp_oracle(1, 1, lw), Rational(80, 121));
  EXPECT_EQ(efp_oracle(2, 1, lw), Rational(116, 121));
  EXPECT_EQ(efp_oracle(2, 2, lw), Rational(80, 121));
  EXPECT_EQ(efp_oracle(1, 2, lw), Rational(0));
  EXPECT_EQ(efp_oracle(3, 3, lw), Rational(1));
  auto ice = hom({1, 1, 1}, 4);
  EXPECT_EQ(efp_oracle(2, 2, ice), Rational(2, 21));
  EXPECT_EQ(efp_oracle(3, 1, ice), Rational(5, 6));
  EXPECT_EQ(efp_oracle(3, 3, ice), Rational(1, 6));
}

TEST(Oracle, BoundsAndDomain) {
  OracleBounds tight{3, 2};
  EXPECT_THROW(partition_qism(hom({1, 1, 1}, 4), tight), BudgetError);
  EXPECT_THROW(enumerate_dfs(hom({1, 1, 1}, 3), tight), BudgetError);
  EXPECT_THROW(boundary_H(3, 4, VertexWeights<Rational>(1, 1, 1)), DomainError);
  EXPECT_THROW(RowConfig(3, {2, 1}), DomainError);
  EXPECT_THROW(VertexWeights<Rational>(0, 1, 1), DomainError);
}

TEST(RowConfig, Enumeration) {
  auto all = RowConfig::all(4, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front().positions(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(all.back().positions(), (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(RowConfig(4, {1, 3}).mask(), 0b101u);
}

TEST(Weights, SpectralParamsDistinctness) {
  SpectralParams p({Real(1), Real(1)}, {Real(0), Real("0.1")}, Real("0.3"));
  EXPECT_THROW(p.require_distinct(), DomainError);
  auto h = SpectralParams::homogeneous(3, Real(1), Real("0.3"));
  EXPECT_EQ(h.size(), 3u);
  auto w = weights_from_angles(Real(1), Real("0.3"));
  EXPECT_TRUE(approx_equal(w.a, h.a(1, 1)));
  EXPECT_TRUE(approx_equal(w.b, h.b(2, 3)));
  EXPECT_TRUE(approx_equal(w.c, h.c()));
}
