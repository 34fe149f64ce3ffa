#include "support.hpp"

#include <sixv/algebra/residue.hpp>
#include <sixv/efp/efp_engine.hpp>

#include <gtest/gtest.h>

using namespace sixv;
using sixv::test::Gen;

namespace {

struct Routes {
  Rational oracle, row_sum, rep1, rep2, dbl;
};

Routes all_routes(const EfpEngine<Rational>& e, const EfpQuery& q) {
  return {e.oracle(q), e.from_row_sum(q), e.rep1(q), e.rep2(q), e.efp_double(q)};
}

/// Random z with no prefix product z_1...z_j equal to 1.
std::vector<Rational> regular_point(Gen& g, std::size_t s) {
  for (;;) {
    std::vector<Rational> z;
    Rational prod = 1;
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) {
      z.push_back(g.rational());
      prod *= z.back();
      ok = prod != 1;
    }
    if (ok) return z;
  }
}

}  // namespace

TEST(Efp, AllRoutesAgree) {
  for (const auto& w : test::weight_set()) {
    RowEngine<Rational> row(w);
    EfpEngine<Rational> efp(row);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t s = 1; s <= n; ++s) {
        for (std::size_t r = 1; r <= n; ++r) {
          EfpQuery q{n, r, s};
          Routes v = all_routes(efp, q);
          EXPECT_EQ(v.row_sum, v.oracle) << n << r << s;
          EXPECT_EQ(v.rep1, v.oracle) << n << r << s;
          EXPECT_EQ(v.rep2, v.oracle) << n << r << s;
          EXPECT_EQ(v.dbl, v.oracle) << n << r << s;
        }
      }
    }
  }
}

TEST(Efp, BoundaryCases) {
  for (const auto& w : test::weight_set()) {
    RowEngine<Rational> row(w);
    EfpEngine<Rational> efp(row);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t s = 1; s <= n; ++s) {
        Routes full = all_routes(efp, {n, n, s});
        for (const Rational& x : {full.oracle, full.row_sum, full.rep1, full.rep2, full.dbl}) EXPECT_EQ(x, 1);
        for (std::size_t r = 1; r < s; ++r) {
          Routes empty = all_routes(efp, {n, r, s});
          for (const Rational& x : {empty.oracle, empty.row_sum, empty.rep1, empty.rep2, empty.dbl}) EXPECT_EQ(x, 0);
        }
      }
    }
  }
}

TEST(Efp, MonotoneForPositiveWeights) {
  for (const auto& w : test::weight_set()) {
    RowEngine<Rational> row(w);
    EfpEngine<Rational> efp(row);
    const std::size_t n = 4;
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t r = 1; r < n; ++r) {
        EXPECT_LE(efp.oracle({n, r, s}), efp.oracle({n, r + 1, s}));
        if (s < n) EXPECT_GE(efp.oracle({n, r, s}), efp.oracle({n, r, s + 1}));
      }
    }
  }
}

TEST(Efp, FrozenTables) {
  RowEngine<Rational> row(VertexWeights<Rational>(2, 1, 2));
  EfpEngine<Rational> efp(row);
  const std::vector<std::vector<Rational>> f3{
      {Rational(80, 121), Rational(116, 121), Rational(1)},
      {Rational(0), Rational(80, 121), Rational(1)},
      {Rational(0), Rational(0), Rational(1)},
  };
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t r = 1; r <= 3; ++r) EXPECT_EQ(efp.rep2({3, r, s}), f3[s - 1][r - 1]);

  RowEngine<Rational> ice_row(VertexWeights<Rational>(1, 1, 1));
  EfpEngine<Rational> ice(ice_row);
  const std::vector<std::vector<Rational>> f4{
      {Rational(1, 6), Rational(1, 2), Rational(5, 6), Rational(1)},
      {Rational(0), Rational(2, 21), Rational(1, 2), Rational(1)},
      {Rational(0), Rational(0), Rational(1, 6), Rational(1)},
      {Rational(0), Rational(0), Rational(0), Rational(1)},
  };
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(ice.efp_double({4, r, s}), f4[s - 1][r - 1]);
}

TEST(Efp, QueryValidation) {
  RowEngine<Rational> row(VertexWeights<Rational>(1, 1, 1));
  EfpEngine<Rational> efp(row);
  EXPECT_THROW(efp.rep1({3, 0, 1}), DomainError);
  EXPECT_THROW(efp.rep1({3, 4, 1}), DomainError);
  EXPECT_THROW(efp.rep1({3, 1, 4}), DomainError);
}

TEST(Efp, FloatRoutesMatchOracle) {
  VertexWeights<Real> w(Real(2), Real(1), Real(2));
  RowEngine<Real> row(w);
  EfpEngine<Real> efp(row);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t r = s; r <= n; ++r) {
        EfpQuery q{n, r, s};
        Real o = efp.oracle(q);
        EXPECT_TRUE(approx_equal(efp.rep1(q), o));
        EXPECT_TRUE(approx_equal(efp.rep2(q), o));
        EXPECT_TRUE(approx_equal(efp.efp_double(q), o));
      }
    }
  }
}

TEST(Efp, UOfZ) {
  const Rational t(2), d(Rational(1, 4));
  EXPECT_EQ(u_of_z(Rational(1), t, d), Rational(0));
  EXPECT_EQ(u_of_z(Rational(0), t, d), Rational(1));
  // t^2 - 2 Delta t = 3 here.
  EXPECT_EQ(u_of_z(Rational(2), t, d), Rational(-1, 7));
  // Ice point: t^2 - 2 Delta t = 0 and u(z) = 1 - z.
  EXPECT_EQ(u_of_z(Rational(5, 3), Rational(1), Rational(1, 2)), Rational(-2, 3));
  EXPECT_THROW(u_of_z(Rational(-1, 3), t, d), SingularError);
}

TEST(Phi, SingleVariable) {
  Gen g(307);
  for (int i = 0; i < 10; ++i) {
    Rational z = g.rational();
    if (z == 1) continue;
    std::vector<Rational> pt{z};
    EXPECT_EQ(phi_s_at_ones<Rational>(pt, g.nonzero(), g.rational()), 1 / (1 - z));
  }
}

TEST(Phi, IndependentOfDirections) {
  Gen g(311);
  for (std::size_t s = 2; s <= 3; ++s) {
    for (int i = 0; i < 5; ++i) {
      std::vector<Rational> z = regular_point(g, s);
      const Rational t = g.nonzero(), d = g.rational();
      std::vector<Rational> c1, c2;
      for (std::size_t j = 0; j < s; ++j) {
        c1.push_back(Rational(long(j + 1)));
        c2.push_back(Rational(long(3 * j + 2), 7));
      }
      Rational v1 = phi_s_at_ones<Rational>(z, t, d, c1);
      Rational v2 = phi_s_at_ones<Rational>(z, t, d, c2);
      EXPECT_EQ(v1, v2);
    }
  }
  // Away from the zero of Phi_2 at (2, 3) for the ice point.
  std::vector<Rational> z{Rational(1, 3), Rational(-2)};
  EXPECT_NE(phi_s_at_ones<Rational>(z, Rational(1), Rational(1, 2)), 0);
}

TEST(Phi, SymbolicIcePointFrozen) {
  auto phi = phi_s_at_ones_symbolic<Rational>(2, Rational(1), Rational(1, 2));
  RingPtr ring = phi.ring();
  using P = MultiPoly<Rational>;
  P z1 = P::variable(ring, 0), z2 = P::variable(ring, 1);
  P num = z1 * z1 * z2 * Rational(1, 2) - z1 * z2 - z1 * Rational(1, 2) + Rational(1);
  RationalFn<Rational> expected(num, {{z1 - Rational(1), 2u}, {z1 * z2 - Rational(1), 2u}});
  EXPECT_TRUE(equivalent(phi, expected));
  std::vector<Rational> root{Rational(2), Rational(3)};
  EXPECT_EQ(phi.evaluate(root), Rational(0));
}

TEST(Phi, SymbolicMatchesNumeric) {
  Gen g(313);
  for (std::size_t s = 1; s <= 3; ++s) {
    const Rational t = g.nonzero(), d = g.rational();
    auto phi = phi_s_at_ones_symbolic<Rational>(s, t, d);
    for (int i = 0; i < 5; ++i) {
      std::vector<Rational> z = regular_point(g, s);
      EXPECT_EQ(phi.evaluate(z), phi_s_at_ones<Rational>(z, t, d));
    }
  }
}

TEST(Phi, SeriesMatchesSymbolicExpansion) {
  RowEngine<Rational> row(VertexWeights<Rational>(2, 1, 2));
  EfpEngine<Rational> efp(row);
  for (std::size_t s = 1; s <= 3; ++s) {
    Monomial bound = 0;
    for (std::size_t j = 0; j < s; ++j) bound |= mono::unit(j, 3);
    MultiPoly<Rational> series = efp.phi_series(s, bound);
    auto phi = phi_s_at_ones_symbolic<Rational>(s, row.t(), row.delta());
    MultiPoly<Rational> expansion =
        phi.numerator().truncated(bound).mul_truncated(inverse_series(phi.denominator(), bound), bound);
    EXPECT_EQ(series.ring()->names(), expansion.ring()->names());
    EXPECT_EQ(series, expansion) << "s=" << s;
  }
}
