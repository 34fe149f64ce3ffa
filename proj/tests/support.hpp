#pragma once

#include <sixv/algebra/multipoly.hpp>
#include <sixv/algebra/scalar.hpp>
#include <sixv/qism/weights.hpp>

#include <cstdint>
#include <vector>

namespace sixv::test {

// SplitMix64.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }

  Rational rational(long height = 9) { return Rational(uniform(-height, height), uniform(1, height)); }

  Rational nonzero(long height = 9) {
    for (;;) {
      Rational q = rational(height);
      if (q != 0) return q;
    }
  }

  /// Decimal in [lo, hi) with 1e-6 resolution, as a Real.
  Real real(double lo, double hi) {
    const long steps = long((hi - lo) * 1e6);
    return Real(Rational(long(lo * 1e6) + uniform(0, steps - 1), 1000000));
  }

 private:
  std::uint64_t state_;
};

inline MultiPoly<Rational> random_poly(Gen& g, const RingPtr& ring, std::size_t terms, unsigned max_exp) {
  std::vector<MultiPoly<Rational>::Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<unsigned> e(ring->size());
    for (auto& x : e) x = unsigned(g.uniform(0, max_exp));
    ts.emplace_back(mono::from_exponents(e), g.nonzero());
  }
  return MultiPoly<Rational>::from_terms(ring, std::move(ts));
}

/// Delta = 1/2, 1/4, -7/2, 0, 3/2.
inline std::vector<VertexWeights<Rational>> weight_set() {
  return {{1, 1, 1}, {2, 1, 2}, {1, 1, 3}, {3, 4, 5}, {3, 1, 1}};
}

}  // namespace sixv::test
