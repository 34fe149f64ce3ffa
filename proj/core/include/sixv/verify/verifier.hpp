#pragma once

// Exact pointwise and series checks of the algebraic identities behind the
// EFP representations, plus a suite that runs every formula/oracle
// equivalence for one weight triple.

#include "sixv/algebra/scalar.hpp"
#include "sixv/qism/oracle.hpp"
#include "sixv/qism/weights.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sixv {

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;  // counterexample data on failure
};

struct Report {
  std::string suite;
  std::vector<CheckItem> items;

  bool passed() const;
  std::size_t failures() const;
  void add(std::string name, bool ok, std::string detail = {});
  void append(const Report& other);
};

/// Small-height rationals p/q, |p| <= 10, 1 <= q <= 9, from a 64-bit
/// Mersenne twister. The mapping from raw draws is fixed here so that a seed
/// reproduces the same points on every platform.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next();
  Rational next_nonzero();
  /// s pairwise distinct values, none equal to 0 or 1.
  std::vector<Rational> distinct_point(std::size_t s);

 private:
  std::mt19937_64 rng_;
};

inline constexpr std::size_t kMaxIdentitySize = 5;
inline constexpr unsigned kMaxResample = 1000;

using TDelta = std::pair<Rational, Rational>;

/// sum_{r_1 < ... < r_s <= r} prod X_j^{-r_j} against
/// prod_j X_j^{-(r-s+j)} / (1 - X_1...X_j), both multiplied by
/// prod_j X_j^{r-s+j} and compared up to total degree D.
Report check_sum_identity(std::size_t s, unsigned degree);

struct Identity1Options {
  std::size_t s = 2;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<VertexWeights<Rational>> weights;  // trial i uses weights[i % size]
  OracleBounds bounds{};
};

/// Asym_z of prod_{j<k} ((t^2-2Dt) z_j + 1)(t^2 z_j z_k - 2Dt z_k + 1)/(z_j - 1)
/// against Z_s/(s! a^{s(s-1)} c^s) prod ((t^2-2Dt) z_j + 1)^{s-1}/(z_j - 1)^{s-1}
/// prod_{j<k} (z_k - z_j) h_{s,s}(u(z)).
Report check_identity1(const Identity1Options& opt);

struct Identity2Options {
  std::size_t s = 2;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<TDelta> params;  // (t, Delta) per trial, cycled; empty draws them at random
};

/// s! Asym_z[Phi_s(1,...,1; z) prod_{j<k} z_j (t^2 z_j z_k - 2Dt z_k + 1)] against
/// (-1)^{s(s+1)/2} / prod (z_j - 1) Asym_z[prod_{j<k} ((t^2-2Dt) z_j + 1)(t^2 z_j z_k - 2Dt z_k + 1)/(z_j - 1)].
Report check_identity2(const Identity2Options& opt);

struct WLemmaOptions {
  std::size_t s = 2;
  std::size_t trials = 3;
  std::size_t r = 3;
  std::uint64_t seed = 1;
  std::vector<TDelta> params;
};

inline constexpr std::size_t kMaxWLemmaSize = 3;

/// Res_{w=1} prod w_j^r (w_j - 1)^{-s} prod_{j<k} (w_j - w_k)^2 Phi_s(w; z) against
/// (-1)^{s(s-1)/2} s! Phi_s(1,...,1; z), at random rational z.
Report check_w_lemma(const WLemmaOptions& opt);

struct CrossCheckOptions {
  std::size_t n_max = 3;
  std::uint64_t seed = 1;
  OracleBounds bounds{};
  std::size_t identity_trials = 5;
};

/// Every module-level equivalence for N <= n_max at one weight triple.
Report cross_check_suite(const VertexWeights<Rational>& w, const CrossCheckOptions& opt);

}  // namespace sixv
