#pragma once

// Emptiness formation probability by several routes: the oracle sum, the
// sum of row probabilities, two single-set residue representations and the
// double-integral form with the w-integration done through Phi_s(1,...,1; z).

#include "sixv/algebra/antisym.hpp"
#include "sixv/algebra/jet.hpp"
#include "sixv/algebra/rational_fn.hpp"
#include "sixv/algebra/residue.hpp"
#include "sixv/row/row_engine.hpp"

#include <optional>
#include <vector>

namespace sixv {

struct EfpQuery {
  std::size_t n;
  std::size_t r;
  std::size_t s;

  void validate() const {
    if (n == 0) throw DomainError("lattice size must be positive");
    if (r < 1 || r > n) throw DomainError("EFP needs 1 <= r <= N");
    if (s < 1 || s > n) throw DomainError("EFP needs 1 <= s <= N");
  }
};

/// u(z) = -(z - 1)/((t^2 - 2 Delta t) z + 1).
template <class F>
F u_of_z(const F& z, const F& t, const F& delta) {
  F den = (t * t - F(2) * delta * t) * z + F(1);
  if (ScalarTraits<F>::is_zero(den)) throw SingularError("u(z) denominator vanishes");
  return -(z - F(1)) / den;
}

/// Substitutes x_j -> num_j / den_j into p. Returns the numerator; the
/// denominator is prod_j den_j^{deg_j p}, with the degrees in `degrees`.
/// With a bound, monomials outside it are dropped throughout.
template <class F>
MultiPoly<F> compose_rational(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& nums,
                              const std::vector<MultiPoly<F>>& dens, std::vector<unsigned>& degrees,
                              std::optional<Monomial> bound = std::nullopt) {
  const std::size_t n = p.ring()->size();
  if (nums.size() != n || dens.size() != n) throw DomainError("composition needs one map per variable");
  degrees.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) degrees[j] = p.degree_in(j);
  const RingPtr& ring = nums.empty() ? p.ring() : nums.front().ring();
  auto mul = [&bound](const MultiPoly<F>& x, const MultiPoly<F>& y) {
    return bound ? x.mul_truncated(y, *bound) : x * y;
  };
  // mixed[j][e] = num_j^e den_j^{deg_j - e}
  std::vector<std::vector<MultiPoly<F>>> mixed(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<MultiPoly<F>> np{MultiPoly<F>::constant(ring, F(1))}, dp{MultiPoly<F>::constant(ring, F(1))};
    for (unsigned e = 1; e <= degrees[j]; ++e) {
      np.push_back(mul(np.back(), nums[j]));
      dp.push_back(mul(dp.back(), dens[j]));
    }
    for (unsigned e = 0; e <= degrees[j]; ++e) mixed[j].push_back(mul(np[e], dp[degrees[j] - e]));
  }
  MultiPoly<F> out(ring);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly<F> term = MultiPoly<F>::constant(ring, c);
    for (std::size_t j = 0; j < n && !term.is_zero(); ++j) term = mul(term, mixed[j][mono::exponent(m, j)]);
    out += term;
  }
  return out;
}

template <class F>
class EfpEngine {
 public:
  explicit EfpEngine(const RowEngine<F>& row) : row_(row) {}

  const RowEngine<F>& row() const { return row_; }

  F oracle(const EfpQuery& q) const {
    q.validate();
    return efp_oracle(q.r, q.s, LatticeWeights<F>::homogeneous(row_.weights(), q.n), row_.bounds());
  }

  /// Sum of row_prob_formula over r_1 < ... < r_s <= r.
  F from_row_sum(const EfpQuery& q) const {
    q.validate();
    F sum(0);
    if (q.r < q.s) return sum;
    for (const auto& cfg : RowConfig::all(q.n, q.s)) {
      if (cfg.position(q.s) <= q.r) sum += row_.row_prob_formula(cfg);
    }
    return sum;
  }

  /// (-1)^s Res_{z=0} h_{N,s}(z) prod_j ((t^2-2Dt) z_j + 1)^{s-j} / (z_j^r (z_j - 1)^{s-j+1})
  ///   prod_{j<k} (z_j - z_k)/(t^2 z_j z_k - 2 D t z_j + 1).
  F rep1(const EfpQuery& q) const {
    q.validate();
    const std::size_t s = q.s;
    HMulti<F> hm = row_.h_multi_build(q.n, s);
    const RingPtr& ring = hm.poly.ring();
    const F& t = row_.t();
    const F& d = row_.delta();
    std::vector<MultiPoly<F>> num{hm.poly};
    std::vector<DenominatorFactor<F>> den;
    for (std::size_t j = 0; j < s; ++j) {
      num.push_back(kernel::linear_factor(ring, j, t, d).pow(unsigned(s - j - 1)));
      den.push_back({kernel::var<F>(ring, j), unsigned(q.r)});
      den.push_back({kernel::shifted_var<F>(ring, j, F(1)), unsigned(s - j)});
      for (std::size_t k = j + 1; k < s; ++k) {
        num.push_back(kernel::var<F>(ring, j) - kernel::var<F>(ring, k));
        den.push_back({kernel::pair_factor(ring, j, k, t, d), 1u});
      }
    }
    std::vector<F> points(s, F(0));
    F res = residue_of_product<F>(num, den, points);
    return s % 2 ? F(-res) : res;
  }

  /// (-1)^s Z_s / (s! a^{s(s-1)} c^s) Res_{z=0} h_{N,s}(z) h_{s,s}(u(z))
  ///   prod_j ((t^2-2Dt) z_j + 1)^{s-1} / (z_j^r (z_j - 1)^s)
  ///   prod_{j != k} (z_k - z_j)/(t^2 z_j z_k - 2 D t z_j + 1).
  F rep2(const EfpQuery& q) const {
    q.validate();
    const std::size_t s = q.s;
    HMulti<F> hm = row_.h_multi_build(q.n, s);
    HMulti<F> hs = row_.h_multi_build(s, s);
    const RingPtr& ring = hm.poly.ring();
    const F& t = row_.t();
    const F& d = row_.delta();

    std::vector<MultiPoly<F>> u_num, u_den;
    for (std::size_t j = 0; j < s; ++j) {
      u_num.push_back(kernel::one<F>(ring) - kernel::var<F>(ring, j));
      u_den.push_back(kernel::linear_factor(ring, j, t, d));
    }
    Monomial bound = 0;
    for (std::size_t j = 0; j < s; ++j) bound |= mono::unit(j, unsigned(q.r - 1));
    std::vector<unsigned> degrees;
    MultiPoly<F> hu = compose_rational(hs.poly, u_num, u_den, degrees, bound);

    std::vector<MultiPoly<F>> num{hm.poly, hu};
    std::vector<DenominatorFactor<F>> den;
    for (std::size_t j = 0; j < s; ++j) {
      MultiPoly<F> lin = kernel::linear_factor(ring, j, t, d);
      const unsigned lin_power = unsigned(s - 1);
      if (lin_power >= degrees[j]) {
        num.push_back(lin.pow(lin_power - degrees[j]));
      } else {
        den.push_back({lin, degrees[j] - lin_power});
      }
      den.push_back({kernel::var<F>(ring, j), unsigned(q.r)});
      den.push_back({kernel::shifted_var<F>(ring, j, F(1)), unsigned(s)});
      for (std::size_t k = 0; k < s; ++k) {
        if (k == j) continue;
        num.push_back(kernel::var<F>(ring, k) - kernel::var<F>(ring, j));
        den.push_back({kernel::pair_factor(ring, j, k, t, d), 1u});
      }
    }
    std::vector<F> points(s, F(0));
    F res = residue_of_product<F>(num, den, points);
    const VertexWeights<F>& w = row_.weights();
    F pref = row_.partition(s).value /
             (F(factorial(unsigned(s))) * power(w.a, long(s * (s - 1))) * power(w.c, long(s)));
    F value = pref * res;
    return s % 2 ? F(-value) : value;
  }

  /// Phi_s(1,...,1; z) as a truncated power series in z within `bound`.
  MultiPoly<F> phi_series(std::size_t s, Monomial bound) const;

  /// s! Res_{z=0} prod_j z_j^{-(r-s+j)} prod_{j<k} (z_k - z_j)/(t^2 z_j z_k - 2 D t z_j + 1)
  ///   h_{N,s}(z) Phi_s(1,...,1; z).
  F efp_double(const EfpQuery& q) const {
    q.validate();
    const std::size_t s = q.s;
    if (q.r < s) return F(0);
    HMulti<F> hm = row_.h_multi_build(q.n, s);
    const RingPtr& ring = hm.poly.ring();
    Monomial bound = 0;
    for (std::size_t j = 1; j <= s; ++j) bound |= mono::unit(j - 1, unsigned(q.r - s + j - 1));
    MultiPoly<F> phi = phi_series(s, bound);
    std::vector<MultiPoly<F>> num{hm.poly, phi};
    std::vector<DenominatorFactor<F>> den;
    for (std::size_t j = 0; j < s; ++j) {
      den.push_back({kernel::var<F>(ring, j), unsigned(q.r - s + j + 1)});
      for (std::size_t k = j + 1; k < s; ++k) {
        num.push_back(kernel::var<F>(ring, k) - kernel::var<F>(ring, j));
        den.push_back({kernel::pair_factor(ring, j, k, row_.t(), row_.delta()), 1u});
      }
    }
    std::vector<F> points(s, F(0));
    return F(factorial(unsigned(s))) * residue_of_product<F>(num, den, points);
  }

 private:
  const RowEngine<F>& row_;
};

/// Phi_s(1,...,1; z) at numeric z by the epsilon-jet method with
/// w_j = 1 + c_j e (c_j distinct; defaults to 1..s).
template <class F>
F phi_s_at_ones(std::span<const F> z, const F& t, const F& delta, std::vector<F> cs = {});

/// Symbolic Phi_s(1,...,1; z) as a rational function in z1..zs.
template <class F>
RationalFn<F> phi_s_at_ones_symbolic(std::size_t s, const F& t, const F& delta, std::vector<F> cs = {});

/// The bracket of Phi_s before antisymmetrization:
///   prod_{j<k} (t^2 w_j w_k - 2 D t w_j + 1) / prod_j (w_1...w_j - z_1...z_j).
template <class F>
F phi_bracket(std::span<const F> w, std::span<const F> z, const F& t, const F& delta) {
  F num(1), wp(1), zp(1), den(1);
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t k = j + 1; k < w.size(); ++k) num *= t * t * w[j] * w[k] - F(2) * delta * t * w[j] + F(1);
    wp *= w[j];
    zp *= z[j];
    den *= wp - zp;
  }
  if (ScalarTraits<F>::is_zero(den)) throw SingularError("Phi_s bracket on its pole locus");
  return num / den;
}

}  // namespace sixv

#include "sixv/efp/phi_impl.hpp"
