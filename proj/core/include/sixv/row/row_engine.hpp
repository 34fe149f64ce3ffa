#pragma once

// Formula side of the row configuration probability: the upper partition
// function as a Bethe sum or a residue at w = 1, the lower one as an
// inhomogeneous sum or a residue at z = 0 built on h_{N,s}.

#include "sixv/algebra/antisym.hpp"
#include "sixv/algebra/matrix.hpp"
#include "sixv/algebra/residue.hpp"
#include "sixv/ik/determinant.hpp"
#include "sixv/qism/oracle.hpp"
#include "sixv/row/kernels.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace sixv {

/// h_N(z) = sum_r H_N^{(r)} z^{r-1}.
template <class F>
struct BoundaryGenerating {
  std::size_t n;
  std::vector<F> coefficients;  // H_N^{(1)}, ..., H_N^{(N)}

  F evaluate(const F& z) const {
    F acc(0);
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * z + coefficients[i];
    return acc;
  }
};

/// Symmetric polynomial h_{N,s}(z_1, ..., z_s) in the ring z1..zs.
template <class F>
struct HMulti {
  std::size_t n;
  std::size_t s;
  MultiPoly<F> poly;
};

template <class F>
class RowEngine {
 public:
  explicit RowEngine(VertexWeights<F> weights, OracleBounds bounds = {})
      : w_(std::move(weights)), bounds_(bounds), t_(w_.t()), delta_(w_.delta()) {}

  const VertexWeights<F>& weights() const { return w_; }
  const OracleBounds& bounds() const { return bounds_; }
  const F& t() const { return t_; }
  const F& delta() const { return delta_; }

  /// Z_N from the homogeneous determinant, or the oracle where it is undefined.
  PartitionValue<F> partition(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = z_cache_.find(n);
    if (it != z_cache_.end()) return it->second;
    PartitionValue<F> z = homogeneous_partition(n, w_, bounds_);
    z_cache_.emplace(n, z);
    return z;
  }

  /// h_N sourced from the oracle's boundary one-point function.
  BoundaryGenerating<F> boundary(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = h_cache_.find(n);
    if (it != h_cache_.end()) return it->second;
    BoundaryGenerating<F> h{n, boundary_generating(n, w_, bounds_)};
    h_cache_.emplace(n, h);
    return h;
  }

  /// det[z_k^{s-j} (z_k - 1)^{j-1} h_{N-s+j}(z_k)] / prod_{j<k}(z_k - z_j).
  HMulti<F> h_multi_build(std::size_t n, std::size_t s) const {
    if (s > n) throw DomainError("h_{N,s} needs s <= N");
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = hm_cache_.find({n, s});
      if (it != hm_cache_.end()) return it->second;
    }
    RingPtr ring = PolyRing::numbered("z", s);
    using P = MultiPoly<F>;
    Matrix<P> m(s, s, P(ring));
    for (std::size_t j = 1; j <= s; ++j) {
      const auto h = boundary(n - s + j).coefficients;
      for (std::size_t k = 0; k < s; ++k) {
        P z = kernel::var<F>(ring, k);
        P entry = P::term(ring, mono::unit(k, unsigned(s - j)), F(1)) * (z - F(1)).pow(unsigned(j - 1)) *
                  kernel::univariate(ring, k, h);
        m(j - 1, k) = std::move(entry);
      }
    }
    P numerator = det(m, ring);
    std::vector<std::size_t> vars(s);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    HMulti<F> out{n, s, vandermonde_quotient(numerator, std::span<const std::size_t>(vars))};
    std::lock_guard<std::mutex> lock(mutex_);
    hm_cache_.emplace(std::make_pair(n, s), out);
    return out;
  }

  /// c^s a^{s(N-1)} prod t^{r_j - j} Res_{w=1} prod w_j^{r_j-1} (w_j-1)^{-s}
  ///   prod_{j<k} (w_j - w_k)(t^2 w_j w_k - 2 Delta t w_j + 1).
  F ztop_residue(const RowConfig& cfg) const {
    const std::size_t n = cfg.size(), s = cfg.row();
    if (s == 0) return F(1);
    RingPtr ring = PolyRing::numbered("w", s);
    using P = MultiPoly<F>;
    std::vector<P> num;
    std::vector<DenominatorFactor<F>> den;
    for (std::size_t j = 0; j < s; ++j) {
      num.push_back(P::term(ring, mono::unit(j, unsigned(cfg.position(j + 1) - 1)), F(1)));
      den.push_back({kernel::shifted_var<F>(ring, j, F(1)), unsigned(s)});
      for (std::size_t k = j + 1; k < s; ++k) {
        num.push_back(kernel::var<F>(ring, j) - kernel::var<F>(ring, k));
        num.push_back(kernel::pair_factor(ring, j, k, t_, delta_));
      }
    }
    std::vector<F> points(s, F(1));
    F res = residue_of_product<F>(num, den, points);
    F pref = power(w_.c, long(s)) * power(w_.a, long(s * (n - 1)));
    for (std::size_t j = 1; j <= s; ++j) pref *= power(t_, long(cfg.position(j)) - long(j));
    return pref * res;
  }

  /// Z_N prod t^{j - r_j} / (a^{s(N-1)} c^s) Res_{z=0} prod z_j^{-r_j}
  ///   prod_{j<k} (z_k - z_j)/(t^2 z_j z_k - 2 Delta t z_j + 1) h_{N,s}(z).
  F zbot_residue(const RowConfig& cfg) const {
    const std::size_t n = cfg.size(), s = cfg.row();
    const F z_n = partition(n).value;
    if (s == 0) return z_n;
    HMulti<F> hm = h_multi_build(n, s);
    RingPtr ring = hm.poly.ring();
    using P = MultiPoly<F>;
    std::vector<P> num{hm.poly};
    std::vector<DenominatorFactor<F>> den;
    for (std::size_t j = 0; j < s; ++j) {
      den.push_back({kernel::var<F>(ring, j), unsigned(cfg.position(j + 1))});
      for (std::size_t k = j + 1; k < s; ++k) {
        num.push_back(kernel::var<F>(ring, k) - kernel::var<F>(ring, j));
        den.push_back({kernel::pair_factor(ring, j, k, t_, delta_), 1u});
      }
    }
    std::vector<F> points(s, F(0));
    F res = residue_of_product<F>(num, den, points);
    F pref = z_n / (power(w_.a, long(s * (n - 1))) * power(w_.c, long(s)));
    for (std::size_t j = 1; j <= s; ++j) pref *= power(t_, long(j) - long(cfg.position(j)));
    return pref * res;
  }

  /// ztop_residue * zbot_residue / Z_N.
  F row_prob_formula(const RowConfig& cfg) const {
    return ztop_residue(cfg) * zbot_residue(cfg) / partition(cfg.size()).value;
  }

  std::vector<F> row_prob_table(std::size_t n, std::size_t s) const {
    std::vector<F> out;
    for (const auto& cfg : RowConfig::all(n, s)) out.push_back(row_prob_formula(cfg));
    return out;
  }

 private:
  VertexWeights<F> w_;
  OracleBounds bounds_;
  F t_;
  F delta_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, PartitionValue<F>> z_cache_;
  mutable std::map<std::size_t, BoundaryGenerating<F>> h_cache_;
  mutable std::map<std::pair<std::size_t, std::size_t>, HMulti<F>> hm_cache_;
};

/// Bethe-sum form of the upper partition function for homogeneous lambda
/// and distinct nu_1..nu_s.
Real ztop_bethe(std::size_t n, const std::vector<std::size_t>& positions, const Real& lambda,
                const std::vector<Real>& nus, const Real& eta);

inline constexpr std::uint64_t kMaxInhomogeneousTerms = 1000000;

/// Nested sum over distinct alpha_1..alpha_s for the lower partition function
/// at fully inhomogeneous parameters; inner Z_{N-s} from the determinant.
Real zbot_sum_inhom(const RowConfig& cfg, const SpectralParams& params);

}  // namespace sixv
