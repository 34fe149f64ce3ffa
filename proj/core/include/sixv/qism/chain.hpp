#pragma once

// Spin-chain vectors and streaming application of monodromy-matrix entries.
//
// Bit k of a basis index is set when site k+1 carries spin up. The L-operator
// in auxiliary space (index 0 = up) is
//   [[a P_up + b P_down, c s^-], [c s^+, b P_up + a P_down]]
// and a monodromy entry is the ordered product over sites with site 1 acting
// first.

#include "sixv/algebra/scalar.hpp"
#include "sixv/error.hpp"
#include "sixv/qism/weights.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sixv {

inline constexpr std::size_t kMaxChainSites = 22;

enum class Entry { A, B, C, D };
enum class Orientation { vertical, horizontal };

template <class F>
struct SiteWeight {
  F a;
  F b;
  F c;
};

template <class F>
class ChainVector {
 public:
  explicit ChainVector(std::size_t sites) : sites_(sites) {
    if (sites > kMaxChainSites) throw BudgetError("chain length exceeds 22 sites");
    data_.assign(std::size_t{1} << sites, F(0));
  }

  static ChainVector basis(std::size_t sites, std::uint64_t mask) {
    ChainVector v(sites);
    v.at(mask) = F(1);
    return v;
  }
  static ChainVector all_up(std::size_t sites) { return basis(sites, full_mask(sites)); }
  static ChainVector all_down(std::size_t sites) { return basis(sites, 0); }

  static std::uint64_t full_mask(std::size_t sites) { return (std::uint64_t{1} << sites) - 1; }

  std::size_t sites() const { return sites_; }
  std::size_t dimension() const { return data_.size(); }

  F& at(std::uint64_t mask) {
    if (mask >= data_.size()) throw DomainError("basis index out of range");
    return data_[mask];
  }
  const F& at(std::uint64_t mask) const {
    if (mask >= data_.size()) throw DomainError("basis index out of range");
    return data_[mask];
  }
  const F& operator[](std::uint64_t mask) const { return data_[mask]; }
  F& operator[](std::uint64_t mask) { return data_[mask]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!ScalarTraits<F>::is_zero(x)) return false;
    }
    return true;
  }

  ChainVector& operator+=(const ChainVector& o) {
    check(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ChainVector& operator*=(const F& x) {
    for (auto& v : data_) v *= x;
    return *this;
  }
  friend ChainVector operator+(ChainVector u, const ChainVector& v) { return u += v; }
  friend ChainVector operator*(const F& x, ChainVector v) { return v *= x; }

  /// Lowers the spin at `site` (1-based); components with that spin down vanish.
  ChainVector lowered(std::size_t site) const {
    std::uint64_t bit = site_bit(site);
    ChainVector r(sites_);
    for (std::uint64_t m = 0; m < data_.size(); ++m) {
      if (m & bit) r.data_[m & ~bit] += data_[m];
    }
    return r;
  }

  ChainVector raised(std::size_t site) const {
    std::uint64_t bit = site_bit(site);
    ChainVector r(sites_);
    for (std::uint64_t m = 0; m < data_.size(); ++m) {
      if (!(m & bit)) r.data_[m | bit] += data_[m];
    }
    return r;
  }

 private:
  std::uint64_t site_bit(std::size_t site) const {
    if (site < 1 || site > sites_) throw DomainError("site index out of range");
    return std::uint64_t{1} << (site - 1);
  }
  void check(const ChainVector& o) const {
    if (o.sites_ != sites_) throw DomainError("chain vectors of different length");
  }

  std::size_t sites_;
  std::vector<F> data_;
};

/// Applies entry (A, B, C or D) of the product of L-operators with the given
/// per-site weights (site 1 first).
template <class F>
ChainVector<F> apply_entry(Entry entry, std::span<const SiteWeight<F>> weights, const ChainVector<F>& v) {
  const std::size_t m = v.sites();
  if (weights.size() != m) throw DomainError("site weight list does not match the chain length");
  const int out_aux = (entry == Entry::A || entry == Entry::B) ? 0 : 1;
  const int in_aux = (entry == Entry::A || entry == Entry::C) ? 0 : 1;

  // up[i] / down[i]: component with auxiliary spin up / down.
  ChainVector<F> up(m), down(m);
  bool has_up = in_aux == 0, has_down = in_aux == 1;
  (in_aux == 0 ? up : down) = v;
  const std::uint64_t dim = v.dimension();

  for (std::size_t k = 0; k < m; ++k) {
    const auto& w = weights[k];
    const std::uint64_t bit = std::uint64_t{1} << k;
    ChainVector<F> nup(m), ndown(m);
    for (std::uint64_t x = 0; x < dim; ++x) {
      const bool site_up = x & bit;
      if (has_up && !ScalarTraits<F>::is_zero(up[x])) {
        nup[x] += (site_up ? w.a : w.b) * up[x];
        if (!site_up) ndown[x | bit] += w.c * up[x];
      }
      if (has_down && !ScalarTraits<F>::is_zero(down[x])) {
        ndown[x] += (site_up ? w.b : w.a) * down[x];
        if (site_up) nup[x & ~bit] += w.c * down[x];
      }
    }
    has_up = has_up || has_down;
    has_down = has_up;
    up = std::move(nup);
    down = std::move(ndown);
  }
  return out_aux == 0 ? up : down;
}

/// Entry of the vertical monodromy matrix of line alpha, acting on the
/// horizontal-line sites `ks` (1-based, in order).
template <class F>
ChainVector<F> apply_vertical(Entry entry, const LatticeWeights<F>& lw, std::size_t alpha,
                              std::span<const std::size_t> ks, const ChainVector<F>& v) {
  std::vector<SiteWeight<F>> w;
  w.reserve(ks.size());
  for (std::size_t k : ks) w.push_back({lw.a(alpha, k), lw.b(alpha, k), lw.c()});
  return apply_entry<F>(entry, w, v);
}

/// Entry of the horizontal monodromy matrix of line k, acting on the
/// vertical-line sites `alphas`.
template <class F>
ChainVector<F> apply_horizontal(Entry entry, const LatticeWeights<F>& lw, std::size_t k,
                                std::span<const std::size_t> alphas, const ChainVector<F>& v) {
  std::vector<SiteWeight<F>> w;
  w.reserve(alphas.size());
  for (std::size_t alpha : alphas) w.push_back({lw.a(alpha, k), lw.b(alpha, k), lw.c()});
  return apply_entry<F>(entry, w, v);
}

/// Trigonometric monodromy entry. Vertical: weights a(spectral, site);
/// horizontal: a(site, spectral), with a(l, n) = sin(l - n + eta).
ChainVector<Real> apply_monodromy_entry(Entry entry, Orientation orientation, const Real& spectral,
                                        std::span<const Real> site_params, const Real& eta,
                                        const ChainVector<Real>& v);

}  // namespace sixv
