#pragma once

// Ground-truth partition and correlation functions by direct evaluation:
// monodromy-matrix elements on the spin chain, and a depth-first ice-rule
// enumerator as an independent second check.

#include "sixv/qism/chain.hpp"
#include "sixv/qism/row_config.hpp"
#include "sixv/qism/weights.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace sixv {

struct OracleBounds {
  std::size_t qism_max = 12;
  std::size_t dfs_max = 6;
};

namespace detail {

inline std::vector<std::size_t> range1(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i <= to; ++i) r.push_back(i);
  return r;
}

inline void check_qism(std::size_t n, const OracleBounds& bounds) {
  if (n == 0) throw DomainError("lattice size must be positive");
  if (n > bounds.qism_max) {
    throw BudgetError("N = " + std::to_string(n) + " exceeds the QISM oracle bound " +
                      std::to_string(bounds.qism_max));
  }
}

}  // namespace detail

/// <down| B(lambda_1) ... B(lambda_N) |up> on the horizontal-line space.
template <class F>
F partition_qism(const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  const std::size_t n = lw.size();
  detail::check_qism(n, bounds);
  const auto ks = detail::range1(1, n);
  ChainVector<F> v = ChainVector<F>::all_up(n);
  for (std::size_t alpha = 1; alpha <= n; ++alpha) v = apply_vertical(Entry::B, lw, alpha, ks, v);
  return v[0];
}

/// <up| C(nu_1) ... C(nu_N) |down> on the vertical-line space.
template <class F>
F partition_qism_horizontal(const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  const std::size_t n = lw.size();
  detail::check_qism(n, bounds);
  const auto alphas = detail::range1(1, n);
  ChainVector<F> v = ChainVector<F>::all_down(n);
  for (std::size_t k = 1; k <= n; ++k) v = apply_horizontal(Entry::C, lw, k, alphas, v);
  return v[ChainVector<F>::full_mask(n)];
}

template <class F>
struct DfsResult {
  F value;
  std::uint64_t configurations = 0;
};

/// Direct sum over ice-rule configurations with DWBC. Lines k run top to
/// bottom, columns alpha right to left. When `row` is given, only
/// configurations whose row s has its up arrows at those positions count.
template <class F>
DfsResult<F> enumerate_dfs(const LatticeWeights<F>& lw, const OracleBounds& bounds = {},
                           const std::optional<RowConfig>& row = std::nullopt) {
  const std::size_t n = lw.size();
  if (n == 0) throw DomainError("lattice size must be positive");
  if (n > bounds.dfs_max) {
    throw BudgetError("N = " + std::to_string(n) + " exceeds the enumeration bound " +
                      std::to_string(bounds.dfs_max));
  }
  if (row && row->size() != n) throw DomainError("row constraint has the wrong lattice size");

  DfsResult<F> result{F(0), 0};
  // vert[alpha-1]: arrow on the vertical edge below the current row (1 = up).
  std::vector<int> vert(n, 0);
  std::vector<F> partial(n * n + 1, F(1));

  auto visit = [&](auto&& self, std::size_t k, std::size_t alpha, int h_right, std::size_t depth) -> void {
    if (k > n) {
      for (int x : vert) {
        if (x != 1) return;
      }
      result.value += partial[depth];
      ++result.configurations;
      return;
    }
    if (alpha > n) {
      if (h_right != 0) return;
      std::size_t ups = 0;
      for (int x : vert) ups += static_cast<std::size_t>(x);
      if (ups != k) throw Error("ice-rule enumeration produced a row with the wrong number of up arrows");
      if (row && k == row->row()) {
        for (std::size_t a = 1; a <= n; ++a) {
          if ((vert[a - 1] == 1) != row->contains(a)) return;
        }
      }
      self(self, k + 1, 1, 1, depth);
      return;
    }
    const int v_top = vert[alpha - 1];
    for (int h_left = 0; h_left <= 1; ++h_left) {
      const int v_bottom = h_right + v_top - h_left;
      if (v_bottom < 0 || v_bottom > 1) continue;
      const F* w;
      if (h_left == h_right && v_top == v_bottom && h_left == v_top) w = &lw.a(alpha, k);
      else if (h_left == h_right && v_top == v_bottom) w = &lw.b(alpha, k);
      else w = &lw.c();
      partial[depth + 1] = partial[depth] * *w;
      vert[alpha - 1] = v_bottom;
      self(self, k, alpha + 1, h_left, depth + 1);
      vert[alpha - 1] = v_top;
    }
  };
  visit(visit, 1, 1, 1, 0);
  return result;
}

/// Upper s x N sublattice: <down| s^-_{r_s} ... s^-_{r_1} C(nu_1) ... C(nu_s) |down>.
/// The lowering operators are applied in descending position order unless
/// `ascending` is set (they commute).
template <class F>
F ztop_oracle(const RowConfig& cfg, const LatticeWeights<F>& lw, const OracleBounds& bounds = {},
              bool ascending = false) {
  const std::size_t n = lw.size();
  if (cfg.size() != n) throw DomainError("row configuration has the wrong lattice size");
  detail::check_qism(n, bounds);
  const std::size_t s = cfg.row();
  const auto alphas = detail::range1(1, n);
  ChainVector<F> v = ChainVector<F>::all_down(n);
  for (std::size_t k = 1; k <= s; ++k) v = apply_horizontal(Entry::C, lw, k, alphas, v);
  for (std::size_t j = 1; j <= s; ++j) {
    const std::size_t idx = ascending ? s + 1 - j : j;
    v = v.lowered(cfg.position(idx));
  }
  return v[0];
}

/// Lower (N-s) x N sublattice: product over alpha of A(lambda_alpha) when
/// alpha is an up position and B(lambda_alpha) otherwise, on the truncated
/// space of lines s+1..N, between <down| and |up>.
template <class F>
F zbot_oracle(const RowConfig& cfg, const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  const std::size_t n = lw.size();
  if (cfg.size() != n) throw DomainError("row configuration has the wrong lattice size");
  detail::check_qism(n, bounds);
  const std::size_t s = cfg.row();
  const auto ks = detail::range1(s + 1, n);
  ChainVector<F> v = ChainVector<F>::all_up(n - s);
  for (std::size_t alpha = 1; alpha <= n; ++alpha) {
    v = apply_vertical(cfg.contains(alpha) ? Entry::A : Entry::B, lw, alpha, ks, v);
  }
  return v[0];
}

/// Row configuration probability ztop * zbot / Z_N.
template <class F>
F row_prob_oracle(const RowConfig& cfg, const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  F z = partition_qism(lw, bounds);
  if (ScalarTraits<F>::is_zero(z)) throw SingularError("partition function vanishes");
  return ztop_oracle(cfg, lw, bounds) * zbot_oracle(cfg, lw, bounds) / z;
}

/// All probabilities of row s, in RowConfig::all order.
template <class F>
std::vector<F> row_prob_table_oracle(std::size_t s, const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  F z = partition_qism(lw, bounds);
  if (ScalarTraits<F>::is_zero(z)) throw SingularError("partition function vanishes");
  std::vector<F> out;
  for (const auto& cfg : RowConfig::all(lw.size(), s)) {
    out.push_back(ztop_oracle(cfg, lw, bounds) * zbot_oracle(cfg, lw, bounds) / z);
  }
  return out;
}

/// Boundary one-point function H_N^{(r)}, the s = 1 row probability.
template <class F>
F boundary_H(std::size_t n, std::size_t r, const VertexWeights<F>& w, const OracleBounds& bounds = {}) {
  if (r < 1 || r > n) throw DomainError("boundary position r must lie in 1..N");
  return row_prob_oracle(RowConfig(n, {r}), LatticeWeights<F>::homogeneous(w, n), bounds);
}

/// Coefficients H_N^{(1)}..H_N^{(N)} of h_N(z) = sum_r H_N^{(r)} z^{r-1}.
template <class F>
std::vector<F> boundary_generating(std::size_t n, const VertexWeights<F>& w, const OracleBounds& bounds = {}) {
  return row_prob_table_oracle(1, LatticeWeights<F>::homogeneous(w, n), bounds);
}

/// Emptiness formation probability: sum of row-s probabilities with r_s <= r.
template <class F>
F efp_oracle(std::size_t r, std::size_t s, const LatticeWeights<F>& lw, const OracleBounds& bounds = {}) {
  const std::size_t n = lw.size();
  if (r < 1 || r > n || s < 1 || s > n) throw DomainError("EFP needs 1 <= r, s <= N");
  if (r < s) return F(0);
  F z = partition_qism(lw, bounds);
  if (ScalarTraits<F>::is_zero(z)) throw SingularError("partition function vanishes");
  F sum(0);
  for (const auto& cfg : RowConfig::all(n, s)) {
    if (cfg.position(s) > r) continue;
    sum += ztop_oracle(cfg, lw, bounds) * zbot_oracle(cfg, lw, bounds);
  }
  return sum / z;
}

}  // namespace sixv
