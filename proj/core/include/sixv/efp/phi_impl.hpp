#pragma once

// Phi_s(1,...,1; z) through w_j = 1 + c_j e: the antisymmetrized bracket is
// O(e^K), K = s(s-1)/2, and its e^K coefficient divided by
// s! prod_{j<k} (c_k - c_j) is the coinciding-point value.

#include "sixv/efp/efp_engine.hpp"

namespace sixv {
namespace detail {

template <class F>
std::vector<F> jet_mul(const std::vector<F>& x, const std::vector<F>& y) {
  std::vector<F> r(x.size(), F(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (ScalarTraits<F>::is_zero(x[i])) continue;
    for (std::size_t j = 0; i + j < x.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

// inv[j] is the inverse of 1 - z_1...z_{j+1} in the coefficient ring C.
template <class F, class C, class Mul>
C phi_epsilon(std::size_t s, const std::vector<F>& cs, const F& t, const F& delta, const std::vector<C>& inv,
              const C& one, Mul mul) {
  if (cs.size() != s) throw DomainError("need one epsilon direction per variable");
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = j + 1; k < s; ++k) {
      if (cs[j] == cs[k]) throw DomainError("epsilon directions must be distinct");
    }
  }
  const std::size_t kk = s * (s - 1) / 2;
  const std::size_t len = kk + 1;
  const C zero = one - one;
  C total = zero;
  std::vector<std::vector<F>> w(s, std::vector<F>(len, F(0)));
  for (const auto& perm : signed_permutations(s)) {
    for (std::size_t j = 0; j < s; ++j) {
      std::fill(w[j].begin(), w[j].end(), F(0));
      w[j][0] = F(1);
      if (len > 1) w[j][1] = cs[perm.image[j]];
    }
    std::vector<F> num(len, F(0));
    num[0] = F(1);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t k = j + 1; k < s; ++k) {
        std::vector<F> f = jet_mul(w[j], w[k]);
        for (std::size_t i = 0; i < len; ++i) f[i] = t * t * f[i] - F(2) * delta * t * w[j][i];
        f[0] += F(1);
        num = jet_mul(num, f);
      }
    }
    std::vector<C> acc(len, zero);
    for (std::size_t i = 0; i < len; ++i) acc[i] = one * num[i];
    std::vector<F> wprod(len, F(0));
    wprod[0] = F(1);
    for (std::size_t j = 0; j < s; ++j) {
      wprod = jet_mul(wprod, w[j]);
      // 1 / (wprod(e) - Z_j), constant term 1 - Z_j.
      std::vector<C> r(len, zero);
      r[0] = inv[j];
      for (std::size_t n = 1; n < len; ++n) {
        C sum = zero;
        for (std::size_t i = 1; i <= n; ++i) {
          if (!ScalarTraits<F>::is_zero(wprod[i])) sum = sum + r[n - i] * wprod[i];
        }
        r[n] = zero - mul(sum, inv[j]);
      }
      std::vector<C> next(len, zero);
      for (std::size_t a = 0; a < len; ++a) {
        for (std::size_t b = 0; a + b < len; ++b) next[a + b] = next[a + b] + mul(acc[a], r[b]);
      }
      acc = std::move(next);
    }
    total = perm.sign > 0 ? C(total + acc[kk]) : C(total - acc[kk]);
  }
  F scale = F(factorial(unsigned(s)));
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = j + 1; k < s; ++k) scale *= cs[k] - cs[j];
  }
  return total * F(F(1) / scale);
}

template <class F>
std::vector<F> default_directions(std::size_t s, std::vector<F> cs) {
  if (!cs.empty()) return cs;
  for (std::size_t j = 1; j <= s; ++j) cs.push_back(F(long(j)));
  return cs;
}

}  // namespace detail

template <class F>
F phi_s_at_ones(std::span<const F> z, const F& t, const F& delta, std::vector<F> cs) {
  const std::size_t s = z.size();
  cs = detail::default_directions(s, std::move(cs));
  std::vector<F> inv;
  F zp(1);
  for (std::size_t j = 0; j < s; ++j) {
    zp *= z[j];
    if (ScalarTraits<F>::is_zero(F(F(1) - zp))) throw SingularError("Phi_s at its pole locus z_1...z_j = 1");
    inv.push_back(F(1) / (F(1) - zp));
  }
  return detail::phi_epsilon<F, F>(s, cs, t, delta, inv, F(1), [](const F& x, const F& y) { return F(x * y); });
}

template <class F>
RationalFn<F> phi_s_at_ones_symbolic(std::size_t s, const F& t, const F& delta, std::vector<F> cs) {
  cs = detail::default_directions(s, std::move(cs));
  RingPtr ring = PolyRing::numbered("z", s);
  using P = MultiPoly<F>;
  using R = RationalFn<F>;
  std::vector<R> inv;
  P zp = P::constant(ring, F(1));
  for (std::size_t j = 0; j < s; ++j) {
    zp *= P::variable(ring, j);
    inv.push_back(R::quotient(P::constant(ring, F(1)), P::constant(ring, F(1)) - zp));
  }
  return detail::phi_epsilon<F, R>(s, cs, t, delta, inv, R::constant(ring, F(1)),
                                   [](const R& x, const R& y) { return x * y; });
}

template <class F>
MultiPoly<F> EfpEngine<F>::phi_series(std::size_t s, Monomial bound) const {
  RingPtr ring = PolyRing::numbered("z", s);
  using P = MultiPoly<F>;
  std::vector<P> inv;
  P zp = P::constant(ring, F(1));
  for (std::size_t j = 0; j < s; ++j) {
    zp *= P::variable(ring, j);
    inv.push_back(inverse_series(P::constant(ring, F(1)) - zp, bound));
  }
  std::vector<F> cs = detail::default_directions<F>(s, {});
  return detail::phi_epsilon<F, P>(s, cs, row_.t(), row_.delta(), inv, P::constant(ring, F(1)),
                                   [bound](const P& x, const P& y) { return x.mul_truncated(y, bound); });
}

}  // namespace sixv
