#pragma once

// Truncated Taylor series c_0 + c_1 e + ... + c_K e^K.

#include "sixv/algebra/scalar.hpp"
#include "sixv/error.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace sixv {

template <class C>
class Jet {
 public:
  /// Zero jet of order K; `zero` supplies the coefficient type's zero value.
  Jet(std::size_t order, const C& zero) : c_(order + 1, zero) {}

  explicit Jet(std::vector<C> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw DomainError("jet needs at least one coefficient");
  }

  /// The jet of the constant `value`.
  static Jet constant(std::size_t order, const C& value, const C& zero) {
    Jet j(order, zero);
    j.c_[0] = value;
    return j;
  }

  /// The jet of x0 + e.
  static Jet identity(std::size_t order, const C& x0, const C& zero, const C& one) {
    Jet j = constant(order, x0, zero);
    if (order >= 1) j.c_[1] = one;
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<C>& coefficients() const { return c_; }

  Jet truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return Jet(std::vector<C>(c_.begin(), c_.begin() + order + 1));
  }

  Jet operator-() const {
    Jet r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Jet operator+(const Jet& x, const Jet& y) {
    std::size_t k = std::min(x.order(), y.order());
    Jet r = x.truncated(k);
    for (std::size_t i = 0; i <= k; ++i) r.c_[i] += y.c_[i];
    return r;
  }

  friend Jet operator-(const Jet& x, const Jet& y) {
    std::size_t k = std::min(x.order(), y.order());
    Jet r = x.truncated(k);
    for (std::size_t i = 0; i <= k; ++i) r.c_[i] -= y.c_[i];
    return r;
  }

  friend Jet operator*(const Jet& x, const Jet& y) {
    std::size_t k = std::min(x.order(), y.order());
    Jet r(k, x.c_[0] - x.c_[0]);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; i + j <= k; ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
    }
    return r;
  }

  friend Jet operator*(Jet x, const C& s) {
    for (auto& v : x.c_) v *= s;
    return x;
  }
  friend Jet operator*(const C& s, Jet x) { return std::move(x) * s; }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  /// 1/x given an inverse of the constant coefficient.
  Jet reciprocal(const C& inverse_c0) const {
    Jet r(order(), c_[0] - c_[0]);
    r.c_[0] = inverse_c0;
    for (std::size_t n = 1; n <= order(); ++n) {
      C acc = c_[1] * r.c_[n - 1];
      for (std::size_t i = 2; i <= n; ++i) acc += c_[i] * r.c_[n - i];
      r.c_[n] = -(acc * inverse_c0);
    }
    return r;
  }

  /// 1/x for coefficient fields.
  Jet reciprocal() const {
    if (c_[0] == c_[0] - c_[0]) throw SingularError("reciprocal of a jet with zero constant term");
    return reciprocal(C(1) / c_[0]);
  }

  /// Jet of the derivative, one order lower.
  Jet derivative() const {
    if (order() == 0) return Jet(0, c_[0] - c_[0]);
    std::vector<C> d;
    d.reserve(order());
    for (std::size_t i = 1; i <= order(); ++i) d.push_back(c_[i] * C(static_cast<long>(i)));
    return Jet(std::move(d));
  }

  /// n-th derivative at the expansion point: n! c_n.
  C derivative_at(std::size_t n) const {
    return c_.at(n) * C(factorial(static_cast<unsigned>(n)));
  }

 private:
  std::vector<C> c_;
};

enum class TrigKind { sin, cos };

/// Jet of sin or cos(x + offset) about x = center.
Jet<Real> trig_jet(TrigKind kind, const Real& offset, const Real& center, std::size_t order);

/// Maclaurin jets of sin e and cos e with exact rational coefficients.
Jet<Rational> sin_series(std::size_t order);
Jet<Rational> cos_series(std::size_t order);

/// Lifts a rational jet into another coefficient type.
template <class C>
Jet<C> lift_jet(const Jet<Rational>& j, const std::function<C(const Rational&)>& embed) {
  std::vector<C> c;
  c.reserve(j.order() + 1);
  for (const auto& x : j.coefficients()) c.push_back(embed(x));
  return Jet<C>(std::move(c));
}

}  // namespace sixv
