#pragma once

// Quotients of sparse polynomials with the denominator kept as a list of
// monic factors with multiplicities. Sums use the factor-wise LCM.

#include "sixv/algebra/multipoly.hpp"

#include <vector>

namespace sixv {

template <class F>
class RationalFn {
 public:
  using Poly = MultiPoly<F>;

  struct Factor {
    Poly poly;
    unsigned multiplicity;
  };

  explicit RationalFn(Poly numerator) : num_(std::move(numerator)) {}

  RationalFn(Poly numerator, std::vector<Factor> denominator)
      : num_(std::move(numerator)) {
    for (auto& f : denominator) absorb(std::move(f.poly), f.multiplicity);
    if (num_.is_zero()) den_.clear();
  }

  static RationalFn quotient(Poly numerator, Poly denominator) {
    std::vector<Factor> den;
    den.push_back({std::move(denominator), 1});
    return RationalFn(std::move(numerator), std::move(den));
  }

  static RationalFn constant(RingPtr ring, const F& c) { return RationalFn(Poly::constant(std::move(ring), c)); }

  const RingPtr& ring() const { return num_.ring(); }
  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  /// Expanded denominator polynomial.
  Poly denominator() const {
    Poly d = Poly::constant(ring(), F(1));
    for (const auto& f : den_) d *= f.poly.pow(f.multiplicity);
    return d;
  }

  F evaluate(std::span<const F> point) const {
    F den(1);
    for (const auto& f : den_) {
      F v = f.poly.evaluate(point);
      if (ScalarTraits<F>::is_zero(v)) throw SingularError("rational function evaluated on its pole locus");
      den *= power(v, long(f.multiplicity));
    }
    return num_.evaluate(point) / den;
  }

  RationalFn permuted(std::span<const std::size_t> target) const {
    std::vector<Factor> den;
    den.reserve(den_.size());
    for (const auto& f : den_) den.push_back({f.poly.permuted(target), f.multiplicity});
    return RationalFn(num_.permuted(target), std::move(den));
  }

  RationalFn operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFn operator+(const RationalFn& x, const RationalFn& y) { return combine(x, y, false); }
  friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return combine(x, y, true); }

  friend RationalFn operator*(const RationalFn& x, const RationalFn& y) {
    RationalFn r(x.num_ * y.num_);
    if (r.num_.is_zero()) return r;
    r.den_ = x.den_;
    for (const auto& f : y.den_) r.absorb(f.poly, f.multiplicity);
    return r;
  }

  friend RationalFn operator/(const RationalFn& x, const RationalFn& y) {
    if (y.is_zero()) throw SingularError("rational function divided by zero");
    RationalFn inv(y.denominator());
    inv.absorb(y.num_, 1);
    return x * inv;
  }

  friend RationalFn operator*(RationalFn x, const F& c) {
    x.num_ *= c;
    if (x.num_.is_zero()) x.den_.clear();
    return x;
  }
  friend RationalFn operator*(const F& c, RationalFn x) { return std::move(x) * c; }
  friend RationalFn operator/(RationalFn x, const F& c) {
    x.num_ /= c;
    return x;
  }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  /// Cancels denominator factors that divide the numerator exactly.
  RationalFn reduced() const {
    RationalFn r(*this);
    for (auto it = r.den_.begin(); it != r.den_.end();) {
      while (it->multiplicity > 0) {
        try {
          r.num_ = divide_exact(r.num_, it->poly);
        } catch (const NotDivisibleError&) {
          break;
        }
        --it->multiplicity;
      }
      it = it->multiplicity == 0 ? r.den_.erase(it) : it + 1;
    }
    return r;
  }

  /// x == y as rational functions (cross multiplication).
  friend bool equivalent(const RationalFn& x, const RationalFn& y) {
    return x.num_ * y.denominator() == y.num_ * x.denominator();
  }

  std::string str() const {
    if (den_.empty()) return num_.str();
    std::string s = "(" + num_.str() + ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (i) s += "*";
      s += "(" + den_[i].poly.str() + ")";
      if (den_[i].multiplicity > 1) s += "^" + std::to_string(den_[i].multiplicity);
    }
    return s + ")";
  }

 private:
  // Makes the factor monic (leading coefficient 1) and merges it into den_.
  void absorb(Poly factor, unsigned multiplicity) {
    if (multiplicity == 0) return;
    if (factor.is_zero()) throw SingularError("zero denominator factor");
    F lead = factor.leading_term().second;
    num_ /= power(lead, long(multiplicity));
    if (factor.is_constant()) return;
    factor /= lead;
    for (auto& f : den_) {
      if (f.poly == factor) {
        f.multiplicity += multiplicity;
        return;
      }
    }
    den_.push_back({std::move(factor), multiplicity});
  }

  static RationalFn combine(const RationalFn& x, const RationalFn& y, bool subtract) {
    std::vector<Factor> lcm = x.den_;
    for (const auto& f : y.den_) {
      bool found = false;
      for (auto& g : lcm) {
        if (g.poly == f.poly) {
          g.multiplicity = std::max(g.multiplicity, f.multiplicity);
          found = true;
          break;
        }
      }
      if (!found) lcm.push_back(f);
    }
    auto scale = [&lcm](const RationalFn& r) {
      Poly n = r.num_;
      for (const auto& g : lcm) {
        unsigned have = 0;
        for (const auto& f : r.den_) {
          if (f.poly == g.poly) have = f.multiplicity;
        }
        if (g.multiplicity > have) n *= g.poly.pow(g.multiplicity - have);
      }
      return n;
    };
    Poly n = subtract ? Poly(scale(x) - scale(y)) : Poly(scale(x) + scale(y));
    RationalFn r(std::move(n));
    if (!r.num_.is_zero()) r.den_ = std::move(lcm);
    return r;
  }

  Poly num_;
  std::vector<Factor> den_;  // monic, pairwise distinct, non-constant
};

}  // namespace sixv
