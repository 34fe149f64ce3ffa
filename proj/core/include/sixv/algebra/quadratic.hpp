#pragma once

// Exact arithmetic in Q(sqrt(d)) for rational d.

#include "sixv/algebra/scalar.hpp"

#include <memory>
#include <optional>
#include <string>

namespace sixv {

class QuadraticField;

/// Element x + y * sqrt(d) of a fixed quadratic field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;

  const Rational& rational_part() const { return x_; }
  const Rational& radical_part() const { return y_; }
  const std::shared_ptr<const QuadraticField>& field() const { return field_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  QuadraticNumber inverse() const;
  std::string str() const;

 private:
  friend class QuadraticField;
  QuadraticNumber(Rational x, Rational y, std::shared_ptr<const QuadraticField> field);
  void check_same_field(const QuadraticNumber& o) const;
  void reduce();

  Rational x_{0};
  Rational y_{0};
  std::shared_ptr<const QuadraticField> field_;
};

/// Q(sqrt(d)). When d is a rational square the field collapses to Q: every
/// element is stored with zero radical part.
class QuadraticField : public std::enable_shared_from_this<QuadraticField> {
 public:
  static std::shared_ptr<const QuadraticField> make(const Rational& d);

  const Rational& radicand() const { return d_; }
  const std::optional<Rational>& rational_root() const { return root_; }

  QuadraticNumber element(const Rational& x, const Rational& y = Rational(0)) const;
  QuadraticNumber sqrt_d() const { return element(Rational(0), Rational(1)); }

 private:
  explicit QuadraticField(Rational d);
  Rational d_;
  std::optional<Rational> root_;
};

/// Exact square root of a nonnegative rational, when it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

template <>
struct ScalarTraits<QuadraticNumber> {
  static constexpr bool exact = true;
  static constexpr const char* name = "quadratic";
  static bool is_zero(const QuadraticNumber& x) { return x.is_zero(); }
  static bool equal(const QuadraticNumber& x, const QuadraticNumber& y) { return x == y; }
  static bool better_pivot(const QuadraticNumber& candidate, const QuadraticNumber& current) {
    return current.is_zero() && !candidate.is_zero();
  }
};

}  // namespace sixv
