#include "sixv/algebra/quadratic.hpp"

#include "sixv/error.hpp"

namespace sixv {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

QuadraticField::QuadraticField(Rational d) : d_(std::move(d)), root_(rational_sqrt(d_)) {}

std::shared_ptr<const QuadraticField> QuadraticField::make(const Rational& d) {
  return std::shared_ptr<const QuadraticField>(new QuadraticField(d));
}

QuadraticNumber QuadraticField::element(const Rational& x, const Rational& y) const {
  return QuadraticNumber(x, y, shared_from_this());
}

QuadraticNumber::QuadraticNumber(Rational x, Rational y, std::shared_ptr<const QuadraticField> field)
    : x_(std::move(x)), y_(std::move(y)), field_(std::move(field)) {
  reduce();
}

void QuadraticNumber::reduce() {
  if (field_ && field_->rational_root() && y_ != 0) {
    x_ += y_ * *field_->rational_root();
    y_ = 0;
  }
}

void QuadraticNumber::check_same_field(const QuadraticNumber& o) const {
  if (!field_ || !o.field_) throw DomainError("quadratic number without a field");
  if (field_ != o.field_ && field_->radicand() != o.field_->radicand()) {
    throw DomainError("mixing elements of different quadratic fields");
  }
}

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-x_, -y_, field_); }

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  check_same_field(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  check_same_field(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  check_same_field(o);
  Rational nx = x_ * o.x_ + y_ * o.y_ * field_->radicand();
  Rational ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

QuadraticNumber QuadraticNumber::inverse() const {
  Rational norm = x_ * x_ - y_ * y_ * field_->radicand();
  if (norm == 0) throw SingularError("division by zero in quadratic field");
  return QuadraticNumber(x_ / norm, -y_ / norm, field_);
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

std::string QuadraticNumber::str() const {
  if (y_ == 0) return to_string(x_);
  return to_string(x_) + " + (" + to_string(y_) + ")*sqrt(" + to_string(field_->radicand()) + ")";
}

}  // namespace sixv
