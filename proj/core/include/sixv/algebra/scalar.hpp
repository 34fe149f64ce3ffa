#pragma once

// Scalar backends: exact rationals (GMP) and configurable-precision floats (MPFR).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sixv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

/// Current working precision of Real in decimal digits.
unsigned working_digits();

/// Sets the working precision for Real values created afterwards.
void set_working_digits(unsigned digits);

/// Restores the previous working precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Relative tolerance 10^(-D/2) used for float-backend equality.
Real default_tolerance();

/// Parses "p/q", an integer, or a finite decimal ("-0.125", "3e-2") exactly.
Rational parse_rational(std::string_view text);

/// Parses a decimal string at the working precision.
Real parse_real(std::string_view text);

/// Lossless text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Scientific notation with the working number of significant digits.
std::string to_string(const Real& x);

Integer factorial(unsigned n);

/// True when |x - y| <= tol * max(|x|, |y|).
bool approx_equal(const Real& x, const Real& y, const Real& tol);
inline bool approx_equal(const Real& x, const Real& y) {
  return approx_equal(x, y, default_tolerance());
}

Real relative_difference(const Real& x, const Real& y);

/// Per-backend behaviour needed by the generic algorithms.
template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool equal(const Rational& x, const Rational& y) { return x == y; }
  static bool negligible(const Rational& x, const Rational&) { return x == 0; }
  // Pivot preference for elimination: any nonzero entry is exact.
  static bool better_pivot(const Rational& candidate, const Rational& current) {
    return current == 0 && candidate != 0;
  }
  static Rational from_integer(const Integer& n) { return Rational(n); }
};

template <>
struct ScalarTraits<Real> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(const Real& x) { return x == 0; }
  static bool equal(const Real& x, const Real& y) { return approx_equal(x, y); }
  /// x is roundoff left from cancelling quantities of size `scale`.
  static bool negligible(const Real& x, const Real& scale) { return abs(x) <= default_tolerance() * scale; }
  static bool better_pivot(const Real& candidate, const Real& current) {
    return abs(candidate) > abs(current);
  }
  static Real from_integer(const Integer& n) { return Real(n); }
};

template <class F>
F power(F base, long exponent) {
  if (exponent < 0) {
    base = F(1) / base;
    exponent = -exponent;
  }
  F result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace sixv
