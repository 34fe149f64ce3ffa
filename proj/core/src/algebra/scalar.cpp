#include "sixv/algebra/scalar.hpp"

#include "sixv/error.hpp"

#include <atomic>
#include <cctype>
#include <ios>

namespace sixv {

namespace {

std::atomic<unsigned> g_digits{kDefaultDigits};

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(kDefaultDigits); }
};
const PrecisionInit g_precision_init;

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  bool negative = s[0] == '-';
  if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
  // A leading zero would select octal in the string constructor.
  while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

unsigned working_digits() { return g_digits.load(); }

void set_working_digits(unsigned digits) {
  if (digits < 10) throw DomainError("working precision must be at least 10 digits");
  g_digits.store(digits);
  Real::default_precision(digits);
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(working_digits()) {
  set_working_digits(digits);
}

PrecisionScope::~PrecisionScope() { set_working_digits(saved_); }

Real default_tolerance() {
  Real ten(10);
  return pow(ten, -static_cast<long>(working_digits() / 2));
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer p = parse_integer(std::string_view(s).substr(0, slash));
    Integer q = parse_integer(std::string_view(s).substr(slash + 1));
    if (q == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(p, q);
  }

  // Decimal with optional exponent, converted exactly.
  long exponent = 0;
  std::string mantissa = s;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::string exp_text = s.substr(e + 1);
    if (!is_integer_text(exp_text)) throw DomainError("bad exponent in '" + s + "'");
    exponent = std::stol(exp_text);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    i = 1;
  }
  bool seen_point = false;
  long fraction_digits = 0;
  for (; i < mantissa.size(); ++i) {
    char ch = mantissa[i];
    if (ch == '.') {
      if (seen_point) throw DomainError("bad decimal '" + s + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else {
      throw DomainError("bad number '" + s + "'");
    }
  }
  if (digits.empty()) throw DomainError("bad number '" + s + "'");
  Rational value{parse_integer(digits)};
  value *= power(Rational(10), exponent - fraction_digits);
  return negative ? Rational(-value) : value;
}

Real parse_real(std::string_view text) {
  std::string s(text);
  // Validate through the exact parser so malformed input is rejected uniformly.
  (void)parse_rational(s);
  return Real(s);
}

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const Real& x) {
  return x.str(static_cast<std::streamsize>(working_digits()), std::ios_base::scientific);
}

Integer factorial(unsigned n) {
  Integer r(1);
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

bool approx_equal(const Real& x, const Real& y, const Real& tol) {
  Real scale = abs(x) > abs(y) ? abs(x) : abs(y);
  if (scale == 0) return true;
  return abs(x - y) <= tol * scale;
}

Real relative_difference(const Real& x, const Real& y) {
  Real scale = abs(x) > abs(y) ? abs(x) : abs(y);
  if (scale == 0) return Real(0);
  return abs(x - y) / scale;
}

}  // namespace sixv
