#pragma once

// Sparse multivariate polynomials over an exact or float coefficient field.
//
// Monomials are packed into a 64-bit word, eight bits per variable, with the
// first variable in the most significant byte. Integer comparison of packed
// words is then the lexicographic monomial order.

#include "sixv/algebra/scalar.hpp"
#include "sixv/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sixv {

using Monomial = std::uint64_t;
inline constexpr std::size_t kMaxVariables = 8;
inline constexpr unsigned kMaxExponent = 255;

namespace mono {

inline unsigned exponent(Monomial m, std::size_t var) {
  return static_cast<unsigned>((m >> (8 * (7 - var))) & 0xFFu);
}

inline Monomial unit(std::size_t var, unsigned e = 1) {
  if (e > kMaxExponent) throw DomainError("exponent exceeds 255");
  return static_cast<Monomial>(e) << (8 * (7 - var));
}

inline Monomial from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVariables) throw DomainError("too many variables");
  Monomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) m |= unit(i, exps[i]);
  return m;
}

inline Monomial multiply(Monomial a, Monomial b) {
  Monomial sum = a + b;
  // A carry out of any byte shows up as a flipped low bit of the next byte.
  if (sum < a || (((a ^ b ^ sum) & 0x0101010101010100ull) != 0)) {
    throw DomainError("monomial exponent overflow (max 255)");
  }
  return sum;
}

inline bool divides(Monomial divisor, Monomial m) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponent(divisor, i) > exponent(m, i)) return false;
  }
  return true;
}

/// Every exponent of m is at most the matching exponent of bound.
inline bool within(Monomial m, Monomial bound) { return divides(m, bound); }

inline Monomial divide(Monomial m, Monomial divisor) { return m - divisor; }

inline unsigned total_degree(Monomial m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) d += exponent(m, i);
  return d;
}

inline Monomial drop(Monomial m, std::size_t var) { return m & ~unit(var, 0xFF); }

}  // namespace mono

/// Ordered list of variable names shared by polynomials of one ring.
class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names) {
    if (names.size() > kMaxVariables) throw DomainError("at most 8 variables per ring");
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (names[i] == names[j]) throw DomainError("duplicate variable name " + names[i]);
      }
    }
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(names)));
  }

  /// Ring with variables prefix1..prefixN.
  static std::shared_ptr<const PolyRing> numbered(std::string_view prefix, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw DomainError("unknown variable '" + std::string(name) + "'");
  }

 private:
  explicit PolyRing(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

template <class F>
class MultiPoly {
 public:
  using Term = std::pair<Monomial, F>;

  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw DomainError("polynomial without a ring");
  }

  static MultiPoly constant(RingPtr ring, const F& c) {
    MultiPoly p(std::move(ring));
    if (!ScalarTraits<F>::is_zero(c)) p.terms_.emplace_back(Monomial{0}, c);
    return p;
  }

  static MultiPoly variable(RingPtr ring, std::size_t var) {
    if (var >= ring->size()) throw DomainError("variable index out of range");
    return term(std::move(ring), mono::unit(var), F(1));
  }

  static MultiPoly variable(RingPtr ring, std::string_view name) {
    std::size_t i = ring->require(name);
    return variable(std::move(ring), i);
  }

  static MultiPoly term(RingPtr ring, Monomial m, const F& c) {
    MultiPoly p(std::move(ring));
    if (!ScalarTraits<F>::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first > y.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (ScalarTraits<F>::is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!ScalarTraits<F>::is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  F constant_term() const {
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return F(0);
  }

  F coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.first > key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return F(0);
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, mono::exponent(t.first, var));
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, mono::total_degree(t.first));
    return d;
  }

  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = combine(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = combine(*this, o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = multiply(*this, o, std::nullopt); }
  MultiPoly& operator*=(const F& c) {
    if (ScalarTraits<F>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  MultiPoly& operator/=(const F& c) {
    if (ScalarTraits<F>::is_zero(c)) throw SingularError("polynomial divided by zero");
    for (auto& t : terms_) t.second /= c;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, std::nullopt); }
  friend MultiPoly operator*(MultiPoly a, const F& c) { return a *= c; }
  friend MultiPoly operator*(const F& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const F& c) { return a /= c; }
  friend MultiPoly operator+(MultiPoly a, const F& c) { return a += constant(a.ring_, c); }
  friend MultiPoly operator-(MultiPoly a, const F& c) { return a -= constant(a.ring_, c); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return false;
      if (!(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(ring_, F(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Product keeping only monomials within the per-variable bound.
  MultiPoly mul_truncated(const MultiPoly& o, Monomial bound) const {
    return multiply(*this, o, bound);
  }

  MultiPoly truncated(Monomial bound) const {
    MultiPoly r(ring_);
    for (const auto& t : terms_) {
      if (mono::within(t.first, bound)) r.terms_.push_back(t);
    }
    return r;
  }

  MultiPoly truncated_total(unsigned max_degree) const {
    MultiPoly r(ring_);
    for (const auto& t : terms_) {
      if (mono::total_degree(t.first) <= max_degree) r.terms_.push_back(t);
    }
    return r;
  }

  /// Substitutes x_i -> x_i + shift_i, optionally truncating to a bound.
  MultiPoly shifted(std::span<const F> shift, std::optional<Monomial> bound = std::nullopt) const {
    if (shift.size() != ring_->size()) throw DomainError("shift vector has wrong length");
    std::vector<Term> current(terms_.begin(), terms_.end());
    for (std::size_t var = 0; var < shift.size(); ++var) {
      if (ScalarTraits<F>::is_zero(shift[var])) continue;
      std::vector<Term> next;
      for (const auto& [m, c] : current) {
        unsigned e = mono::exponent(m, var);
        if (e == 0) {
          next.emplace_back(m, c);
          continue;
        }
        Monomial rest = mono::drop(m, var);
        // (x + p)^e = sum_k C(e,k) p^(e-k) x^k
        Integer binom(1);
        for (unsigned k = 0; k <= e; ++k) {
          if (k > 0) binom = binom * (e - k + 1) / k;
          Monomial nm = rest | mono::unit(var, k);
          if (bound && mono::exponent(nm, var) > mono::exponent(*bound, var)) break;
          next.emplace_back(nm, c * ScalarTraits<F>::from_integer(binom) * power(shift[var], long(e - k)));
        }
      }
      current = std::move(next);
    }
    MultiPoly r = from_terms(ring_, std::move(current));
    return bound ? r.truncated(*bound) : r;
  }

  /// Substitutes x_i -> x_{target[i]} for every variable i.
  MultiPoly permuted(std::span<const std::size_t> target) const {
    if (target.size() != ring_->size()) throw DomainError("permutation has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm = 0;
      for (std::size_t i = 0; i < target.size(); ++i) {
        unsigned e = mono::exponent(m, i);
        if (e) nm = mono::multiply(nm, mono::unit(target[i], e));
      }
      out.emplace_back(nm, c);
    }
    return from_terms(ring_, std::move(out));
  }

  F evaluate(std::span<const F> point) const {
    if (point.size() != ring_->size()) throw DomainError("evaluation point has wrong length");
    std::vector<std::vector<F>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
      unsigned d = degree_in(i);
      powers[i].reserve(d + 1);
      powers[i].push_back(F(1));
      for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    F sum(0);
    for (const auto& [m, c] : terms_) {
      F term = c;
      for (std::size_t i = 0; i < point.size(); ++i) {
        unsigned e = mono::exponent(m, i);
        if (e) term *= powers[i][e];
      }
      sum += term;
    }
    return sum;
  }

  /// Replaces variable var by a constant, leaving a polynomial in the same ring.
  MultiPoly substitute(std::size_t var, const F& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      unsigned e = mono::exponent(m, var);
      out.emplace_back(mono::drop(m, var), e ? F(c * power(value, long(e))) : c);
    }
    return from_terms(ring_, std::move(out));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coeff = to_string(c);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (!first) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      first = false;
      std::string vars;
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        unsigned e = mono::exponent(m, i);
        if (!e) continue;
        if (!vars.empty()) vars += "*";
        vars += ring_->name(i);
        if (e > 1) vars += "^" + std::to_string(e);
      }
      if (vars.empty()) s += coeff;
      else if (coeff == "1") s += vars;
      else s += coeff + "*" + vars;
    }
    return s;
  }

 private:
  static void check_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring_ != b.ring_ && a.ring_->names() != b.ring_->names()) {
      throw DomainError("polynomials from different rings");
    }
  }

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_ring(a, b);
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? F(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        F c = subtract ? F(a.terms_[i].second - b.terms_[j].second) : F(a.terms_[i].second + b.terms_[j].second);
        if (!ScalarTraits<F>::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, std::optional<Monomial> bound) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    std::unordered_map<Monomial, F> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      if (bound && !mono::within(ma, *bound)) continue;
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = mono::multiply(ma, mb);
        if (bound && !mono::within(m, *bound)) continue;
        auto [it, inserted] = acc.try_emplace(m, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!ScalarTraits<F>::is_zero(c)) terms.emplace_back(m, std::move(c));
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    MultiPoly r(a.ring_);
    r.terms_ = std::move(terms);
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;  // strictly decreasing monomials, no zero coefficients
};

/// Exact quotient p / q. Throws NotDivisibleError when q does not divide p.
template <class F>
MultiPoly<F> divide_exact(const MultiPoly<F>& p, const MultiPoly<F>& q) {
  if (q.is_zero()) throw SingularError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = q.leading_term();
  // Inexact coefficients: remainders below tolerance times the largest
  // coefficient of p count as zero.
  F scale(0);
  if constexpr (!ScalarTraits<F>::exact) {
    for (const auto& term : p.terms()) scale = std::max<F>(scale, abs(term.second));
  }
  std::map<Monomial, F, std::greater<>> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  std::vector<typename MultiPoly<F>::Term> quotient;
  while (!rem.empty()) {
    auto [m, c] = *rem.begin();
    if (ScalarTraits<F>::negligible(c, scale)) {
      rem.erase(rem.begin());
      continue;
    }
    if (!mono::divides(lead_m, m)) {
      throw NotDivisibleError("polynomial is not divisible by " + q.str());
    }
    Monomial qm = mono::divide(m, lead_m);
    F qc = c / lead_c;
    quotient.emplace_back(qm, qc);
    for (const auto& [tm, tc] : q.terms()) {
      Monomial key = mono::multiply(tm, qm);
      auto it = rem.find(key);
      F delta = tc * qc;
      if (it == rem.end()) {
        rem.emplace(key, -delta);
      } else {
        it->second -= delta;
        if (ScalarTraits<F>::is_zero(it->second)) rem.erase(it);
      }
    }
  }
  return MultiPoly<F>::from_terms(p.ring(), std::move(quotient));
}

}  // namespace sixv
