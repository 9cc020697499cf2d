#pragma once

#include <map>
#include <string>

#include "troplat/rational.hpp"

namespace troplat {

/// Finite formal sum of rational-coefficient terms with rational exponents
/// of t. Terms are stored sorted by ascending exponent; zero coefficients are
/// never kept, so the valuation is the first key (or infinity for 0).
class PuiseuxPoly {
 public:
  using TermMap = std::map<Rational, Rational>;

  PuiseuxPoly() = default;
  explicit PuiseuxPoly(const Rational& constant) {
    if (constant != 0) terms_[Rational(0)] = constant;
  }

  static PuiseuxPoly zero() { return PuiseuxPoly(); }
  static PuiseuxPoly one() { return PuiseuxPoly(Rational(1)); }

  /// c * t^e
  static PuiseuxPoly monomial(const Rational& c, const Rational& e) {
    PuiseuxPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExtRational val() const {
    if (terms_.empty()) return ExtRational::infinity();
    return ExtRational(terms_.begin()->first);
  }

  /// Coefficient of t^e (0 when absent).
  Rational coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational leading_coeff() const {
    if (terms_.empty()) throw Error(errc::domain_error, "leading_coeff of 0");
    return terms_.begin()->second;
  }

  void add_term(const Rational& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }

  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  PuiseuxPoly operator-() const {
    PuiseuxPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  PuiseuxPoly& operator+=(const PuiseuxPoly& b) { return *this = *this + b; }
  PuiseuxPoly& operator-=(const PuiseuxPoly& b) { return *this = *this - b; }
  PuiseuxPoly& operator*=(const PuiseuxPoly& b) { return *this = *this * b; }

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.terms_ < b.terms_;
  }

  /// Multiplies by t^e.
  PuiseuxPoly shifted(const Rational& e) const {
    PuiseuxPoly out;
    for (const auto& [ee, c] : terms_) out.terms_[ee + e] = c;
    return out;
  }

  /// Drops every term with exponent >= bound.
  PuiseuxPoly truncated(const Rational& bound) const {
    PuiseuxPoly out;
    for (const auto& [e, c] : terms_) {
      if (e >= bound) break;
      out.terms_[e] = c;
    }
    return out;
  }

  /// Evaluates at a real t > 0 in double precision.
  double eval_at(double t) const;

 private:
  TermMap terms_;
};

/// Canonical form: ascending exponents, no spaces, e.g. "3*t+t^3-2*t^(1/2)".
std::string to_string(const PuiseuxPoly& p);

/// Parses the expression grammar
///   series := ['-'] term (('+'|'-') term)*
///   term   := coeff ['*' tpow] | tpow
///   tpow   := 't' ['^' expnt]
///   expnt  := int | int '/' posint | '(' int '/' posint ')'
///   coeff  := int | int '/' posint
/// Whitespace is ignored. Errors carry the offending position.
PuiseuxPoly parse_puiseux(const std::string& text);

/// Quotient of Puiseux polynomials, normalized so the denominator has
/// valuation 0, leading coefficient 1, and shares no polynomial factor with
/// the numerator.
class PuiseuxFraction {
 public:
  PuiseuxFraction() : num_(), den_(PuiseuxPoly::one()) {}
  PuiseuxFraction(PuiseuxPoly p) : num_(std::move(p)), den_(PuiseuxPoly::one()) {}
  PuiseuxFraction(PuiseuxPoly num, PuiseuxPoly den);

  const PuiseuxPoly& num() const { return num_; }
  const PuiseuxPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Is the denominator trivial (a monomial) after reduction?
  bool is_polynomial() const { return den_.terms().size() == 1; }

  /// Exact conversion; requires is_polynomial().
  PuiseuxPoly to_poly() const;

  ExtRational val() const { return num_.val() - den_.val(); }

  friend PuiseuxFraction operator+(const PuiseuxFraction& a, const PuiseuxFraction& b);
  friend PuiseuxFraction operator-(const PuiseuxFraction& a, const PuiseuxFraction& b);
  friend PuiseuxFraction operator*(const PuiseuxFraction& a, const PuiseuxFraction& b);
  friend PuiseuxFraction operator/(const PuiseuxFraction& a, const PuiseuxFraction& b);
  PuiseuxFraction operator-() const;

  friend bool operator==(const PuiseuxFraction& a, const PuiseuxFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  PuiseuxPoly num_, den_;
};

std::string to_string(const PuiseuxFraction& f);

/// Truncated multiplicative inverse of a nonzero f: the unique Laurent-style
/// expansion g with f*g = 1 + O(t^(val(f)+bound)), all exponents of g below
/// -val(f)+bound.
PuiseuxPoly inverse_truncated(const PuiseuxPoly& f, const Rational& bound);

}  // namespace troplat
