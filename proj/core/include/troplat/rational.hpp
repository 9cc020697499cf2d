#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "troplat/error.hpp"

namespace troplat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q united with +infinity, ordered so that every rational is
/// below infinity. Addition absorbs infinity; subtracting a finite value
/// from infinity stays infinite.
class ExtRational {
 public:
  ExtRational() : finite_(true), value_(0) {}
  ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
  ExtRational(const Int& v) : finite_(true), value_(v) {}
  ExtRational(int v) : finite_(true), value_(v) {}

  static ExtRational infinity() {
    ExtRational e;
    e.finite_ = false;
    e.value_ = 0;
    return e;
  }

  bool is_finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw Error(errc::domain_error, "value() on infinity");
    return value_;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtRational(a.value_ + b.value_);
  }

  // a - b with b required finite; infinity - finite = infinity.
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b) {
    if (!b.finite_)
      throw Error(errc::domain_error, "cannot subtract infinity");
    if (!a.finite_) return infinity();
    return ExtRational(a.value_ - b.value_);
  }

  ExtRational operator-() const {
    if (!finite_) throw Error(errc::domain_error, "cannot negate infinity");
    return ExtRational(-value_);
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

  friend const ExtRational& min(const ExtRational& a, const ExtRational& b) {
    return b < a ? b : a;
  }
  friend const ExtRational& max(const ExtRational& a, const ExtRational& b) {
    return a < b ? b : a;
  }

 private:
  bool finite_;
  Rational value_;
};

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline std::string to_string(const ExtRational& e) {
  return e.is_finite() ? to_string(e.value()) : std::string("inf");
}

/// Parses "p", "p/q" or "inf"; q must be positive.
ExtRational parse_ext_rational(const std::string& text);
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace troplat
