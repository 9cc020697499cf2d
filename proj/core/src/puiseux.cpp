#include "troplat/puiseux.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace troplat {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(errc::parse_error,
                what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }
};

Int parse_digits(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return Int(c.text.substr(start, c.pos - start));
}

Int parse_int(Cursor& c) {
  bool neg = c.accept('-');
  Int v = parse_digits(c);
  return neg ? -v : v;
}

Rational parse_ratio(Cursor& c, bool allow_sign) {
  Int num = allow_sign ? parse_int(c) : parse_digits(c);
  if (c.accept('/')) {
    Int den = parse_digits(c);
    if (den == 0) c.fail("zero denominator");
    return Rational(num) / Rational(den);
  }
  return Rational(num);
}

Rational parse_exponent(Cursor& c) {
  if (c.accept('(')) {
    Rational e = parse_ratio(c, true);
    c.expect(')');
    return e;
  }
  return parse_ratio(c, true);
}

// term := coeff ['*' tpow] | tpow, returned with sign applied.
void parse_term(Cursor& c, bool negative, PuiseuxPoly& out) {
  Rational coeff(1);
  Rational expo(0);
  if (c.peek() == 't') {
    ++c.pos;
    if (c.accept('^')) expo = parse_exponent(c);
    else expo = 1;
  } else {
    coeff = parse_ratio(c, false);
    if (c.accept('*')) {
      if (c.peek() != 't') c.fail("expected 't'");
      ++c.pos;
      if (c.accept('^')) expo = parse_exponent(c);
      else expo = 1;
    }
  }
  out.add_term(expo, negative ? -coeff : coeff);
}

std::string exponent_string(const Rational& e) {
  if (denominator(e) == 1) return numerator(e).str();
  return "(" + to_string(e) + ")";
}

}  // namespace

PuiseuxPoly parse_puiseux(const std::string& text) {
  Cursor c{text};
  PuiseuxPoly out;
  bool negative = c.accept('-');
  parse_term(c, negative, out);
  while (!c.eof()) {
    if (c.accept('+')) negative = false;
    else if (c.accept('-')) negative = true;
    else c.fail("expected '+' or '-'");
    parse_term(c, negative, out);
  }
  return out;
}

std::string to_string(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = c;
    if (a < 0) {
      out += '-';
      a = -a;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (e == 0) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += (e == 1) ? "t" : "t^" + exponent_string(e);
    }
  }
  return out;
}

double PuiseuxPoly::eval_at(double t) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms()) acc += to_double(c) * std::pow(t, to_double(e));
  return acc;
}

Rational parse_rational(const std::string& text) {
  Cursor c{text};
  Rational r = parse_ratio(c, true);
  if (!c.eof()) c.fail("trailing characters");
  return r;
}

ExtRational parse_ext_rational(const std::string& text) {
  Cursor probe{text};
  probe.skip_ws();
  if (text.compare(probe.pos, 3, "inf") == 0) return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

PuiseuxPoly inverse_truncated(const PuiseuxPoly& f, const Rational& bound) {
  if (f.is_zero()) throw Error(errc::domain_error, "inverse of zero");
  const Rational a = f.val().value();
  const Rational c = f.leading_coeff();
  // f = c t^a (1 + u) with val(u) > 0.
  PuiseuxPoly u = f.shifted(-a) * PuiseuxPoly(Rational(1) / c) - PuiseuxPoly::one();
  PuiseuxPoly sum = PuiseuxPoly::one();
  PuiseuxPoly power = PuiseuxPoly::one();
  while (true) {
    power = (power * (-u)).truncated(bound);
    if (power.is_zero()) break;
    sum += power;
  }
  return (sum.truncated(bound) * PuiseuxPoly(Rational(1) / c)).shifted(-a);
}

// ---- fraction arithmetic -------------------------------------------------

namespace {

// Dense polynomial over Q in an auxiliary variable, used for gcd reduction
// of fractions after rescaling exponents to integers.
using DensePoly = std::vector<Rational>;

void dense_trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly dense_rem(DensePoly a, const DensePoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    dense_trim(a);
  }
  return a;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    DensePoly r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

DensePoly dense_div_exact(DensePoly a, const DensePoly& b) {
  DensePoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    dense_trim(a);
  }
  return q;
}

Int exponent_lcm(const PuiseuxPoly& p, Int acc) {
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    acc = lcm(acc, denominator(e));
  }
  return acc;
}

// Rewrites p with exponents e -> (e - shift) * scale, which must be
// nonnegative integers, as a dense coefficient vector.
DensePoly to_dense(const PuiseuxPoly& p, const Rational& shift, const Int& scale) {
  DensePoly out;
  for (const auto& [e, c] : p.terms()) {
    Rational idx = (e - shift) * Rational(scale);
    std::size_t i = static_cast<std::size_t>(numerator(idx));
    if (out.size() <= i) out.resize(i + 1, Rational(0));
    out[i] = c;
  }
  return out;
}

PuiseuxPoly from_dense(const DensePoly& p, const Rational& shift, const Int& scale) {
  PuiseuxPoly out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out.add_term(shift + Rational(Int(i)) / Rational(scale), p[i]);
  return out;
}

}  // namespace

PuiseuxFraction::PuiseuxFraction(PuiseuxPoly num, PuiseuxPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(errc::domain_error, "fraction with zero denominator");
  normalize();
}

void PuiseuxFraction::normalize() {
  if (num_.is_zero()) {
    den_ = PuiseuxPoly::one();
    return;
  }
  // Cancel the polynomial gcd, computed in an integral-exponent rescaling.
  Int scale = exponent_lcm(den_, exponent_lcm(num_, Int(1)));
  Rational nshift = num_.val().value();
  Rational dshift = den_.val().value();
  DensePoly dn = to_dense(num_, nshift, scale);
  DensePoly dd = to_dense(den_, dshift, scale);
  DensePoly g = dense_gcd(dn, dd);
  if (g.size() > 1) {
    dn = dense_div_exact(std::move(dn), g);
    dd = dense_div_exact(std::move(dd), g);
    num_ = from_dense(dn, nshift, scale);
    den_ = from_dense(dd, dshift, scale);
  }
  // Push the denominator's monomial content into the numerator.
  Rational dval = den_.val().value();
  Rational dlead = den_.leading_coeff();
  den_ = den_.shifted(-dval) * PuiseuxPoly(Rational(1) / dlead);
  num_ = num_.shifted(-dval) * PuiseuxPoly(Rational(1) / dlead);
}

PuiseuxPoly PuiseuxFraction::to_poly() const {
  if (!is_polynomial())
    throw Error(errc::domain_error, "fraction has a non-monomial denominator");
  const auto& [e, c] = *den_.terms().begin();
  return num_.shifted(-e) * PuiseuxPoly(Rational(1) / c);
}

PuiseuxFraction operator+(const PuiseuxFraction& a, const PuiseuxFraction& b) {
  return PuiseuxFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
PuiseuxFraction operator-(const PuiseuxFraction& a, const PuiseuxFraction& b) {
  return PuiseuxFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
PuiseuxFraction operator*(const PuiseuxFraction& a, const PuiseuxFraction& b) {
  return PuiseuxFraction(a.num_ * b.num_, a.den_ * b.den_);
}
PuiseuxFraction operator/(const PuiseuxFraction& a, const PuiseuxFraction& b) {
  if (b.is_zero()) throw Error(errc::domain_error, "division by zero fraction");
  return PuiseuxFraction(a.num_ * b.den_, a.den_ * b.num_);
}
PuiseuxFraction PuiseuxFraction::operator-() const {
  PuiseuxFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string to_string(const PuiseuxFraction& f) {
  if (f.is_polynomial()) return to_string(f.to_poly());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace troplat
