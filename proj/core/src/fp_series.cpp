#include "troplat/fp_series.hpp"

namespace troplat {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(errc::bad_prime, "inverse of 0 mod p");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void FpSeries::check_compatible(const FpSeries& other) const {
  if (p_ != other.p_ || N_ != other.N_ || trunc_ != other.trunc_)
    throw Error(errc::domain_error, "mixed FpSeries contexts");
}

void FpSeries::add_term_index(std::int64_t k, std::uint64_t c) {
  c %= p_;
  if (c == 0 || k >= trunc_) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

FpSeries operator+(const FpSeries& a, const FpSeries& b) {
  a.check_compatible(b);
  FpSeries out = a;
  for (const auto& [k, c] : b.terms_) out.add_term_index(k, c);
  return out;
}

FpSeries operator-(const FpSeries& a, const FpSeries& b) {
  a.check_compatible(b);
  FpSeries out = a;
  for (const auto& [k, c] : b.terms_) out.add_term_index(k, a.p_ - c);
  return out;
}

FpSeries operator*(const FpSeries& a, const FpSeries& b) {
  a.check_compatible(b);
  FpSeries out(a.p_, a.N_, a.trunc_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka + kb >= a.trunc_) continue;
      out.add_term_index(ka + kb, ca * cb % a.p_);
    }
  return out;
}

FpSeries FpSeries::operator-() const {
  FpSeries out(p_, N_, trunc_);
  for (const auto& [k, c] : terms_) out.add_term_index(k, p_ - c);
  return out;
}

FpSeries reduce_mod_p(const PuiseuxPoly& poly, std::uint64_t p, std::int64_t N,
                      std::int64_t trunc) {
  if (!is_prime(p)) throw Error(errc::bad_prime, "p is not prime");
  FpSeries out(p, N, trunc);
  for (const auto& [e, c] : poly.terms()) {
    Rational idx = e * Rational(Int(N));
    if (denominator(idx) != 1)
      throw Error(errc::domain_error,
                  "exponent " + to_string(e) + " not in (1/" + std::to_string(N) + ")Z");
    Int k = numerator(idx);
    if (k >= trunc)
      throw Error(errc::truncation_too_small,
                  "term t^" + to_string(e) + " at or above the truncation bound");
    Int num = numerator(c) % p;
    if (num < 0) num += p;
    Int den = denominator(c) % p;
    if (den == 0) throw Error(errc::bad_prime, "coefficient denominator divisible by p");
    std::uint64_t cv = static_cast<std::uint64_t>(num) *
                       mod_inverse(static_cast<std::uint64_t>(den), p) % p;
    out.add_term_index(static_cast<std::int64_t>(k), cv);
  }
  return out;
}

}  // namespace troplat
