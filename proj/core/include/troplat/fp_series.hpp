#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "troplat/puiseux.hpp"

namespace troplat {

/// Truncated Puiseux series over a prime field F_p: exponents lie in
/// (1/N)Z and only terms with exponent below trunc/N are stored. A series is
/// exact below its truncation bound and unknown at or above it.
class FpSeries {
 public:
  FpSeries(std::uint64_t p, std::int64_t N, std::int64_t trunc)
      : p_(p), N_(N), trunc_(trunc) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      throw Error(errc::bad_prime, "prime must be in [2, 2^31)");
  }

  std::uint64_t prime() const { return p_; }
  std::int64_t denominator() const { return N_; }
  std::int64_t trunc_index() const { return trunc_; }
  Rational trunc_bound() const { return Rational(Int(trunc_)) / Rational(Int(N_)); }

  bool known_zero() const { return terms_.empty(); }

  /// Exact valuation when a nonzero term exists below the truncation;
  /// nullopt means val >= trunc_bound() (possibly infinite).
  std::optional<Rational> val() const {
    if (terms_.empty()) return std::nullopt;
    return Rational(Int(terms_.begin()->first)) / Rational(Int(N_));
  }

  void add_term_index(std::int64_t k, std::uint64_t c);
  const std::map<std::int64_t, std::uint64_t>& terms() const { return terms_; }

  friend FpSeries operator+(const FpSeries& a, const FpSeries& b);
  friend FpSeries operator-(const FpSeries& a, const FpSeries& b);
  friend FpSeries operator*(const FpSeries& a, const FpSeries& b);
  FpSeries operator-() const;

  friend bool operator==(const FpSeries& a, const FpSeries& b) {
    return a.p_ == b.p_ && a.N_ == b.N_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const FpSeries& other) const;

  std::uint64_t p_;
  std::int64_t N_;
  std::int64_t trunc_;
  std::map<std::int64_t, std::uint64_t> terms_;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t p);

/// Reduces an exact rational-coefficient polynomial mod p. Errors if a
/// coefficient denominator is divisible by p, if an exponent does not lie in
/// (1/N)Z, or if a nonzero term lies at or above the truncation bound (the
/// reduction would silently lose it).
FpSeries reduce_mod_p(const PuiseuxPoly& poly, std::uint64_t p, std::int64_t N,
                      std::int64_t trunc);

}  // namespace troplat
