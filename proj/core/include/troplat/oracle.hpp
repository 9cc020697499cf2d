#pragma once

#include <cstdint>
#include <random>

#include "troplat/entropy.hpp"
#include "troplat/fp_series.hpp"
#include "troplat/tropical.hpp"

namespace troplat {

/// Configuration for random lattice-element sampling. Coefficients are drawn
/// uniformly from {-P,...,-1,1,...,P}; exponents from (1/N){0,...,N*emax}.
struct SampleConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  long coefficient_pool = 1024;
  int support_size = 2;
  long exponent_denominator = 1;
  long exponent_max = 3;
  int max_retries = 100;
};

struct FfConfig {
  std::uint64_t prime = 101;
  std::int64_t trunc = 10;  // exponent bound trunc/denom
  std::int64_t denom = 1;
  int trials = 100000;
  std::uint64_t seed = 1;
};

/// Deterministic per-trial generator stream.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Random valuation-ring element: finite support, val >= 0, nonzero.
PuiseuxPoly random_ok_element(std::mt19937_64& rng, const SampleConfig& cfg);

/// val(y A) for random y in O_K^r; coordinates hitting exact zero trigger a
/// bounded resample.
std::vector<TropicalPoint> sample_lattice_valuation(const LatticeMatrix& a,
                                                    const SampleConfig& cfg);

/// Left-multiplies by a product of elementary O_K operations so that the
/// listed columns become upper triangular with diagonal entries of the form
/// unit * t^alpha. Unit inverses are expanded as truncated geometric series;
/// eliminated entries are certified to have valuation at least the expansion
/// bound (they need not vanish identically).
LatticeMatrix hermite_reduce(const LatticeMatrix& a, const std::vector<int>& columns);

/// Exponent bound used by hermite_reduce's truncated inverses.
Rational hermite_precision_bound(const LatticeMatrix& a);

struct Witness {
  std::vector<PuiseuxPoly> element;       // x = coeffs . A, row vector in K^n
  std::vector<PuiseuxPoly> coefficients;  // in O_K
  TropicalPoint valuation;
};

/// Lattice element with val(x) = u_J, built exactly: kernel vectors of the
/// J-columns via signed minors kill the J coordinates identically, and a
/// random combination over all (|J|+1)-row supports attains the minimal
/// valuation off J. Retries draw fresh coefficients.
Witness witness_for_generator(const LatticeMatrix& a, Mask J, const SampleConfig& cfg);

struct SurvivalPoint {
  double empirical = 0;
  double exact = 0;
  Rational phi;
  int trials = 0;
};

/// Monte Carlo estimate of the mass of { x : val(x) >= v } under the
/// normalized Haar measure of the mod-p lattice, paired with the exact value
/// p^(-phi(v)). Sampling draws i.i.d. uniform F_p coefficients on every
/// truncated slot.
SurvivalPoint ff_survival(const LatticeMatrix& a, const std::vector<Rational>& v,
                          const FfConfig& cfg);

/// Number of trials whose valuation equals v exactly (all coordinates).
int ff_exact_valuation_count(const LatticeMatrix& a, const std::vector<Rational>& v,
                             const FfConfig& cfg);

/// Entropy vector of the mod-p reduction; errors when the truncation cannot
/// certify a needed minor valuation.
EntropyVector entropy_mod_p(const LatticeMatrix& a, const FfConfig& cfg);

}  // namespace troplat
