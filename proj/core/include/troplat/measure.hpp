#pragma once

#include <span>
#include <vector>

#include "troplat/entropy.hpp"

namespace troplat {

/// Candidate survival function exp(-alpha * phi_h) built from a (not
/// necessarily realizable) vector h with h_empty = 0.
struct SurvivalSpec {
  EntropyVector h;
  double alpha = 1.0;
};

/// phi_h at a float point: max over finite-h subsets of (x_J - h_J).
double phi_float(const EntropyVector& h, std::span<const double> x);

double survival_q(const SurvivalSpec& s, std::span<const double> x);

/// Signed corner sum of the survival function over the box [u, v]
/// (inclusion-exclusion; compensated summation).
double cube_mass(const SurvivalSpec& s, std::span<const double> u, std::span<const double> v);

struct ScanResult {
  double min_mass = 0;
  std::vector<double> u, v;  // cube attaining the minimum
  int cubes = 0;
};

/// Random rational cubes inside [-radius, radius]^n; reports the minimum
/// mass found. Purely observational.
ScanResult positivity_scan(const SurvivalSpec& s, int trials, double radius,
                           std::uint64_t seed);

struct NegativeCube {
  std::vector<double> u, v;
  double mass = 0;
};

/// For n = 2 and a strict supermodularity violation h_12 < h_1 + h_2, the
/// normalized corner construction yields a cube of negative mass
/// exp(alpha * (h_12 - h_1 - h_2)) - 1. Errors when h is supermodular.
NegativeCube find_negative_cube_n2(const EntropyVector& h, double alpha);

/// Closed-form projected measures of the three worked lattices.
enum class ProjectedFamily {
  MixtureAtomLaplace,  // R^2 lattice with one pair entry: atom + Laplace on R
  PlaneExponential,    // unit lattice in 3-space: smooth density on the plane
  ThreeRayLine,        // rank-2 lattice: exponential on each ray of a line
};

/// Continuous density at a point (1 coordinate for the mixture, 2 for the
/// plane, 1 ray parameter t >= 0 for the line).
double projected_density(ProjectedFamily family, double alpha, std::span<const double> point);

/// Mass of the atomic part (nonzero only for the mixture family).
double projected_atom_mass(ProjectedFamily family, double alpha);

}  // namespace troplat
