#include "troplat/measure.hpp"

#include <cmath>
#include <random>

#include "troplat/oracle.hpp"

namespace troplat {

double phi_float(const EntropyVector& h, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.n)
    throw Error(errc::domain_error, "point dimension mismatch");
  std::vector<double> sums(std::size_t{1} << h.n, 0.0);
  for (Mask m = 1; m < sums.size(); ++m) {
    Mask low = m & (~m + 1);
    sums[m] = sums[m & ~low] + x[std::countr_zero(low)];
  }
  double best = -std::numeric_limits<double>::infinity();
  for (Mask J = 0; J < sums.size(); ++J) {
    if (!h.h[J].is_finite()) continue;
    best = std::max(best, sums[J] - to_double(h.h[J].value()));
  }
  return best;
}

double survival_q(const SurvivalSpec& s, std::span<const double> x) {
  return std::exp(-s.alpha * phi_float(s.h, x));
}

double cube_mass(const SurvivalSpec& s, std::span<const double> u, std::span<const double> v) {
  const int n = s.h.n;
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw Error(errc::domain_error, "corner dimension mismatch");
  for (int i = 0; i < n; ++i)
    if (!(u[i] < v[i]))
      throw Error(errc::domain_error, "need u < v componentwise");

  double sum = 0, comp = 0;  // Kahan: 2^n near-cancelling corner terms
  std::vector<double> corner(n);
  for (Mask w = 0; w < (Mask{1} << n); ++w) {
    for (int i = 0; i < n; ++i) corner[i] = (w & (Mask{1} << i)) ? v[i] : u[i];
    double term = survival_q(s, corner);
    if (popcount(w) % 2 != 0) term = -term;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ScanResult positivity_scan(const SurvivalSpec& s, int trials, double radius,
                           std::uint64_t seed) {
  if (trials < 1) throw Error(errc::domain_error, "need at least one cube");
  const int n = s.h.n;
  ScanResult out;
  out.cubes = trials;
  out.min_mass = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    // dyadic corners: k/64 within [-radius, radius]
    long grid = std::lround(radius * 64);
    std::uniform_int_distribution<long> pick(-grid, grid);
    std::vector<double> u(n), v(n);
    for (int i = 0; i < n; ++i) {
      long a = pick(rng), b = pick(rng);
      while (a == b) b = pick(rng);
      u[i] = std::min(a, b) / 64.0;
      v[i] = std::max(a, b) / 64.0;
    }
    double mass = cube_mass(s, u, v);
    if (mass < out.min_mass) {
      out.min_mass = mass;
      out.u = u;
      out.v = v;
    }
  }
  return out;
}

NegativeCube find_negative_cube_n2(const EntropyVector& h, double alpha) {
  if (h.n != 2) throw Error(errc::domain_error, "construction requires n = 2");
  for (Mask J = 1; J < 4; ++J)
    if (!h.h[J].is_finite())
      throw Error(errc::domain_error, "construction requires finite entries");
  Rational h1 = h.h[1].value(), h2 = h.h[2].value(), h12 = h.h[3].value();
  Rational gap = h12 - h1 - h2;
  if (gap >= 0)
    throw Error(errc::domain_error, "h is supermodular: no negative cube exists");

  // After the normalization x_i -> x_i - h_i, the witness cube has corners
  // (gap, gap) and (0, 0); shift back to the original coordinates.
  NegativeCube out;
  out.u = {to_double(gap + h1), to_double(gap + h2)};
  out.v = {to_double(h1), to_double(h2)};
  SurvivalSpec spec{h, alpha};
  out.mass = cube_mass(spec, out.u, out.v);
  return out;
}

double projected_density(ProjectedFamily family, double alpha, std::span<const double> point) {
  switch (family) {
    case ProjectedFamily::MixtureAtomLaplace: {
      if (point.size() != 1) throw Error(errc::domain_error, "mixture density is on R");
      return alpha * std::exp(-alpha) / 2 * std::exp(-alpha * std::fabs(point[0]));
    }
    case ProjectedFamily::PlaneExponential: {
      if (point.size() != 2) throw Error(errc::domain_error, "plane density is on R^2");
      double u = point[0], w = point[1];
      double m = std::max({u + w, w - 2 * u, u - 2 * w});
      return alpha * alpha / 3 * std::exp(-alpha * m);
    }
    case ProjectedFamily::ThreeRayLine: {
      if (point.size() != 1 || point[0] < 0)
        throw Error(errc::domain_error, "ray density needs a parameter t >= 0");
      return alpha / 3 * std::exp(-alpha * point[0]);
    }
  }
  throw Error(errc::domain_error, "unknown density family");
}

double projected_atom_mass(ProjectedFamily family, double alpha) {
  if (family == ProjectedFamily::MixtureAtomLaplace) return 1.0 - std::exp(-alpha);
  return 0.0;
}

}  // namespace troplat
