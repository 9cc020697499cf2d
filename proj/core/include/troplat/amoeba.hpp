#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "troplat/lattice.hpp"
#include "troplat/polyhedral.hpp"

namespace troplat {

/// Sampled image of the unit polydisk under the evaluated matrix, taken
/// coordinatewise through log base |t|.
struct AmoebaCloud {
  double t = 0;
  int requested = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> points;
};

/// Log_t of y * A(t); nothing when a coordinate vanishes within the machine
/// guard (|z| < 1e-300).
std::optional<std::vector<double>> log_t_image(const LatticeMatrix& a, double t,
                                               const std::vector<std::complex<double>>& y);

/// Uniform y over the closed polydisk (per-coordinate rejection from the
/// square); deterministic under the seed. Degenerate samples are skipped, so
/// the cloud may hold fewer than `count` points.
AmoebaCloud sample_amoeba(const LatticeMatrix& a, double t, int count, std::uint64_t seed);

/// Euclidean distance from a point to the union of the full-index cells of
/// the complex (projection onto candidate active sets of each cell).
double distance_point_to_sigma(const std::vector<double>& point, const Complex& complex);

/// One-sided Hausdorff estimate: max over cloud points of the distance to
/// the sigma subcomplex.
double distance_to_sigma(const AmoebaCloud& cloud, const Complex& complex);

}  // namespace troplat
