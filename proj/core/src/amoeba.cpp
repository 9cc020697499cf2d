#include "troplat/amoeba.hpp"

#include <cmath>
#include <random>

#include "troplat/oracle.hpp"

namespace troplat {

std::optional<std::vector<double>> log_t_image(const LatticeMatrix& a, double t,
                                               const std::vector<std::complex<double>>& y) {
  if (t <= 0 || t >= 1) throw Error(errc::domain_error, "need 0 < t < 1");
  if (static_cast<int>(y.size()) != a.rows())
    throw Error(errc::domain_error, "polydisk point dimension mismatch");
  const double log_t = std::log(t);
  std::vector<double> out(a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    std::complex<double> z = 0;
    for (int i = 0; i < a.rows(); ++i) z += y[i] * a.at(i, j).eval_at(t);
    double mag = std::abs(z);
    if (mag < 1e-300) return std::nullopt;
    out[j] = std::log(mag) / log_t;
  }
  return out;
}

AmoebaCloud sample_amoeba(const LatticeMatrix& a, double t, int count, std::uint64_t seed) {
  AmoebaCloud cloud;
  cloud.t = t;
  cloud.requested = count;
  cloud.seed = seed;
  for (int s = 0; s < count; ++s) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(s));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<std::complex<double>> y(a.rows());
    for (auto& c : y) {
      double re, im;
      do {
        re = unif(rng);
        im = unif(rng);
      } while (re * re + im * im > 1.0);
      c = {re, im};
    }
    auto p = log_t_image(a, t, y);
    if (p) cloud.points.push_back(std::move(*p));
  }
  return cloud;
}

namespace {

// Projection of p on the affine subspace spanned by the rows of c (c x = d),
// via the KKT system solved with partial-pivot elimination. Empty when the
// chosen rows are numerically dependent.
std::optional<std::vector<double>> project_affine(const std::vector<double>& p,
                                                  const std::vector<std::vector<double>>& c,
                                                  const std::vector<double>& d) {
  const std::size_t m = c.size();
  const std::size_t n = p.size();
  if (m == 0) return p;
  // Solve (C C^T) mu = C p - d, x = p - C^T mu.
  std::vector<std::vector<double>> g(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) g[i][j] += c[i][k] * c[j][k];
    for (std::size_t k = 0; k < n; ++k) g[i][m] += c[i][k] * p[k];
    g[i][m] -= d[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < m; ++i)
      if (std::fabs(g[i][col]) > std::fabs(g[piv][col])) piv = i;
    if (std::fabs(g[piv][col]) < 1e-12) return std::nullopt;
    std::swap(g[col], g[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col) continue;
      double f = g[i][col] / g[col][col];
      for (std::size_t j = col; j <= m; ++j) g[i][j] -= f * g[col][j];
    }
  }
  std::vector<double> x = p;
  for (std::size_t i = 0; i < m; ++i) {
    double mu = g[i][m] / g[i][i];
    for (std::size_t k = 0; k < n; ++k) x[k] -= c[i][k] * mu;
  }
  return x;
}

double point_to_cell(const std::vector<double>& p, const Cell& cell) {
  const int n = cell.hrep.n;
  std::vector<std::vector<double>> eq_a;
  std::vector<double> eq_b;
  for (const auto& [a, b] : cell.hrep.eq) {
    std::vector<double> row(n);
    for (int j = 0; j < n; ++j) row[j] = to_double(a[j]);
    eq_a.push_back(std::move(row));
    eq_b.push_back(to_double(b));
  }
  std::vector<std::vector<double>> in_a;
  std::vector<double> in_b;
  for (const auto& [a, b] : cell.hrep.ineq) {
    std::vector<double> row(n);
    for (int j = 0; j < n; ++j) row[j] = to_double(a[j]);
    in_a.push_back(std::move(row));
    in_b.push_back(to_double(b));
  }

  const int q = static_cast<int>(in_a.size());
  double best = std::numeric_limits<double>::infinity();
  // Candidate active sets: projections onto every <=n-subset of tight rows.
  for (Mask s = 0; s < (Mask{1} << q); ++s) {
    if (popcount(s) > n) continue;
    auto c = eq_a;
    auto d = eq_b;
    for (int k : mask_indices(s)) {
      c.push_back(in_a[k]);
      d.push_back(in_b[k]);
    }
    auto x = project_affine(p, c, d);
    if (!x) continue;
    bool feasible = true;
    for (int k = 0; k < q && feasible; ++k) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += in_a[k][j] * (*x)[j];
      feasible = lhs <= in_b[k] + 1e-9;
    }
    if (!feasible) continue;
    double dist2 = 0;
    for (int j = 0; j < n; ++j) dist2 += (p[j] - (*x)[j]) * (p[j] - (*x)[j]);
    best = std::min(best, std::sqrt(dist2));
  }
  return best;
}

}  // namespace

double distance_point_to_sigma(const std::vector<double>& point, const Complex& complex) {
  if (complex.sigma_ids.empty()) throw Error(errc::domain_error, "sigma subcomplex is empty");
  double best = std::numeric_limits<double>::infinity();
  for (int id : complex.sigma_ids) {
    const Cell& cell = complex.cells[id];
    // Faces are covered by the cells they bound.
    bool maximal = true;
    for (int other : complex.sigma_ids) {
      if (other == id) continue;
      const auto& ok = complex.cells[other].key;
      const auto& k = cell.key;
      if (ok.size() < k.size() && std::includes(k.begin(), k.end(), ok.begin(), ok.end())) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    best = std::min(best, point_to_cell(point, cell));
  }
  return best;
}

double distance_to_sigma(const AmoebaCloud& cloud, const Complex& complex) {
  double worst = 0;
  for (const auto& p : cloud.points)
    worst = std::max(worst, distance_point_to_sigma(p, complex));
  return worst;
}

}  // namespace troplat
