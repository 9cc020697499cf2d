#include "troplat/tropical.hpp"

#include <algorithm>

namespace troplat {

bool all_finite(const TropicalPoint& v) {
  return std::all_of(v.begin(), v.end(), [](const ExtRational& c) { return c.is_finite(); });
}

TropicalPoint make_point(std::vector<Rational> coords) {
  TropicalPoint out;
  out.reserve(coords.size());
  for (auto& c : coords) out.emplace_back(std::move(c));
  return out;
}

namespace {

// Subset sums v_J for all masks.
std::vector<Rational> subset_sums(const EntropyVector& h, const TropicalPoint& v) {
  if (static_cast<int>(v.size()) != h.n)
    throw Error(errc::domain_error, "point dimension mismatch");
  if (!all_finite(v))
    throw Error(errc::non_finite_point, "operation requires finite coordinates");
  std::vector<Rational> sums(std::size_t{1} << h.n, Rational(0));
  for (Mask m = 1; m < sums.size(); ++m) {
    Mask low = m & (~m + 1);
    int j = std::countr_zero(low);
    sums[m] = sums[m & ~low] + v[j].value();
  }
  return sums;
}

}  // namespace

PhiResult phi_eval(const EntropyVector& h, const TropicalPoint& v) {
  auto sums = subset_sums(h, v);
  PhiResult out;
  bool seen = false;
  for (Mask J = 0; J < sums.size(); ++J) {
    if (!h.h[J].is_finite()) continue;
    Rational value = sums[J] - h.h[J].value();
    if (!seen || value > out.value) {
      out.value = value;
      out.active.clear();
      seen = true;
    }
    if (value == out.value) out.active.push_back(J);
  }
  return out;
}

bool is_member(const EntropyVector& h, const TropicalPoint& v) {
  PhiResult r = phi_eval(h, v);
  Mask covered = 0;
  for (Mask J : r.active) covered |= J;
  return covered == full_mask(h.n);
}

bool is_member_directional(const EntropyVector& h, const TropicalPoint& v) {
  auto sums = subset_sums(h, v);
  std::vector<Rational> values;
  for (Mask J = 0; J < sums.size(); ++J)
    if (h.h[J].is_finite()) values.push_back(sums[J] - h.h[J].value());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rational step(1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    Rational gap = (values[i] - values[i - 1]) / 2;
    step = std::min(step, gap);
  }

  Rational phi = values.back();
  for (int j = 0; j < h.n; ++j) {
    TropicalPoint shifted = v;
    shifted[j] = shifted[j] + ExtRational(step);
    if (phi_eval(h, shifted).value != phi + step) return false;
  }
  return true;
}

GeneratorSet generators(const EntropyVector& h) {
  GeneratorSet out;
  Mask full = full_mask(h.n);
  for (Mask J = 0; J < full; ++J) {  // proper subsets only
    if (!h.h[J].is_finite()) continue;
    TropicalPoint u(h.n, ExtRational::infinity());
    for (int j = 0; j < h.n; ++j) {
      if (J & (Mask{1} << j)) continue;
      u[j] = h.h[J | (Mask{1} << j)] - h.h[J];
    }
    out.emplace(J, std::move(u));
  }
  return out;
}

TropicalPoint trop_add(const TropicalPoint& x, const TropicalPoint& y) {
  if (x.size() != y.size()) throw Error(errc::domain_error, "dimension mismatch");
  TropicalPoint out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = min(x[i], y[i]);
  return out;
}

TropicalPoint trop_scale(const ExtRational& lambda, const TropicalPoint& x) {
  if (lambda.is_finite() && lambda.value() < 0)
    throw Error(errc::domain_error, "tropical scalar must be nonnegative");
  TropicalPoint out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lambda + x[i];
  return out;
}

ReconstructResult reconstruct(const EntropyVector& h, const TropicalPoint& x) {
  if (!is_member(h, x)) throw Error(errc::not_member, "point is not in the tropical lattice");
  Rational phi = phi_eval(h, x).value;
  auto sums = subset_sums(h, x);

  ReconstructResult out;
  GeneratorSet gens = generators(h);
  for (const auto& [J, u] : gens)
    out.lambda[J] = ExtRational(phi) + h.h[J] - ExtRational(sums[J]);

  out.recombined.assign(h.n, ExtRational::infinity());
  for (const auto& [J, u] : gens) {
    const ExtRational& lam = out.lambda.at(J);
    for (int j = 0; j < h.n; ++j) out.recombined[j] = min(out.recombined[j], lam + u[j]);
  }

  out.ok = true;
  out.mismatch_coordinate = -1;
  for (int j = 0; j < h.n; ++j) {
    if (out.recombined[j] == x[j]) continue;
    out.ok = false;
    out.mismatch_coordinate = j;
    break;
  }
  return out;
}

std::map<Mask, ExtRational> plucker_from_entropy(const EntropyVector& h, int r) {
  if (r != h.rank())
    throw Error(errc::domain_error, "requested size differs from the encoded rank");
  std::map<Mask, ExtRational> out;
  for (Mask J = 0; J < (Mask{1} << h.n); ++J)
    if (popcount(J) == r) out.emplace(J, h.h[J]);
  return out;
}

bool trop_linear_member(const std::map<Mask, ExtRational>& plucker,
                        const std::vector<Rational>& w, int n) {
  if (plucker.empty()) throw Error(errc::domain_error, "empty Pluecker map");
  int r = popcount(plucker.begin()->first);
  bool any_finite = false;
  for (const auto& [J, p] : plucker) {
    if (popcount(J) != r) throw Error(errc::domain_error, "mixed subset sizes");
    any_finite = any_finite || p.is_finite();
  }
  if (!any_finite) throw Error(errc::domain_error, "Pluecker map has no finite value");
  if (static_cast<int>(w.size()) != n) throw Error(errc::domain_error, "point dimension mismatch");

  for (Mask S = 0; S < (Mask{1} << n); ++S) {
    if (popcount(S) != r + 1) continue;
    bool seen = false;
    Rational best;
    int hits = 0;
    for (int j : mask_indices(S)) {
      const ExtRational& p = plucker.at(S & ~(Mask{1} << j));
      if (!p.is_finite()) continue;
      Rational term = p.value() + w[j];
      if (!seen || term < best) {
        best = term;
        hits = 1;
        seen = true;
      } else if (term == best) {
        ++hits;
      }
    }
    if (seen && hits < 2) return false;
  }
  return true;
}

}  // namespace troplat
