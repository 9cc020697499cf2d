#include "troplat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace troplat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

PuiseuxPoly random_ok_element(std::mt19937_64& rng, const SampleConfig& cfg) {
  std::uniform_int_distribution<long> coeff(1, cfg.coefficient_pool);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<long> expo(0, cfg.exponent_max * cfg.exponent_denominator);
  PuiseuxPoly out;
  for (int k = 0; k < cfg.support_size; ++k) {
    Rational e = Rational(Int(expo(rng))) / Rational(Int(cfg.exponent_denominator));
    long c = coeff(rng) * (sign(rng) ? 1 : -1);
    // overwrite collisions so the draw stays nonzero
    out += PuiseuxPoly::monomial(Rational(Int(c)) - out.coeff(e), e);
  }
  return out;
}

std::vector<TropicalPoint> sample_lattice_valuation(const LatticeMatrix& a,
                                                    const SampleConfig& cfg) {
  std::vector<TropicalPoint> out;
  out.reserve(cfg.trials);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    bool done = false;
    for (int attempt = 0; attempt < cfg.max_retries && !done; ++attempt) {
      std::vector<PuiseuxPoly> y(a.rows());
      for (auto& p : y) p = random_ok_element(rng, cfg);
      TropicalPoint val(a.cols());
      bool degenerate = false;
      for (int j = 0; j < a.cols() && !degenerate; ++j) {
        PuiseuxPoly xj;
        for (int i = 0; i < a.rows(); ++i) xj += y[i] * a.at(i, j);
        if (xj.is_zero()) degenerate = true;
        else val[j] = xj.val();
      }
      if (!degenerate) {
        out.push_back(std::move(val));
        done = true;
      }
    }
    if (!done)
      throw Error(errc::retry_exhausted, "could not sample a nonzero-coordinate element");
  }
  return out;
}

Rational hermite_precision_bound(const LatticeMatrix& a) {
  Rational bound(0);
  EntropyVector h = entropy_vector(a);
  for (const auto& e : h.h)
    if (e.is_finite()) bound = std::max(bound, e.value());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [e, c] : a.at(i, j).terms()) bound = std::max(bound, e);
  return bound + 2;
}

LatticeMatrix hermite_reduce(const LatticeMatrix& a, const std::vector<int>& columns) {
  if (static_cast<int>(columns.size()) > a.rows())
    throw Error(errc::rank_deficient, "more pivot columns than rows");
  const Rational bound = hermite_precision_bound(a);
  LatticeMatrix m = a;
  int r = m.rows();
  for (int k = 0; k < static_cast<int>(columns.size()); ++k) {
    int col = columns[k];
    // Pivot: minimal valuation at or below row k, certified below the bound.
    int pivot = -1;
    for (int i = k; i < r; ++i) {
      const PuiseuxPoly& e = m.at(i, col);
      if (e.is_zero() || e.val().value() >= bound) continue;
      if (pivot < 0 || e.val() < m.at(pivot, col).val()) pivot = i;
    }
    if (pivot < 0)
      throw Error(errc::rank_deficient,
                  "pivot columns are rank deficient (no usable pivot in column " +
                      std::to_string(col + 1) + ")");
    if (pivot != k)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(k, j), m.at(pivot, j));

    for (int i = k + 1; i < r; ++i) {
      if (m.at(i, col).is_zero()) continue;
      // Expansion depth grows when the eliminated entry has negative
      // valuation, so the residual stays certified at `bound`.
      Rational depth = bound;
      const Rational entry_val = m.at(i, col).val().value();
      if (entry_val < 0) depth -= entry_val;
      PuiseuxPoly q = m.at(i, col) * inverse_truncated(m.at(k, col), depth);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) -= q * m.at(k, j);
      const ExtRational residual = m.at(i, col).val();
      if (residual.is_finite() && residual.value() < bound)
        throw Error(errc::truncation_too_small, "elimination residual below precision bound");
    }
  }
  return m;
}

Witness witness_for_generator(const LatticeMatrix& a, Mask J, const SampleConfig& cfg) {
  const int r = a.rows();
  const int n = a.cols();
  EntropyVector h = entropy_vector(a);
  if (!h.at(J).is_finite())
    throw Error(errc::domain_error, "subset has infinite entropy");
  const int d = popcount(J);

  // Target u_J.
  TropicalPoint target(n, ExtRational::infinity());
  for (int j = 0; j < n; ++j)
    if (!(J & (Mask{1} << j))) target[j] = h.at(J | (Mask{1} << j)) - h.at(J);

  Witness w;
  w.valuation = target;
  if (d == r) {  // no rows left over; u_J is the all-infinity point
    w.element.assign(n, PuiseuxPoly());
    w.coefficients.assign(r, PuiseuxPoly());
    return w;
  }

  DetTable dets(a);
  std::vector<Mask> supports;  // row subsets of size d+1
  for (Mask S = 0; S < (Mask{1} << r); ++S)
    if (popcount(S) == d + 1) supports.push_back(S);

  const Rational shift = -h.at(J).value();
  std::uniform_int_distribution<long> coeff(1, cfg.coefficient_pool);
  std::uniform_int_distribution<int> sign(0, 1);

  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    auto rng = trial_rng(cfg.seed, 0x9e00 + static_cast<std::uint64_t>(attempt));
    // c_i = sum over supports S of gamma_S * (-1)^{pos(i in S)} det(A_{S-i, J})
    std::vector<PuiseuxPoly> c(r);
    for (Mask S : supports) {
      long g = coeff(rng) * (sign(rng) ? 1 : -1);
      PuiseuxPoly gamma{Rational(Int(g))};
      auto rows = mask_indices(S);
      for (std::size_t pos = 0; pos < rows.size(); ++pos) {
        PuiseuxPoly term = gamma * dets.det(S & ~(Mask{1} << rows[pos]), J);
        if (pos % 2 != 0) term = -term;
        c[rows[pos]] += term;
      }
    }
    std::vector<PuiseuxPoly> x(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < r; ++i) x[j] += c[i] * a.at(i, j);

    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      ExtRational v = x[j].val() - ExtRational(h.at(J).value());
      ok = (v == target[j]);
    }
    if (!ok) continue;

    for (auto& p : x) p = p.shifted(shift);
    for (auto& p : c) {
      p = p.shifted(shift);
      if (!p.is_zero() && p.val().value() < 0)
        throw Error(errc::domain_error, "witness coefficients left the valuation ring");
    }
    w.element = std::move(x);
    w.coefficients = std::move(c);
    return w;
  }
  throw Error(errc::retry_exhausted, "no generic combination attained the target valuation");
}

// ---- finite-field sampling ------------------------------------------------

namespace {

struct FpMatrix {
  std::uint64_t p;
  std::int64_t N;
  std::int64_t ctx_trunc;   // working truncation index shared by all series
  std::int64_t cert_index;  // values below this index are exact
  int rows, cols;
  std::vector<FpSeries> entries;

  const FpSeries& at(int i, int j) const { return entries[i * cols + j]; }
};

// Entries with negative valuation widen the working truncation so that
// products remain exact below the requested bound.
FpMatrix reduce_matrix(const LatticeMatrix& a, const FfConfig& cfg) {
  if (!is_prime(cfg.prime)) throw Error(errc::bad_prime, "modulus is not prime");
  Rational min_exp(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero())
        min_exp = std::min(min_exp, a.at(i, j).val().value());
  Rational shift_r = -min_exp * Rational(Int(cfg.denom));
  if (denominator(shift_r) != 1)
    throw Error(errc::domain_error, "matrix exponents not in (1/N)Z");
  std::int64_t shift = static_cast<std::int64_t>(numerator(shift_r));

  FpMatrix m{cfg.prime,
             cfg.denom,
             cfg.trunc + (a.rows() + 1) * shift,
             cfg.trunc,
             a.rows(),
             a.cols(),
             {}};
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m.entries.push_back(reduce_mod_p(a.at(i, j), cfg.prime, cfg.denom, m.ctx_trunc));
  return m;
}

// Certified minor valuations: value when a nonzero coefficient appears below
// the truncation, "at least the bound" otherwise.
struct CertifiedVal {
  std::optional<Rational> exact;  // nullopt: >= cert bound (maybe infinite)
};

std::vector<FpSeries> random_truncated_row(const FpMatrix& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> unif(0, m.p - 1);
  std::vector<FpSeries> y;
  y.reserve(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    FpSeries s(m.p, m.N, m.ctx_trunc);
    for (std::int64_t k = 0; k < m.ctx_trunc; ++k) {
      std::uint64_t c = unif(rng);
      if (c) s.add_term_index(k, c);
    }
    y.push_back(std::move(s));
  }
  return y;
}

}  // namespace

EntropyVector entropy_mod_p(const LatticeMatrix& a, const FfConfig& cfg) {
  FpMatrix m = reduce_matrix(a, cfg);
  const Rational cert = Rational(Int(m.cert_index)) / Rational(Int(m.N));

  std::map<std::pair<Mask, Mask>, FpSeries> memo;
  auto det = [&](auto&& self, Mask rows, Mask cols) -> const FpSeries& {
    auto key = std::make_pair(rows, cols);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    FpSeries result(m.p, m.N, m.ctx_trunc);
    if (rows == 0) {
      result.add_term_index(0, 1);
    } else {
      int j = 31 - std::countl_zero(cols);
      Mask sub_cols = cols & ~(Mask{1} << j);
      auto row_idx = mask_indices(rows);
      int sz = static_cast<int>(row_idx.size());
      for (int k = 0; k < sz; ++k) {
        const FpSeries& entry = m.at(row_idx[k], j);
        if (entry.known_zero()) continue;
        Mask sub_rows = rows & ~(Mask{1} << row_idx[k]);
        FpSeries term = entry * self(self, sub_rows, sub_cols);
        if ((k + sz - 1) % 2 != 0) term = -term;
        result = result + term;
      }
    }
    return memo.emplace(key, std::move(result)).first->second;
  };

  EntropyVector ev;
  ev.n = m.cols;
  ev.h.assign(std::size_t{1} << m.cols, ExtRational::infinity());
  ev.h[0] = ExtRational(0);
  for (Mask J = 1; J < (Mask{1} << m.cols); ++J) {
    int k = popcount(J);
    if (k > m.rows) continue;
    std::optional<Rational> best;
    bool uncertified = false;
    for (Mask I = 0; I < (Mask{1} << m.rows); ++I) {
      if (popcount(I) != k) continue;
      auto v = det(det, I, J).val();
      if (v) {
        if (!best || *v < *best) best = *v;
      } else {
        uncertified = true;
      }
    }
    if (best && *best < cert) {
      ev.h[J] = ExtRational(*best);
    } else if (uncertified || best) {
      throw Error(errc::truncation_too_small,
                  "minor valuation not certified below the truncation");
    }
    // else: genuinely infinite (all minors identically zero as exact
    // reductions never produced a term)
  }
  return ev;
}

namespace {

Rational phi_at(const EntropyVector& h, const std::vector<Rational>& v) {
  TropicalPoint p;
  p.reserve(v.size());
  for (const auto& c : v) p.emplace_back(c);
  return phi_eval(h, p).value;
}

}  // namespace

SurvivalPoint ff_survival(const LatticeMatrix& a, const std::vector<Rational>& v,
                          const FfConfig& cfg) {
  if (static_cast<int>(v.size()) != a.cols())
    throw Error(errc::domain_error, "grid point dimension mismatch");
  FpMatrix m = reduce_matrix(a, cfg);
  const Rational bound = Rational(Int(m.cert_index)) / Rational(Int(cfg.denom));
  std::vector<std::int64_t> v_index(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational scaled = v[j] * Rational(Int(cfg.denom));
    if (denominator(scaled) != 1)
      throw Error(errc::domain_error, "grid point not in (1/N)Z");
    if (v[j] >= bound)
      throw Error(errc::truncation_too_small, "truncation cannot certify the event");
    v_index[j] = static_cast<std::int64_t>(numerator(scaled));
  }

  EntropyVector hp = entropy_mod_p(a, cfg);
  SurvivalPoint out;
  out.phi = phi_at(hp, v);
  out.exact = std::pow(static_cast<double>(cfg.prime), -to_double(out.phi));
  out.trials = cfg.trials;

  int hits = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    auto y = random_truncated_row(m, rng);
    bool event = true;
    for (int j = 0; j < m.cols && event; ++j) {
      FpSeries xj(m.p, m.N, m.ctx_trunc);
      for (int i = 0; i < m.rows; ++i) xj = xj + y[i] * m.at(i, j);
      // val(x_j) >= v_j iff no term below index v_j; exact below cert_index.
      if (!xj.terms().empty() && xj.terms().begin()->first < v_index[j]) event = false;
    }
    if (event) ++hits;
  }
  out.empirical = static_cast<double>(hits) / cfg.trials;
  return out;
}

int ff_exact_valuation_count(const LatticeMatrix& a, const std::vector<Rational>& v,
                             const FfConfig& cfg) {
  FpMatrix m = reduce_matrix(a, cfg);
  const Rational bound = Rational(Int(m.cert_index)) / Rational(Int(cfg.denom));
  std::vector<std::int64_t> v_index(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational scaled = v[j] * Rational(Int(cfg.denom));
    if (denominator(scaled) != 1 || v[j] >= bound)
      throw Error(errc::truncation_too_small, "target valuation not certifiable");
    v_index[j] = static_cast<std::int64_t>(numerator(scaled));
  }
  int hits = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    auto y = random_truncated_row(m, rng);
    bool match = true;
    for (int j = 0; j < m.cols && match; ++j) {
      FpSeries xj(m.p, m.N, m.ctx_trunc);
      for (int i = 0; i < m.rows; ++i) xj = xj + y[i] * m.at(i, j);
      match = !xj.terms().empty() && xj.terms().begin()->first == v_index[j];
    }
    if (match) ++hits;
  }
  return hits;
}

}  // namespace troplat
