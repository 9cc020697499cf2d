#include "troplat/entropy.hpp"

#include <algorithm>

namespace troplat {

EntropyVector make_entropy(int n, const std::vector<std::pair<Mask, ExtRational>>& values) {
  EntropyVector ev;
  ev.n = n;
  ev.h.assign(std::size_t{1} << n, ExtRational::infinity());
  ev.h[0] = ExtRational(0);
  for (const auto& [mask, v] : values) {
    if (mask >= ev.h.size()) throw Error(errc::bad_document, "subset mask out of range");
    ev.h[mask] = v;
  }
  if (!(ev.h[0] == ExtRational(0)))
    throw Error(errc::bad_document, "h of the empty set must be 0");
  return ev;
}

const ExtRational& BimatroidTable::at(Mask I, Mask J) const {
  auto key = std::make_pair(I, J);
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, const auto& k) { return e.first < k; });
  if (it == entries.end() || it->first != key)
    throw Error(errc::domain_error, "bimatroid table lookup outside domain");
  return it->second;
}

bool BimatroidTable::contains(Mask I, Mask J) const {
  auto key = std::make_pair(I, J);
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, const auto& k) { return e.first < k; });
  return it != entries.end() && it->first == key;
}

const PuiseuxPoly& DetTable::det(Mask rows, Mask cols) {
  if (popcount(rows) != popcount(cols))
    throw Error(errc::domain_error, "determinant of non-square minor");
  std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  PuiseuxPoly result;
  if (rows == 0) {
    result = PuiseuxPoly::one();  // empty determinant
  } else {
    // Cofactor expansion along the last column of the minor.
    int j = 31 - std::countl_zero(cols);
    Mask sub_cols = cols & ~(Mask{1} << j);
    auto row_idx = mask_indices(rows);
    int m = static_cast<int>(row_idx.size());
    for (int k = 0; k < m; ++k) {
      const PuiseuxPoly& entry = a_->at(row_idx[k], j);
      if (entry.is_zero()) continue;
      Mask sub_rows = rows & ~(Mask{1} << row_idx[k]);
      PuiseuxPoly term = entry * det(sub_rows, sub_cols);
      if ((k + m - 1) % 2 != 0) term = -term;
      result += term;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

namespace {

// Enumerates all size-k subsets of [0, n) as masks, ascending.
std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

}  // namespace

BimatroidTable minor_valuations(const LatticeMatrix& a) {
  if (a.cols() > kMinorGuardCols)
    throw Error(errc::guard_exceeded, "minor valuation table limited to n <= 12");
  DetTable dets(a);
  BimatroidTable table;
  table.r = a.rows();
  table.n = a.cols();
  for (int k = 0; k <= a.rows(); ++k) {
    for (Mask I : subsets_of_size(a.rows(), k))
      for (Mask J : subsets_of_size(a.cols(), k))
        table.entries.push_back({{I, J}, dets.det(I, J).val()});
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return table;
}

namespace {

template <class ValOfMinor>
EntropyVector entropy_impl(int r, int n, ValOfMinor&& val_of) {
  EntropyVector ev;
  ev.n = n;
  ev.h.assign(std::size_t{1} << n, ExtRational::infinity());
  ev.h[0] = ExtRational(0);
  for (Mask J = 1; J < (Mask{1} << n); ++J) {
    int k = popcount(J);
    if (k > r) continue;
    ExtRational best = ExtRational::infinity();
    for (Mask I = 0; I < (Mask{1} << r); ++I) {
      if (popcount(I) != k) continue;
      best = min(best, val_of(I, J));
    }
    ev.h[J] = best;
  }
  for (int j = 0; j < n; ++j)
    if (!ev.h[Mask{1} << j].is_finite())
      throw Error(errc::hyperplane_violation,
                  "column " + std::to_string(j + 1) + " has infinite entropy");
  if (ev.rank() != r)
    throw Error(errc::rank_deficient, "matrix rank is below its row count");
  return ev;
}

}  // namespace

EntropyVector entropy_vector(const LatticeMatrix& a) {
  if (a.cols() > kMinorGuardCols)
    throw Error(errc::guard_exceeded, "entropy vector limited to n <= 12");
  DetTable dets(a);
  return entropy_impl(a.rows(), a.cols(),
                      [&](Mask I, Mask J) { return dets.det(I, J).val(); });
}

EntropyVector entropy_vector(const FractionMatrix& a) {
  if (a.cols() > kMinorGuardCols)
    throw Error(errc::guard_exceeded, "entropy vector limited to n <= 12");
  // Memoized fraction determinants, keyed like DetTable.
  std::unordered_map<std::uint64_t, PuiseuxFraction> memo;
  auto det = [&](auto&& self, Mask rows, Mask cols) -> const PuiseuxFraction& {
    std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PuiseuxFraction result;
    if (rows == 0) {
      result = PuiseuxFraction(PuiseuxPoly::one());
    } else {
      int j = 31 - std::countl_zero(cols);
      Mask sub_cols = cols & ~(Mask{1} << j);
      auto row_idx = mask_indices(rows);
      int m = static_cast<int>(row_idx.size());
      for (int k = 0; k < m; ++k) {
        const PuiseuxFraction& entry = a.at(row_idx[k], j);
        if (entry.is_zero()) continue;
        Mask sub_rows = rows & ~(Mask{1} << row_idx[k]);
        PuiseuxFraction term = entry * self(self, sub_rows, sub_cols);
        if ((k + m - 1) % 2 != 0) term = -term;
        result = result + term;
      }
    }
    return memo.emplace(key, std::move(result)).first->second;
  };
  return entropy_impl(a.rows(), a.cols(), [&](Mask I, Mask J) -> ExtRational {
    const PuiseuxFraction& d = det(det, I, J);
    return d.is_zero() ? ExtRational::infinity() : d.val();
  });
}

EntropyVector entropy_from_bimatroid(const BimatroidTable& nu) {
  EntropyVector ev;
  ev.n = nu.n;
  ev.h.assign(std::size_t{1} << nu.n, ExtRational::infinity());
  ev.h[0] = ExtRational(0);
  for (const auto& [key, v] : nu.entries) {
    Mask J = key.second;
    if (J == 0) continue;
    ev.h[J] = min(ev.h[J], v);
  }
  return ev;
}

std::vector<std::pair<Mask, Mask>> supermodularity_violations(const EntropyVector& ev) {
  std::vector<std::pair<Mask, Mask>> out;
  Mask total = Mask{1} << ev.n;
  for (Mask I = 0; I < total; ++I)
    for (Mask J = I; J < total; ++J) {
      ExtRational lhs = ev.h[I] + ev.h[J];
      ExtRational rhs = ev.h[I & J] + ev.h[I | J];
      if (lhs > rhs) out.push_back({I, J});
    }
  return out;
}

std::vector<BimatroidViolation> bimatroid_axiom_check(const BimatroidTable& nu) {
  if (nu.r + nu.n > kBimatroidGuard)
    throw Error(errc::guard_exceeded, "bimatroid axiom check limited to r + n <= 14");
  std::vector<BimatroidViolation> out;

  if (!nu.contains(0, 0) || !(nu.at(0, 0) == ExtRational(0)))
    out.push_back({1, 0, 0, 0, 0, -1, false});

  const auto& entries = nu.entries;
  for (const auto& [p1, v1] : entries) {
    auto [I, J] = p1;
    for (const auto& [p2, v2] : entries) {
      auto [I2, J2] = p2;
      ExtRational lhs = v1 + v2;

      // (2a): exchange over rows entering I.
      for (int ip : mask_indices(I2 & ~I)) {
        bool ok = false;
        for (int i : mask_indices(I & ~I2)) {
          Mask Ia = (I & ~(Mask{1} << i)) | (Mask{1} << ip);
          Mask Ib = (I2 & ~(Mask{1} << ip)) | (Mask{1} << i);
          if (lhs >= nu.at(Ia, J) + nu.at(Ib, J2)) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          for (int jp : mask_indices(J2 & ~J)) {
            Mask Ia = I | (Mask{1} << ip);
            Mask Ja = J | (Mask{1} << jp);
            Mask Ib = I2 & ~(Mask{1} << ip);
            Mask Jb = J2 & ~(Mask{1} << jp);
            if (lhs >= nu.at(Ia, Ja) + nu.at(Ib, Jb)) {
              ok = true;
              break;
            }
          }
        }
        if (!ok) out.push_back({2, I, J, I2, J2, ip, true});
      }

      // (2b): exchange over columns leaving J.
      for (int j : mask_indices(J & ~J2)) {
        bool ok = false;
        for (int i : mask_indices(I & ~I2)) {
          Mask Ia = I & ~(Mask{1} << i);
          Mask Ja = J & ~(Mask{1} << j);
          Mask Ib = I2 | (Mask{1} << i);
          Mask Jb = J2 | (Mask{1} << j);
          if (lhs >= nu.at(Ia, Ja) + nu.at(Ib, Jb)) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          for (int jp : mask_indices(J2 & ~J)) {
            Mask Ja = (J & ~(Mask{1} << j)) | (Mask{1} << jp);
            Mask Jb = (J2 & ~(Mask{1} << jp)) | (Mask{1} << j);
            if (lhs >= nu.at(I, Ja) + nu.at(I2, Jb)) {
              ok = true;
              break;
            }
          }
        }
        if (!ok) out.push_back({2, I, J, I2, J2, j, false});
      }
    }
  }
  return out;
}

}  // namespace troplat
