#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "troplat/lattice.hpp"
#include "troplat/subset.hpp"

namespace troplat {

/// h(L): one extended rational per subset of the column set, indexed by
/// bitmask. h[0] = 0 always.
struct EntropyVector {
  int n = 0;
  std::vector<ExtRational> h;  // size 1 << n

  const ExtRational& at(Mask J) const { return h[J]; }

  /// Largest subset size with finite entry (the lattice rank).
  int rank() const {
    int r = 0;
    for (Mask J = 0; J < h.size(); ++J)
      if (h[J].is_finite()) r = std::max(r, popcount(J));
    return r;
  }

  friend bool operator==(const EntropyVector& a, const EntropyVector& b) {
    return a.n == b.n && a.h == b.h;
  }
};

EntropyVector make_entropy(int n, const std::vector<std::pair<Mask, ExtRational>>& values);

/// Exact minor valuations of all same-size row/column subset pairs.
struct BimatroidTable {
  int r = 0, n = 0;
  std::vector<std::pair<std::pair<Mask, Mask>, ExtRational>> entries;  // sorted by (|I|, I, J)

  const ExtRational& at(Mask I, Mask J) const;
  bool contains(Mask I, Mask J) const;
};

/// Memoized Laplace expansion over column subsets: exact sub-determinant
/// polynomials keyed by (row subset, column subset).
class DetTable {
 public:
  explicit DetTable(const LatticeMatrix& a) : a_(&a) {}

  const PuiseuxPoly& det(Mask rows, Mask cols);

 private:
  const LatticeMatrix* a_;
  std::unordered_map<std::uint64_t, PuiseuxPoly> memo_;
};

inline constexpr int kMinorGuardCols = 12;
inline constexpr int kBimatroidGuard = 14;  // r + n

BimatroidTable minor_valuations(const LatticeMatrix& a);

EntropyVector entropy_vector(const LatticeMatrix& a);
EntropyVector entropy_vector(const FractionMatrix& a);
EntropyVector entropy_from_bimatroid(const BimatroidTable& nu);

/// Pairs (I, J) with h_I + h_J > h_{I cap J} + h_{I cup J}; empty for every
/// entropy vector of an actual lattice.
std::vector<std::pair<Mask, Mask>> supermodularity_violations(const EntropyVector& h);

struct BimatroidViolation {
  int axiom;  // 1 or 2
  Mask I, J, I2, J2;
  int element;  // the i' of (2a) / j of (2b), 0-based; -1 for axiom 1
  bool row_case;  // true for (2a)
};

/// Exhaustive check of the exchange axioms; guard: r + n <= kBimatroidGuard.
std::vector<BimatroidViolation> bimatroid_axiom_check(const BimatroidTable& nu);

}  // namespace troplat
