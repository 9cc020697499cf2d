#pragma once

#include <optional>
#include <vector>

#include "troplat/entropy.hpp"
#include "troplat/lp.hpp"

namespace troplat {

/// Exact H-description: a.x = b rows and a.x <= b rows.
struct HPolyhedron {
  int n = 0;
  std::vector<std::pair<std::vector<Rational>, Rational>> eq;
  std::vector<std::pair<std::vector<Rational>, Rational>> ineq;
};

struct InteriorPoint {
  std::vector<Rational> point;      // strictly slack on every non-implicit row
  std::vector<int> implicit_ineqs;  // inequality indices forced to equality
};

/// Exact feasibility; when feasible, the returned point maximizes the
/// minimum slack over non-implicit inequalities (implicit rows detected by
/// per-row slack-maximization LPs when needed).
std::optional<InteriorPoint> lp_feasible(const HPolyhedron& p);

/// Affine dimension; -1 for the empty polyhedron.
int affine_dim(const HPolyhedron& p);

/// Closed region where the monomial of subset J dominates the others.
HPolyhedron build_region(const EntropyVector& h, Mask J);

struct VRep {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<Rational>> rays;
  std::vector<std::vector<Rational>> lineality;
};

struct Cell {
  std::vector<Mask> key;  // active subsets on the relative interior
  int dim = 0;
  HPolyhedron hrep;
  std::vector<Rational> witness;  // a relative-interior point
  Mask label = 0;
  std::vector<int> face_ids;
};

struct Complex {
  int n = 0;
  std::vector<Cell> cells;       // sorted by (dim, key)
  std::vector<int> maximal_ids;  // full-dimensional cells
  std::vector<int> sigma_ids;    // cells labeled by the full index set
};

inline constexpr std::size_t kComplexMonomialGuard = std::size_t{1} << 12;

/// Enumerates every cell of the linearity complex of the entropy polynomial:
/// full-dimensional regions first, then breadth-first refinement along
/// non-implicit inequalities, deduplicating cells by active-set key.
Complex enumerate_complex(const EntropyVector& h);

/// Fills labels (union of the labels of incident full-dimensional cells) and
/// collects the subcomplex labeled by the full index set.
void label_and_extract_sigma(Complex& complex);

/// Cells of sigma that are not faces of other sigma cells, counted by
/// dimension (index = dimension).
std::vector<int> sigma_maximal_by_dim(const Complex& complex);

/// Exact V-representation by active-subset enumeration; guarded to n <= 3.
VRep vrep_for_plot(const Cell& cell);

/// Membership of an exact point in a cell (all equalities and inequalities).
bool cell_contains(const Cell& cell, const std::vector<Rational>& x);

}  // namespace troplat
