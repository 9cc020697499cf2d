#include "troplat/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace troplat {

namespace {

// Feasibility LP over (x, delta): maximize delta subject to
// a.x + delta <= b per kept inequality, implicit rows as equalities,
// 0 <= delta <= 1.
LpSolution max_min_slack(const HPolyhedron& p, const std::vector<bool>& implicit) {
  LpProblem lp;
  lp.n = p.n + 1;
  for (std::size_t k = 0; k < p.ineq.size(); ++k) {
    std::vector<Rational> row = p.ineq[k].first;
    row.push_back(implicit[k] ? Rational(0) : Rational(1));
    if (implicit[k]) {
      lp.a_eq.push_back(std::move(row));
      lp.b_eq.push_back(p.ineq[k].second);
    } else {
      lp.a_ub.push_back(std::move(row));
      lp.b_ub.push_back(p.ineq[k].second);
    }
  }
  for (const auto& [a, b] : p.eq) {
    std::vector<Rational> row = a;
    row.push_back(Rational(0));
    lp.a_eq.push_back(std::move(row));
    lp.b_eq.push_back(b);
  }
  {
    std::vector<Rational> row(p.n + 1, Rational(0));
    row[p.n] = Rational(1);
    lp.a_ub.push_back(row);
    lp.b_ub.push_back(Rational(1));
    for (auto& v : row) v = -v;
    lp.a_ub.push_back(row);
    lp.b_ub.push_back(Rational(0));
  }
  lp.c.assign(p.n + 1, Rational(0));
  lp.c[p.n] = Rational(-1);
  return solve_lp(lp);
}

// Maximal slack of inequality k over the polyhedron.
Rational max_slack_of_row(const HPolyhedron& p, std::size_t k) {
  LpProblem lp;
  lp.n = p.n;
  for (const auto& [a, b] : p.ineq) {
    lp.a_ub.push_back(a);
    lp.b_ub.push_back(b);
  }
  for (const auto& [a, b] : p.eq) {
    lp.a_eq.push_back(a);
    lp.b_eq.push_back(b);
  }
  lp.c = p.ineq[k].first;  // minimize a.x, slack = b - min
  LpSolution s = solve_lp(lp);
  if (s.status == LpStatus::Unbounded) return Rational(1);  // any positive value
  if (s.status != LpStatus::Optimal)
    throw Error(errc::domain_error, "slack LP on infeasible polyhedron");
  return p.ineq[k].second - s.objective;
}

}  // namespace

std::optional<InteriorPoint> lp_feasible(const HPolyhedron& p) {
  std::vector<bool> implicit(p.ineq.size(), false);
  LpSolution first = max_min_slack(p, implicit);
  if (first.status == LpStatus::Infeasible) return std::nullopt;
  if (first.status != LpStatus::Optimal)
    throw Error(errc::domain_error, "slack LP unbounded");

  InteriorPoint out;
  if (first.objective < 0) {  // objective = -delta*
    out.point.assign(first.x.begin(), first.x.begin() + p.n);
    return out;
  }

  // delta* = 0: some rows are implicit equalities; find them one by one.
  for (std::size_t k = 0; k < p.ineq.size(); ++k)
    if (max_slack_of_row(p, k) == 0) {
      implicit[k] = true;
      out.implicit_ineqs.push_back(static_cast<int>(k));
    }
  LpSolution second = max_min_slack(p, implicit);
  if (second.status != LpStatus::Optimal || second.objective >= 0)
    throw Error(errc::domain_error, "relative interior witness not found");
  out.point.assign(second.x.begin(), second.x.begin() + p.n);
  return out;
}

int affine_dim(const HPolyhedron& p) {
  auto feas = lp_feasible(p);
  if (!feas) return -1;
  std::vector<std::vector<Rational>> normals;
  for (const auto& [a, b] : p.eq) normals.push_back(a);
  for (int k : feas->implicit_ineqs) normals.push_back(p.ineq[k].first);
  return p.n - matrix_rank(std::move(normals));
}

HPolyhedron build_region(const EntropyVector& h, Mask J) {
  if (!h.at(J).is_finite())
    throw Error(errc::domain_error, "monomial has infinite entropy");
  HPolyhedron p;
  p.n = h.n;
  for (Mask I = 0; I < (Mask{1} << h.n); ++I) {
    if (I == J || !h.h[I].is_finite()) continue;
    std::vector<Rational> a(h.n, Rational(0));
    for (int j = 0; j < h.n; ++j) {
      if (I & (Mask{1} << j)) a[j] += 1;
      if (J & (Mask{1} << j)) a[j] -= 1;
    }
    p.ineq.push_back({std::move(a), h.h[I].value() - h.h[J].value()});
  }
  return p;
}

namespace {

struct ResolvedCell {
  std::vector<Mask> key;
  HPolyhedron hrep;
  std::vector<Rational> witness;
  int dim = 0;
  std::vector<Mask> ineq_monomials;  // parallel to hrep.ineq
};

// Canonical H-description of the cell with active set T (sorted):
// ties within T as equalities against T[0], dominance over the rest.
ResolvedCell build_key_hrep(const EntropyVector& h, const std::vector<Mask>& T,
                            const std::vector<Mask>& monomials) {
  ResolvedCell cell;
  cell.key = T;
  cell.hrep.n = h.n;
  Mask J0 = T[0];
  auto coeffs = [&](Mask I, Mask J) {
    std::vector<Rational> a(h.n, Rational(0));
    for (int j = 0; j < h.n; ++j) {
      if (I & (Mask{1} << j)) a[j] += 1;
      if (J & (Mask{1} << j)) a[j] -= 1;
    }
    return a;
  };
  for (std::size_t i = 1; i < T.size(); ++i)
    cell.hrep.eq.push_back({coeffs(T[i], J0), h.h[T[i]].value() - h.h[J0].value()});
  for (Mask I : monomials) {
    if (std::binary_search(T.begin(), T.end(), I)) continue;
    cell.hrep.ineq.push_back({coeffs(I, J0), h.h[I].value() - h.h[J0].value()});
    cell.ineq_monomials.push_back(I);
  }
  return cell;
}

std::optional<ResolvedCell> resolve_key(const EntropyVector& h, std::vector<Mask> asked,
                                        const std::vector<Mask>& monomials) {
  ResolvedCell cell = build_key_hrep(h, asked, monomials);
  auto feas = lp_feasible(cell.hrep);
  if (!feas) return std::nullopt;
  if (!feas->implicit_ineqs.empty()) {
    for (int k : feas->implicit_ineqs) asked.push_back(cell.ineq_monomials[k]);
    std::sort(asked.begin(), asked.end());
    ResolvedCell final_cell = build_key_hrep(h, asked, monomials);
    final_cell.witness = feas->point;
    std::vector<std::vector<Rational>> normals;
    for (const auto& [a, b] : final_cell.hrep.eq) normals.push_back(a);
    final_cell.dim = h.n - matrix_rank(std::move(normals));
    return final_cell;
  }
  cell.witness = feas->point;
  std::vector<std::vector<Rational>> normals;
  for (const auto& [a, b] : cell.hrep.eq) normals.push_back(a);
  cell.dim = h.n - matrix_rank(std::move(normals));
  return cell;
}

}  // namespace

Complex enumerate_complex(const EntropyVector& h) {
  std::vector<Mask> monomials;
  for (Mask J = 0; J < (Mask{1} << h.n); ++J)
    if (h.h[J].is_finite()) monomials.push_back(J);
  if (monomials.size() > kComplexMonomialGuard)
    throw Error(errc::guard_exceeded, "too many finite monomials");

  std::vector<ResolvedCell> cells;
  std::map<std::vector<Mask>, int> id_by_key;
  std::map<std::vector<Mask>, int> asked_cache;  // -1 = empty
  std::deque<int> queue;

  auto resolve_and_register = [&](std::vector<Mask> asked) -> int {
    std::sort(asked.begin(), asked.end());
    auto cached = asked_cache.find(asked);
    if (cached != asked_cache.end()) return cached->second;
    auto resolved = resolve_key(h, asked, monomials);
    int id = -1;
    if (resolved) {
      auto known = id_by_key.find(resolved->key);
      if (known != id_by_key.end()) {
        id = known->second;
      } else {
        id = static_cast<int>(cells.size());
        id_by_key.emplace(resolved->key, id);
        cells.push_back(std::move(*resolved));
        queue.push_back(id);
      }
    }
    asked_cache.emplace(std::move(asked), id);
    return id;
  };

  for (Mask J : monomials) resolve_and_register({J});

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    // copy: cells may reallocate during registration
    std::vector<Mask> key = cells[id].key;
    std::vector<Mask> children = cells[id].ineq_monomials;
    for (Mask I : children) {
      std::vector<Mask> asked = key;
      asked.push_back(I);
      resolve_and_register(std::move(asked));
    }
  }

  // Deterministic ids: ascending (dim, key).
  std::vector<int> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cells[a].dim != cells[b].dim) return cells[a].dim < cells[b].dim;
    return cells[a].key < cells[b].key;
  });

  Complex out;
  out.n = h.n;
  out.cells.resize(cells.size());
  for (std::size_t new_id = 0; new_id < order.size(); ++new_id) {
    ResolvedCell& rc = cells[order[new_id]];
    Cell& c = out.cells[new_id];
    c.key = std::move(rc.key);
    c.dim = rc.dim;
    c.hrep = std::move(rc.hrep);
    c.witness = std::move(rc.witness);
  }
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    if (out.cells[i].key.size() == 1) out.maximal_ids.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < out.cells.size(); ++j) {
      if (i == j) continue;
      const auto& ki = out.cells[i].key;
      const auto& kj = out.cells[j].key;
      if (ki.size() < kj.size() &&
          std::includes(kj.begin(), kj.end(), ki.begin(), ki.end()))
        out.cells[i].face_ids.push_back(static_cast<int>(j));
    }
  }
  return out;
}

void label_and_extract_sigma(Complex& complex) {
  std::vector<Mask> full_dim;
  for (int id : complex.maximal_ids) full_dim.push_back(complex.cells[id].key[0]);
  std::sort(full_dim.begin(), full_dim.end());

  complex.sigma_ids.clear();
  Mask everything = full_mask(complex.n);
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    Cell& c = complex.cells[i];
    c.label = 0;
    for (Mask J : c.key)
      if (std::binary_search(full_dim.begin(), full_dim.end(), J)) c.label |= J;
    if (c.label == everything) complex.sigma_ids.push_back(static_cast<int>(i));
  }
}

std::vector<int> sigma_maximal_by_dim(const Complex& complex) {
  std::vector<int> counts(complex.n + 1, 0);
  for (int id : complex.sigma_ids) {
    const auto& key = complex.cells[id].key;
    bool maximal = true;
    for (int other : complex.sigma_ids) {
      if (other == id) continue;
      const auto& other_key = complex.cells[other].key;
      if (other_key.size() < key.size() &&
          std::includes(key.begin(), key.end(), other_key.begin(), other_key.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) ++counts[complex.cells[id].dim];
  }
  return counts;
}

bool cell_contains(const Cell& cell, const std::vector<Rational>& x) {
  auto dot = [&](const std::vector<Rational>& a) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
  };
  for (const auto& [a, b] : cell.hrep.eq)
    if (dot(a) != b) return false;
  for (const auto& [a, b] : cell.hrep.ineq)
    if (dot(a) > b) return false;
  return true;
}

// ---- V-representation ----------------------------------------------------

namespace {

// Unique solution of rows.x = rhs when the system is consistent of rank n.
std::optional<std::vector<Rational>> solve_unique(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, int n) {
  int m = static_cast<int>(rows.size());
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && row < m; ++col) {
    int p = row;
    while (p < m && rows[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[row]);
    std::swap(rhs[p], rhs[row]);
    Rational inv = Rational(1) / rows[row][col];
    for (auto& v : rows[row]) v *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (rhs[i] != 0) return std::nullopt;  // inconsistent
  if (static_cast<int>(pivot_col.size()) != n) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (int i = 0; i < n; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Basis of the nullspace of rows (n columns), deterministic.
std::vector<std::vector<Rational>> nullspace_basis(std::vector<std::vector<Rational>> rows,
                                                   int n) {
  int m = static_cast<int>(rows.size());
  int row = 0;
  std::vector<int> pivot_of_col(n, -1);
  for (int col = 0; col < n && row < m; ++col) {
    int p = row;
    while (p < m && rows[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[row]);
    Rational inv = Rational(1) / rows[row][col];
    for (auto& v : rows[row]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rational> v(n, Rational(0));
    v[col] = 1;
    for (int c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -rows[pivot_of_col[c]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> normalize_direction(std::vector<Rational> d) {
  Int scale(1);
  for (const auto& v : d) scale = lcm(scale, denominator(v));
  Int g(0);
  for (auto& v : d) {
    v *= Rational(scale);
    g = gcd(g, numerator(v));
  }
  if (g != 0)
    for (auto& v : d) v /= Rational(g);
  return d;
}

}  // namespace

VRep vrep_for_plot(const Cell& cell) {
  const int n = cell.hrep.n;
  if (n > 3) throw Error(errc::guard_exceeded, "V-representation limited to n <= 3");
  VRep out;

  std::vector<std::vector<Rational>> eq_normals;
  std::vector<Rational> eq_rhs;
  for (const auto& [a, b] : cell.hrep.eq) {
    eq_normals.push_back(a);
    eq_rhs.push_back(b);
  }
  const auto& ineqs = cell.hrep.ineq;
  const int q = static_cast<int>(ineqs.size());

  // Vertices: every <=n-subset of tight inequalities.
  std::vector<std::vector<Rational>> verts;
  for (Mask s = 0; s < (Mask{1} << q); ++s) {
    if (popcount(s) > n) continue;
    auto rows = eq_normals;
    auto rhs = eq_rhs;
    for (int k : mask_indices(s)) {
      rows.push_back(ineqs[k].first);
      rhs.push_back(ineqs[k].second);
    }
    auto x = solve_unique(std::move(rows), std::move(rhs), n);
    if (!x || !cell_contains(cell, *x)) continue;
    verts.push_back(std::move(*x));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.vertices = std::move(verts);

  // Lineality: directions annihilated by every constraint normal.
  {
    auto rows = eq_normals;
    for (const auto& [a, b] : ineqs) rows.push_back(a);
    out.lineality = nullspace_basis(std::move(rows), n);
    for (auto& v : out.lineality) v = normalize_direction(std::move(v));
  }

  // Rays of the recession cone from rank n-1 active subsets.
  auto in_cone = [&](const std::vector<Rational>& d) {
    for (const auto& a : eq_normals) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += a[j] * d[j];
      if (s != 0) return false;
    }
    for (const auto& [a, b] : ineqs) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += a[j] * d[j];
      if (s > 0) return false;
    }
    return true;
  };
  std::vector<std::vector<Rational>> rays;
  for (Mask s = 0; s < (Mask{1} << q); ++s) {
    if (popcount(s) > n) continue;
    auto rows = eq_normals;
    for (int k : mask_indices(s)) rows.push_back(ineqs[k].first);
    if (matrix_rank(rows) != n - 1) continue;
    auto dirs = nullspace_basis(std::move(rows), n);
    if (dirs.size() != 1) continue;
    std::vector<Rational> d = normalize_direction(std::move(dirs[0]));
    std::vector<Rational> neg(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
    bool fwd = in_cone(d), bwd = in_cone(neg);
    if (fwd && bwd) continue;  // lineality, reported separately
    if (fwd) rays.push_back(std::move(d));
    else if (bwd) rays.push_back(std::move(neg));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  out.rays = std::move(rays);
  return out;
}

}  // namespace troplat
