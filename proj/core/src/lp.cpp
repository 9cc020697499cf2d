#include "troplat/lp.hpp"

namespace troplat {

namespace {

// Dense tableau simplex on: min c.z, T z = rhs, z >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : rows_(std::move(rows)), rhs_(std::move(rhs)) {}

  int m() const { return static_cast<int>(rows_.size()); }
  int cols() const { return m() ? static_cast<int>(rows_[0].size()) : 0; }

  // Appends identity columns for artificials and sets them basic.
  void add_artificials() {
    int base = cols();
    for (int i = 0; i < m(); ++i) {
      for (int k = 0; k < m(); ++k) rows_[k].push_back(i == k ? Rational(1) : Rational(0));
      basis_.push_back(base + i);
    }
  }

  // Bland pivoting for min cost.z given full cost vector (one entry per column).
  // Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    // reduced costs: cost - cost_B . rows
    std::vector<Rational> red = cost;
    Rational obj(0);
    for (int i = 0; i < m(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols(); ++j) red[j] -= cb * rows_[i][j];
      obj -= cb * rhs_[i];
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j)
        if (red[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) {
        objective_ = -obj;
        return true;
      }
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter, red, obj);
    }
  }

  void pivot(int leave, int enter, std::vector<Rational>& red, Rational& obj) {
    Rational inv = Rational(1) / rows_[leave][enter];
    for (auto& v : rows_[leave]) v *= inv;
    rhs_[leave] *= inv;
    for (int i = 0; i < m(); ++i) {
      if (i == leave) continue;
      const Rational f = rows_[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < cols(); ++j) rows_[i][j] -= f * rows_[leave][j];
      rhs_[i] -= f * rhs_[leave];
    }
    const Rational f = red[enter];
    if (f != 0) {
      for (int j = 0; j < cols(); ++j) red[j] -= f * rows_[leave][j];
      obj -= f * rhs_[leave];
    }
    basis_[leave] = enter;
  }

  // Pivots artificial variables (columns >= first_artificial) out of the
  // basis; drops rows that are entirely zero on the structural columns.
  void purge_artificials(int first_artificial) {
    for (int i = m() - 1; i >= 0; --i) {
      if (basis_[i] < first_artificial) continue;
      int enter = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) {
        std::vector<Rational> dummy_red(cols(), Rational(0));
        Rational dummy_obj(0);
        pivot(i, enter, dummy_red, dummy_obj);
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
    for (auto& row : rows_) row.resize(first_artificial);
  }

  std::vector<Rational> basic_solution(int nvars) const {
    std::vector<Rational> z(nvars, Rational(0));
    for (int i = 0; i < m(); ++i)
      if (basis_[i] < nvars) z[basis_[i]] = rhs_[i];
    return z;
  }

  const Rational& objective() const { return objective_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  Rational objective_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int n = p.n;
  const int m_ub = static_cast<int>(p.a_ub.size());
  const int m_eq = static_cast<int>(p.a_eq.size());
  const int nvars = 2 * n + m_ub;  // x = u - w, slack per ub row

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.reserve(m_ub + m_eq);
  for (int i = 0; i < m_ub + m_eq; ++i) {
    const auto& a = i < m_ub ? p.a_ub[i] : p.a_eq[i - m_ub];
    const Rational& b = i < m_ub ? p.b_ub[i] : p.b_eq[i - m_ub];
    std::vector<Rational> row(nvars, Rational(0));
    for (int j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (i < m_ub) row[2 * n + i] = Rational(1);
    if (b < 0) {
      for (auto& v : row) v = -v;
      rhs.push_back(-b);
    } else {
      rhs.push_back(b);
    }
    rows.push_back(std::move(row));
  }

  Tableau t(std::move(rows), std::move(rhs));
  t.add_artificials();

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1_cost(nvars + t.m(), Rational(0));
  for (int j = nvars; j < nvars + t.m(); ++j) phase1_cost[j] = Rational(1);
  if (!t.optimize(phase1_cost))
    throw Error(errc::domain_error, "phase-1 simplex unbounded");
  LpSolution out;
  if (t.objective() != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  t.purge_artificials(nvars);

  // Phase 2.
  std::vector<Rational> cost(nvars, Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = p.c[j];
    cost[n + j] = -p.c[j];
  }
  if (!t.optimize(cost)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  std::vector<Rational> z = t.basic_solution(nvars);
  out.status = LpStatus::Optimal;
  out.objective = t.objective();
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = z[j] - z[n + j];
  return out;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = Rational(1) / rows[r][lead];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      const Rational f = rows[i][lead];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace troplat
