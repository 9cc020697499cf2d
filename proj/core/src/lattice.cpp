#include "troplat/lattice.hpp"

namespace troplat {

void LatticeMatrix::check_columns() const {
  for (int j = 0; j < cols_; ++j) {
    bool nonzero = false;
    for (int i = 0; i < rows_ && !nonzero; ++i) nonzero = !at(i, j).is_zero();
    if (!nonzero)
      throw Error(errc::hyperplane_violation,
                  "column " + std::to_string(j + 1) + " is identically zero");
  }
}

bool FractionMatrix::is_polynomial() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_polynomial()) return false;
  return true;
}

LatticeMatrix FractionMatrix::to_lattice() const {
  LatticeMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).to_poly();
  return out;
}

namespace {

PuiseuxFraction det_rec(const FractionMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.empty()) return PuiseuxFraction(PuiseuxPoly::one());
  int j = cols.back();
  std::vector<int> sub_cols(cols.begin(), cols.end() - 1);
  PuiseuxFraction acc;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const PuiseuxFraction& entry = m.at(rows[k], j);
    if (entry.is_zero()) continue;
    std::vector<int> sub_rows;
    for (std::size_t l = 0; l < rows.size(); ++l)
      if (l != k) sub_rows.push_back(rows[l]);
    PuiseuxFraction term = entry * det_rec(m, sub_rows, sub_cols);
    bool negative = ((rows.size() - 1 - k) % 2) != 0;
    acc = negative ? acc - term : acc + term;
  }
  return acc;
}

}  // namespace

PuiseuxFraction fraction_det(const FractionMatrix& m) {
  if (m.rows() != m.cols()) throw Error(errc::domain_error, "determinant of non-square matrix");
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;
  return det_rec(m, idx, idx);
}

FractionMatrix change_basis(const LatticeMatrix& a, const LatticeMatrix& b) {
  const int n = a.cols();
  if (b.rows() != n || b.cols() != n)
    throw Error(errc::bad_document, "basis matrix must be n x n");

  FractionMatrix bf(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bf.at(i, j) = PuiseuxFraction(b.at(i, j));

  PuiseuxFraction det = fraction_det(bf);
  if (det.is_zero()) throw Error(errc::singular_matrix, "basis matrix is singular");

  // adj(B)_{jk} = (-1)^{j+k} det(B with row k, column j removed)
  FractionMatrix inv(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<int> rows, cols;
      for (int i = 0; i < n; ++i) {
        if (i != k) rows.push_back(i);
        if (i != j) cols.push_back(i);
      }
      PuiseuxFraction minor = det_rec(bf, rows, cols);
      if ((j + k) % 2 != 0) minor = -minor;
      inv.at(j, k) = minor / det;
    }

  FractionMatrix out(a.rows(), n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      PuiseuxFraction acc;
      for (int k = 0; k < n; ++k) {
        if (a.at(i, k).is_zero()) continue;
        acc = acc + PuiseuxFraction(a.at(i, k)) * inv.at(k, j);
      }
      out.at(i, j) = acc;
    }
  return out;
}

}  // namespace troplat
