#pragma once

#include <vector>

#include "troplat/puiseux.hpp"

namespace troplat {

/// Full-rank r x n matrix of Puiseux polynomials; its O_K-rowspan is the
/// lattice it presents.
class LatticeMatrix {
 public:
  LatticeMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1 || rows > cols)
      throw Error(errc::bad_document, "matrix must satisfy 1 <= r <= n");
  }

  static LatticeMatrix identity(int n) {
    LatticeMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.at(i, i) = PuiseuxPoly::one();
    return a;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  PuiseuxPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const PuiseuxPoly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::vector<PuiseuxPoly> row(int i) const {
    return {entries_.begin() + static_cast<std::size_t>(i) * cols_,
            entries_.begin() + static_cast<std::size_t>(i + 1) * cols_};
  }

  /// Every column must contain a nonzero entry (the lattice may not lie in a
  /// coordinate hyperplane). Throws with the offending column otherwise.
  void check_columns() const;

  friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_, cols_;
  std::vector<PuiseuxPoly> entries_;
};

/// Matrix over the fraction field; produced by change_basis, where inverting
/// a basis can force genuine rational-function entries.
class FractionMatrix {
 public:
  FractionMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PuiseuxFraction& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const PuiseuxFraction& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  /// True when every entry reduced to a monomial denominator.
  bool is_polynomial() const;
  /// Exact conversion; requires is_polynomial().
  LatticeMatrix to_lattice() const;

 private:
  int rows_, cols_;
  std::vector<PuiseuxFraction> entries_;
};

/// Exact determinant of a square matrix of fractions (Laplace expansion).
PuiseuxFraction fraction_det(const FractionMatrix& m);

/// Returns A * B^{-1}, computed via the adjugate of B. B must be square with
/// as many rows as A has columns, and invertible over K. Entries of the
/// result are reduced fractions whose denominators are monomials times units.
FractionMatrix change_basis(const LatticeMatrix& a, const LatticeMatrix& b);

}  // namespace troplat
