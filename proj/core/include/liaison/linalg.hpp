#ifndef LIAISON_LINALG_HPP
#define LIAISON_LINALG_HPP

#include <optional>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Dense matrix over a coefficient field; the workhorse for all degreewise
/// (per graded piece) computations.
class DenseMatrix {
 public:
  DenseMatrix(CoefficientField f, int rows, int cols)
      : F_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CoefficientField& field() const { return F_; }

  Coeff& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Coeff& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();

  int rank() const;

  /// Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<Coeff>> kernel_basis() const;

  /// One solution x of Ax = b, or empty if inconsistent.
  std::optional<std::vector<Coeff>> solve(const std::vector<Coeff>& b) const;

 private:
  CoefficientField F_;
  int rows_, cols_;
  std::vector<Coeff> a_;
};

}  // namespace liaison

#endif
