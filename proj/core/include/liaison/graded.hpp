#ifndef LIAISON_GRADED_HPP
#define LIAISON_GRADED_HPP

#include <vector>

#include "liaison/linalg.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/twist_function.hpp"

namespace liaison {

/// Graded free module +O(-d_1) ... +O(-d_k): generator i sits in degree d_i.
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int i) const { return twists_[i]; }
  const std::vector<int>& twists() const { return twists_; }

  /// Tensor with O(-h): every generator degree rises by h.
  GradedFreeModule shifted(int h) const;
  /// Dual followed by tensor with O(-h): twist d becomes -d - h... see
  /// GradedMatrix dual for the matching map convention.
  GradedFreeModule dual(int h) const;
  GradedFreeModule direct_sum(const GradedFreeModule& o) const;

  TwistFunction twist_function() const { return TwistFunction::from_degrees(twists_); }
  bool same_twists_up_to_order(const GradedFreeModule& o) const;

  bool operator==(const GradedFreeModule& o) const { return twists_ == o.twists_; }
  bool operator!=(const GradedFreeModule& o) const { return !(*this == o); }

 private:
  std::vector<int> twists_;
};

/// Homogeneous matrix between graded free modules. Columns are elements of
/// the target: entry (i,j) is homogeneous of degree source.twist(j) -
/// target.twist(i), or zero.
class GradedMatrix {
 public:
  GradedMatrix(PolyRing ring, GradedFreeModule source, GradedFreeModule target);

  static GradedMatrix identity(const PolyRing& r, const GradedFreeModule& m);
  static GradedMatrix zero_map(const PolyRing& r, const GradedFreeModule& src, const GradedFreeModule& tgt);

  const PolyRing& ring() const { return ring_; }
  const GradedFreeModule& source() const { return src_; }
  const GradedFreeModule& target() const { return tgt_; }
  int rows() const { return tgt_.rank(); }
  int cols() const { return src_.rank(); }

  const Polynomial& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, Polynomial p);

  bool is_homogeneous() const;
  void require_homogeneous(const char* where) const;
  bool is_zero() const;

  std::vector<Polynomial> column(int j) const;
  std::vector<Polynomial> row(int i) const;

  /// Transpose with source/target swapped and twists negated-then-shifted:
  /// dual(h) maps target.dual(h) -> source.dual(h); dual(h).dual(h) == *this.
  GradedMatrix dual(int h) const;
  GradedMatrix shifted(int h) const;

  GradedMatrix select_columns(const std::vector<int>& js) const;
  GradedMatrix select_rows(const std::vector<int>& is) const;

 private:
  PolyRing ring_;
  GradedFreeModule src_, tgt_;
  int cols_;
  std::vector<Polynomial> entries_;  // row-major
};

GradedMatrix matrix_compose(const GradedMatrix& a, const GradedMatrix& b);  // a after b
GradedMatrix matrix_direct_sum(const GradedMatrix& a, const GradedMatrix& b);
/// Horizontal concatenation [a | b]: same target, combined sources.
GradedMatrix matrix_hconcat(const GradedMatrix& a, const GradedMatrix& b);
/// Vertical concatenation [a ; b]: same source, combined targets.
GradedMatrix matrix_vconcat(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matrix_neg(const GradedMatrix& a);

/// Rank over the fraction field, by fraction-free (Bareiss) elimination.
int poly_matrix_rank(const GradedMatrix& m);

/// Determinant of the square submatrix given by rows/cols (Bareiss).
Polynomial poly_matrix_minor(const GradedMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols);

/// The degree-d graded piece of a homogeneous map, as a dense matrix over the
/// field: this is the degreewise-linear-algebra view used by the oracles.
DenseMatrix degree_piece(const GradedMatrix& m, int d);

int free_module_dim_in_degree(const PolyRing& r, const GradedFreeModule& m, int d);

}  // namespace liaison

#endif
