#include "liaison/linalg.hpp"

#include <optional>

namespace liaison {

std::vector<int> DenseMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int i = row; i < rows_; ++i) {
      if (!F_.is_zero(at(i, col))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
    Coeff inv = F_.inv(at(row, col));
    for (int j = col; j < cols_; ++j) at(row, j) = F_.mul(at(row, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == row || F_.is_zero(at(i, col))) continue;
      Coeff f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) = F_.sub(at(i, j), F_.mul(f, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int DenseMatrix::rank() const {
  DenseMatrix m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<std::vector<Coeff>> DenseMatrix::kernel_basis() const {
  DenseMatrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Coeff>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(cols_, F_.zero());
    v[free] = F_.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F_.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Coeff>> DenseMatrix::solve(const std::vector<Coeff>& b) const {
  DenseMatrix aug(F_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  for (int p : pivots)
    if (p == cols_) return std::nullopt;
  std::vector<Coeff> x(cols_, F_.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

}  // namespace liaison
