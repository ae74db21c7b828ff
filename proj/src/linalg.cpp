#include "linalg.hpp"

#include <algorithm>

namespace udrf::detail {

int rref(const PrimeField& F, std::vector<std::vector<int>>& M) {
  if (M.empty()) return 0;
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    const int scale = F.inv(M[rank][c]);
    for (int j = c; j < cols; ++j) M[rank][j] = F.mul(M[rank][j], scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] == 0) continue;
      const int f = M[r][c];
      for (int j = c; j < cols; ++j)
        M[r][j] = F.sub(M[r][j], F.mul(f, M[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> nullspace(const PrimeField& F,
                                        std::vector<std::vector<int>> M,
                                        int cols) {
  const int rank = rref(F, M);
  std::vector<int> pivot_of_col(cols, -1);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c < cols && M[r][c] == 0) ++c;
    pivot_of_col[c] = r;
  }
  std::vector<std::vector<int>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<int> v(cols, 0);
    v[c] = 1;
    for (int j = 0; j < cols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = F.neg(M[pivot_of_col[j]][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> RrefAccumulator::residual(std::vector<int> row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int f = row[pivots_[i]];
    if (f == 0) continue;
    const std::vector<int>& b = rows_[i];
    for (int j = 0; j < cols_; ++j)
      if (b[j] != 0) row[j] = F_->sub(row[j], F_->mul(f, b[j]));
  }
  return row;
}

bool RrefAccumulator::add(std::vector<int> row) {
  row = residual(std::move(row));
  int piv = 0;
  while (piv < cols_ && row[piv] == 0) ++piv;
  if (piv == cols_) return false;
  const int scale = F_->inv(row[piv]);
  for (int j = piv; j < cols_; ++j) row[j] = F_->mul(row[j], scale);
  // Keep the basis reduced: clear the new pivot column from existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int f = rows_[i][piv];
    if (f == 0) continue;
    for (int j = piv; j < cols_; ++j)
      rows_[i][j] = F_->sub(rows_[i][j], F_->mul(f, row[j]));
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

}  // namespace udrf::detail
