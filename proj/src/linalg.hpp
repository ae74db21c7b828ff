#pragma once

// Dense Gaussian elimination over F_p.  Internal to the library sources; the
// matrices here are small (at most a few thousand rows) and exact.

#include <vector>

#include "udrf/ffield.hpp"

namespace udrf::detail {

// Reduced row echelon form in place; returns the rank.  All rows must have
// equal length.
int rref(const PrimeField& F, std::vector<std::vector<int>>& M);

// Basis of { v : M v = 0 } with v of length cols.
std::vector<std::vector<int>> nullspace(const PrimeField& F,
                                        std::vector<std::vector<int>> M,
                                        int cols);

// Incremental row-space tracker.  Rows are reduced against a maintained
// reduced echelon basis as they arrive, so the caller can stop feeding rows
// once the rank hits a known target.
class RrefAccumulator {
 public:
  RrefAccumulator(const PrimeField& F, int cols) : F_(&F), cols_(cols) {}

  // Returns true when the row was independent of the space seen so far.
  bool add(std::vector<int> row);
  // Reduce a row against the basis without inserting it.
  std::vector<int> residual(std::vector<int> row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  // Basis rows with unit pivots, each pivot column cleared elsewhere.
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  const PrimeField* F_;
  int cols_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> pivots_;  // pivot column of rows_[i]
};

}  // namespace udrf::detail
