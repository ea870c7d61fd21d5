#pragma once

#include <vector>

#include "looptree/errors.hpp"

namespace looptree {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Compressed-row sparse matrix. Column indices are sorted and unique within
// each row; duplicate triplets are summed on construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets,
                                    bool symmetric = false);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(values_.size()); }
  bool symmetric() const { return symmetric_; }

  const std::vector<int>& row_offsets() const { return row_offsets_; }
  const std::vector<int>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  // Entry lookup by binary search within the row; zero when absent.
  double entry(int row, int col) const;

  std::vector<double> multiply(const std::vector<double>& x) const;
  std::vector<double> multiply_transpose(const std::vector<double>& x) const;
  std::vector<double> column_sums() const;

  // Max over present (i,j) pairs of |a_ij - a_ji| relative to the largest
  // entry magnitude; used to validate the symmetry flag.
  bool is_entrywise_symmetric(double rel_tol) const;

  std::vector<double> to_dense_row_major() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  bool symmetric_ = false;
  std::vector<int> row_offsets_{0};
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

}  // namespace looptree
