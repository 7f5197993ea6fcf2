#pragma once

#include "srsg/common.hpp"

#include <string>
#include <vector>

namespace srsg {

// n x n coefficient matrix Z with zero diagonal; column i holds the code of
// sample i over the remaining samples. Supports are cached with the shared
// nonzero threshold.
struct SparseCodeMatrix {
  Matrix codes;
  std::vector<std::vector<int>> supports;

  SparseCodeMatrix() = default;
  explicit SparseCodeMatrix(Matrix z);

  Eigen::Index size() const { return codes.cols(); }
  void set_column(Eigen::Index i, const Vector& z);
  void refresh_support(Eigen::Index i);
  long nonzeros() const;
};

// Triplet text: "row col value" per line, 1 header line, decimal round-trip.
void save_triplets(const SparseCodeMatrix& z, const std::string& path);
SparseCodeMatrix load_triplets(const std::string& path);

void save_dense(const Matrix& m, const std::string& path);
Matrix load_dense(const std::string& path);

}  // namespace srsg
