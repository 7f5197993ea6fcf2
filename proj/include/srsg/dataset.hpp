#pragma once

#include "srsg/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srsg {

enum class DataFormat { Csv, LabeledCsv };
enum class Delimiter { Auto, Comma, Whitespace };

// Column-per-sample data matrix. Files store one sample per row; the loader
// transposes so that points is d (features) x n (samples).
struct Dataset {
  Matrix points;
  std::optional<std::vector<int>> labels;  // contiguous 0..c-1 when present
  std::vector<std::string> names;

  Eigen::Index dim() const { return points.rows(); }
  Eigen::Index size() const { return points.cols(); }
  int num_classes() const;
};

// Directed K-nearest-neighbor relation: adjacency(i, j) = 1 iff x_j is among
// the k nearest neighbors of x_i. Not symmetrized.
struct KnnGraph {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> adjacency;
  std::vector<std::vector<int>> neighbors;  // per-row neighbor lists, ascending
  int k = 0;
};

Dataset load_dataset(const std::string& path, DataFormat format,
                     Delimiter delimiter = Delimiter::Auto);

// Scales every column to unit Euclidean norm; throws degenerate-input on a
// zero column (index reported).
Dataset normalize_columns(const Dataset& data);

// Row-wise KNN under Euclidean distance, ties broken by smaller sample index.
KnnGraph build_knn_graph(const Dataset& data, int k);

// Dense matrix of squared Euclidean distances between columns (OpenMP kernel;
// per-row results are schedule-independent).
Matrix pairwise_sq_dists(const Matrix& points);

// One-line reproducibility fingerprint: shape plus first/last entries.
std::string dataset_checksum(const Dataset& data);

}  // namespace srsg
