#pragma once

#include "srsg/common.hpp"
#include "srsg/dataset.hpp"
#include "srsg/sparse_codes.hpp"

#include <vector>

namespace srsg {

// Per-column regularization coefficients. Column i of c holds c_ti for all t:
// the number of neighbors of i whose code is zero at coordinate t minus the
// number whose code is nonzero there. Values are integer-valued reals in
// [-K, K]; positive values penalize activating coordinate t.
struct SupportCoefficients {
  Matrix c;

  std::vector<int> positive_set(Eigen::Index i) const {
    std::vector<int> out;
    for (Eigen::Index t = 0; t < c.rows(); ++t)
      if (c(t, i) > 0.0) out.push_back(static_cast<int>(t));
    return out;
  }
};

struct ObjectiveParams {
  double gamma;
  const KnnGraph* knn;
};

// Number of coordinates m (excluding i and j) at which exactly one of the two
// codes is nonzero.
int support_distance(const Vector& zi, const Vector& zj, int i, int j);

// c_ti for all t, from the current codes and the KNN rows of i.
Vector support_coefficients(const SparseCodeMatrix& z, const KnnGraph& knn, Eigen::Index i);

SupportCoefficients support_coefficients_all(const SparseCodeMatrix& z, const KnnGraph& knn);

// Sum_i ||x_i - X Z^i||^2 + gamma * Sum_{i,j} S_ij d(Z^i, Z^j), ordered pairs.
double full_objective(const SparseCodeMatrix& z, const Dataset& data, const ObjectiveParams& p);

// ||x_i - X z||^2 + gamma * Sum_t c_ti [z_t != 0]  (all coordinates; equals
// the one-directional pairwise form up to a z-independent constant).
double column_objective(const Vector& z, Eigen::Index i, const Dataset& data,
                        const Vector& c_col, double gamma);

// ||x_i - X z||^2 + gamma * Sum_{t: c_ti > 0} c_ti [z_t != 0].
double simplified_objective(const Vector& z, Eigen::Index i, const Dataset& data,
                            const Vector& c_col, double gamma);

}  // namespace srsg
