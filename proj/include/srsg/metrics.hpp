#pragma once

#include "srsg/common.hpp"

#include <vector>

namespace srsg {

// Co-occurrence counts between two labelings: counts(p, t) = #samples with
// predicted label p and true label t.
struct ContingencyTable {
  Eigen::MatrixXi counts;
  std::vector<int> row_marginals;
  std::vector<int> col_marginals;
  int total = 0;

  static ContingencyTable from_labels(const std::vector<int>& predicted,
                                      const std::vector<int>& truth);
};

// Minimum-cost assignment on a square cost matrix (shortest augmenting path,
// O(n^3)). Returns perm with row r assigned to column perm[r].
std::vector<int> hungarian_assignment(const Matrix& cost);

// Best-permutation match rate between two labelings, matched by the
// Kuhn-Munkres assignment on the contingency table.
double clustering_accuracy(const std::vector<int>& predicted,
                           const std::vector<int>& truth);

// Mutual information normalized by the larger marginal entropy (natural log).
// When both partitions are constant the ratio is taken as 1 if they are the
// same partition, else 0.
double nmi(const std::vector<int>& predicted, const std::vector<int>& truth);

}  // namespace srsg
