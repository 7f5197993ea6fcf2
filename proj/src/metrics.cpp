#include "srsg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace srsg {

namespace {

std::vector<int> compact_labels(const std::vector<int>& labels, int* num_out) {
  std::map<int, int> remap;
  for (int l : labels) remap.emplace(l, 0);
  int next = 0;
  for (auto& kv : remap) kv.second = next++;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(remap[l]);
  *num_out = next;
  return out;
}

}  // namespace

ContingencyTable ContingencyTable::from_labels(const std::vector<int>& predicted,
                                               const std::vector<int>& truth) {
  if (predicted.size() != truth.size())
    throw dimension_error("label vectors differ in length: " + std::to_string(predicted.size()) +
                          " vs " + std::to_string(truth.size()));
  int cp = 0, ct = 0;
  std::vector<int> p = compact_labels(predicted, &cp);
  std::vector<int> t = compact_labels(truth, &ct);
  ContingencyTable tab;
  tab.counts = Eigen::MatrixXi::Zero(cp, ct);
  for (size_t i = 0; i < p.size(); ++i) tab.counts(p[i], t[i])++;
  tab.row_marginals.assign(static_cast<size_t>(cp), 0);
  tab.col_marginals.assign(static_cast<size_t>(ct), 0);
  for (int r = 0; r < cp; ++r)
    for (int c = 0; c < ct; ++c) {
      tab.row_marginals[static_cast<size_t>(r)] += tab.counts(r, c);
      tab.col_marginals[static_cast<size_t>(c)] += tab.counts(r, c);
    }
  tab.total = static_cast<int>(p.size());
  return tab;
}

std::vector<int> hungarian_assignment(const Matrix& cost) {
  if (cost.rows() != cost.cols()) throw dimension_error("cost matrix must be square");
  const int n = static_cast<int>(cost.rows());
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();

  // potentials u, v; p[j] = row matched to column j (1-based, 0 = none)
  std::vector<double> u(static_cast<size_t>(n) + 1, 0.0), v(static_cast<size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<size_t>(n) + 1, inf);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      int i0 = p[static_cast<size_t>(j0)], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        double cur = cost(i0 - 1, j - 1) - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> perm(static_cast<size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<size_t>(j)]) perm[static_cast<size_t>(p[static_cast<size_t>(j)]) - 1] = j - 1;
  return perm;
}

double clustering_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  ContingencyTable tab = ContingencyTable::from_labels(predicted, truth);
  const int m = static_cast<int>(std::max(tab.counts.rows(), tab.counts.cols()));
  Matrix cost = Matrix::Zero(m, m);  // rectangular tables padded with zeros
  for (int r = 0; r < tab.counts.rows(); ++r)
    for (int c = 0; c < tab.counts.cols(); ++c) cost(r, c) = -static_cast<double>(tab.counts(r, c));
  std::vector<int> perm = hungarian_assignment(cost);
  long matched = 0;
  for (int r = 0; r < tab.counts.rows(); ++r) {
    int c = perm[static_cast<size_t>(r)];
    if (c < tab.counts.cols()) matched += tab.counts(r, c);
  }
  return static_cast<double>(matched) / static_cast<double>(tab.total);
}

double nmi(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.empty()) throw dimension_error("nmi needs at least one sample");
  ContingencyTable tab = ContingencyTable::from_labels(predicted, truth);
  const double n = static_cast<double>(tab.total);
  double hp = 0.0, ht = 0.0, mi = 0.0;
  for (int m : tab.row_marginals)
    if (m > 0) hp -= (m / n) * std::log(m / n);
  for (int m : tab.col_marginals)
    if (m > 0) ht -= (m / n) * std::log(m / n);
  for (int r = 0; r < tab.counts.rows(); ++r)
    for (int c = 0; c < tab.counts.cols(); ++c) {
      int cnt = tab.counts(r, c);
      if (cnt == 0) continue;
      double pij = cnt / n;
      mi += pij * std::log(n * cnt /
                           (static_cast<double>(tab.row_marginals[static_cast<size_t>(r)]) *
                            static_cast<double>(tab.col_marginals[static_cast<size_t>(c)])));
    }
  double denom = std::max(hp, ht);
  if (denom == 0.0) {
    // both partitions constant: same partition by definition
    return 1.0;
  }
  double v = mi / denom;
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace srsg
