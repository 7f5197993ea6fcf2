#include "srsg/support_reg.hpp"

namespace srsg {

int support_distance(const Vector& zi, const Vector& zj, int i, int j) {
  if (zi.size() != zj.size()) throw dimension_error("support_distance: length mismatch");
  int d = 0;
  for (Eigen::Index m = 0; m < zi.size(); ++m) {
    if (m == i || m == j) continue;
    if (is_nonzero(zi(m)) != is_nonzero(zj(m))) ++d;
  }
  return d;
}

Vector support_coefficients(const SparseCodeMatrix& z, const KnnGraph& knn, Eigen::Index i) {
  const Eigen::Index n = z.codes.rows();
  const auto& nbrs = knn.neighbors[static_cast<size_t>(i)];
  Vector c = Vector::Constant(n, static_cast<double>(nbrs.size()));
  // c_ti = (#neighbors with zero at t) - (#neighbors nonzero at t)
  //      = K - 2 * (#neighbors nonzero at t)
  for (int j : nbrs)
    for (Eigen::Index t = 0; t < n; ++t)
      if (is_nonzero(z.codes(t, j))) c(t) -= 2.0;
  return c;
}

SupportCoefficients support_coefficients_all(const SparseCodeMatrix& z, const KnnGraph& knn) {
  SupportCoefficients out;
  const Eigen::Index n = z.codes.rows();
  out.c.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.c.col(i) = support_coefficients(z, knn, i);
  return out;
}

double full_objective(const SparseCodeMatrix& z, const Dataset& data, const ObjectiveParams& p) {
  const Eigen::Index n = data.size();
  if (z.codes.cols() != n) throw dimension_error("full_objective: shape mismatch");
  double fit = (data.points - data.points * z.codes).squaredNorm();
  double reg = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (int j : p.knn->neighbors[static_cast<size_t>(i)])
      reg += support_distance(z.codes.col(i), z.codes.col(j), static_cast<int>(i), j);
  return fit + p.gamma * reg;
}

double column_objective(const Vector& z, Eigen::Index i, const Dataset& data,
                        const Vector& c_col, double gamma) {
  double fit = (data.points.col(i) - data.points * z).squaredNorm();
  double reg = 0.0;
  for (Eigen::Index t = 0; t < z.size(); ++t)
    if (is_nonzero(z(t))) reg += c_col(t);
  return fit + gamma * reg;
}

double simplified_objective(const Vector& z, Eigen::Index i, const Dataset& data,
                            const Vector& c_col, double gamma) {
  double fit = (data.points.col(i) - data.points * z).squaredNorm();
  double reg = 0.0;
  for (Eigen::Index t = 0; t < z.size(); ++t)
    if (c_col(t) > 0.0 && is_nonzero(z(t))) reg += c_col(t);
  return fit + gamma * reg;
}

}  // namespace srsg
