#include "srsg/l1_graph.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace srsg {

double gram_spectral_norm(const Matrix& x) {
  // eigvals of X X^T and X^T X agree; take the smaller side
  Matrix gram = x.rows() <= x.cols() ? Matrix(x * x.transpose()) : Matrix(x.transpose() * x);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  double v = es.eigenvalues().maxCoeff();
  return v > 0.0 ? v : 0.0;
}

double lasso_objective(const Dataset& data, Eigen::Index i, const Vector& z, double lambda) {
  return (data.points.col(i) - data.points * z).squaredNorm() + lambda * z.lpNorm<1>();
}

double kkt_residual(const Dataset& data, Eigen::Index i, const Vector& z, double lambda) {
  Vector g = 2.0 * (data.points.transpose() * (data.points * z - data.points.col(i)));
  double worst = 0.0;
  for (Eigen::Index t = 0; t < z.size(); ++t) {
    if (t == i) continue;
    double r = is_nonzero(z(t)) ? std::abs(g(t) + lambda * (z(t) > 0 ? 1.0 : -1.0))
                                : std::max(std::abs(g(t)) - lambda, 0.0);
    worst = std::max(worst, r);
  }
  return worst;
}

LassoResult solve_lasso_column(const Dataset& data, Eigen::Index i, const LassoConfig& cfg) {
  return solve_lasso_column(data, i, cfg, gram_spectral_norm(data.points));
}

LassoResult solve_lasso_column(const Dataset& data, Eigen::Index i, const LassoConfig& cfg,
                               double lipschitz) {
  const Matrix& x = data.points;
  const Eigen::Index n = x.cols();
  if (i < 0 || i >= n) throw parameter_error("column index out of range");
  const Vector xi = x.col(i);
  const double lf = 2.0 * lipschitz;
  const double step = lf > 0.0 ? 1.0 / lf : 1.0;
  const double thr = step * cfg.lambda_l1;  // prox of step * lambda * ||.||_1

  LassoResult res;
  Vector z = Vector::Zero(n);
  Vector y = z, z_prev = z;
  double t = 1.0;
  for (int k = 0; k < cfg.max_iters; ++k) {
    Vector g = 2.0 * (x.transpose() * (x * y - xi));
    g(i) = 0.0;
    Vector u = y - step * g;
    Vector z_new(n);
    for (Eigen::Index m = 0; m < n; ++m) {
      double a = std::abs(u(m)) - thr;
      z_new(m) = a > 0.0 ? (u(m) > 0 ? a : -a) : 0.0;
    }
    z_new(i) = 0.0;

    res.iterations = k + 1;
    if ((k + 1) % 10 == 0 || k + 1 == cfg.max_iters) {
      double r = kkt_residual(data, i, z_new, cfg.lambda_l1);
      if (r <= cfg.kkt_tol) {
        res.z = std::move(z_new);
        res.kkt = r;
        res.converged = true;
        return res;
      }
    }

    // adaptive restart: momentum opposing the step direction resets it
    Vector diff = z_new - z;
    if ((y - z_new).dot(diff) > 0.0) {
      t = 1.0;
      y = z_new;
    } else {
      double t_new = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      y = z_new + ((t - 1.0) / t_new) * diff;
      t = t_new;
    }
    z = std::move(z_new);
  }
  res.z = z;
  res.kkt = kkt_residual(data, i, z, cfg.lambda_l1);
  res.converged = res.kkt <= cfg.kkt_tol;
  return res;
}

L1Codes build_l1_codes(const Dataset& data, const LassoConfig& cfg) {
  const Eigen::Index n = data.size();
  const double lip = gram_spectral_norm(data.points);
  Matrix z(n, n);
  std::vector<LassoResult> cols(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index i = 0; i < n; ++i) {
    LassoResult r = solve_lasso_column(data, i, cfg, lip);
    z.col(i) = r.z;
    r.z.resize(0);
    cols[static_cast<size_t>(i)] = std::move(r);
  }
  L1Codes out;
  out.codes = SparseCodeMatrix(std::move(z));
  out.columns = std::move(cols);
  for (const auto& c : out.columns)
    if (!c.converged) ++out.non_converged;
  return out;
}

}  // namespace srsg
