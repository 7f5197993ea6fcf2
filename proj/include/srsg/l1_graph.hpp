#pragma once

#include "srsg/common.hpp"
#include "srsg/dataset.hpp"
#include "srsg/sparse_codes.hpp"

#include <vector>

namespace srsg {

struct LassoConfig {
  double lambda_l1 = 0.1;
  int max_iters = 5000;
  double kkt_tol = 1e-6;
};

struct LassoResult {
  Vector z;
  int iterations = 0;
  double kkt = 0.0;
  bool converged = false;
};

struct L1Codes {
  SparseCodeMatrix codes;
  std::vector<LassoResult> columns;  // z omitted (moved into codes)
  int non_converged = 0;
};

// sigma_max(X^T X) = largest eigenvalue of the smaller Gram matrix.
double gram_spectral_norm(const Matrix& x);

// ||x_i - X z||^2 + lambda * ||z||_1
double lasso_objective(const Dataset& data, Eigen::Index i, const Vector& z, double lambda);

// Exact first-order optimality residual for the per-column problem, with
// g = 2 X^T (X z - x_i): |g_t + lambda*sign(z_t)| on the support,
// max(|g_t| - lambda, 0) off it, coordinate i excluded. Zero iff z optimal.
double kkt_residual(const Dataset& data, Eigen::Index i, const Vector& z, double lambda);

// Accelerated proximal gradient (soft thresholding, adaptive restart) on
// min ||x_i - X z||^2 + lambda ||z||_1 with coordinate i removed from the
// problem. Non-convergence is reported through the result flag, not thrown.
LassoResult solve_lasso_column(const Dataset& data, Eigen::Index i, const LassoConfig& cfg);
LassoResult solve_lasso_column(const Dataset& data, Eigen::Index i, const LassoConfig& cfg,
                               double lipschitz);

// All columns, independently (OpenMP over columns; per-column results are
// schedule-independent).
L1Codes build_l1_codes(const Dataset& data, const LassoConfig& cfg);

}  // namespace srsg
