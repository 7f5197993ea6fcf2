#pragma once

#include "srsg/common.hpp"
#include "srsg/dataset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srsg {

struct SolverConfig {
  int max_iters = 1000;        // M_p
  double safety = 0.9;         // multiplies the theoretical step bound
  int stable_window = 10;      // consecutive stable-support iterations to stop
  double objective_tol = 1e-10;  // |dF~| stop threshold; 0 forces a full run
  int max_restarts = 5;        // gradient-bound violations tolerated
  double g_margin = 1.1;       // multiplier on the initial gradient bound
  bool record_history = false;  // keep per-iteration z and v copies
  std::optional<double> step_override;        // fixed s for experiments
  std::optional<double> grad_bound_override;  // fixed G for experiments
};

struct StepBounds {
  double s_max = 0.0;
  double l_f = 0.0;
  double tau = 0.0;  // +inf when the positive set is empty
};

struct TraceRecord {
  int k = 0;
  double objective = 0.0;  // F~ at z^(k)
  int support_size = 0;    // |supp(z_C^(k))|
  double grad_norm = 0.0;  // ||grad f(m^(k))||
  double step_s = 0.0;
  double lambda_k = 0.0;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;                 // k = 1..K
  std::vector<std::vector<int>> support_history;    // supp(z_C^(k)), k = 0..K
  std::vector<Vector> z_history;                    // only when record_history
  std::vector<Vector> v_history;                    // includes k = 0
  void save(const std::string& path) const;
};

struct FpgdResult {
  Vector z;        // final iterate
  ConvergenceTrace trace;
  bool certified = false;  // gradient bound held for the whole accepted run
  int restarts = 0;
  int iterations = 0;
  double s = 0.0;
  double eta = 0.0;
  double grad_bound = 0.0;
  double l_f = 0.0;
  double tau = 0.0;
  double objective = 0.0;  // F~ at the final iterate
};

struct Certificate {
  double u_norm = 0.0;
  double bound = 0.0;
  bool pass = false;
};

// Theorem-style rate report computed from a recorded run.
struct RateReport {
  int k0 = 0;            // first iteration of the terminal support of z_C
  double f_star = 0.0;   // F~(z*)
  double u_k0 = 0.0;     // U^(k0)
  Vector z_star;         // restricted least-squares comparator
  std::vector<double> gaps;    // F~(z^(k)) - F~(z*), k = k0..K
  std::vector<double> bounds;  // U^(k0) / (k (k+1))
};

// Element-wise hard thresholding: coordinate t goes to zero when c_ti > 0 and
// |u_t| <= sqrt(2 s gamma c_ti) (ties zeroed), or t = i; otherwise kept.
Vector prox_hard_threshold(const Vector& u, double s, double gamma, const Vector& c_col,
                           Eigen::Index i);

// Keeps coordinates in `keep`, zeroes the rest.
Vector support_project(const Vector& u, const std::vector<int>& keep);

// L_f = 2 sigma_max(X^T X); tau = gamma * min positive c; s_max = min(2 tau / G^2, 1 / L_f).
// Empty positive set: tau = +inf and s_max = 1 / L_f (no thresholding active).
StepBounds step_size_bounds(const Dataset& data, const Vector& c_col, double gamma, double grad_bound);
StepBounds step_size_bounds(double lipschitz_gram, const Vector& c_col, double gamma, double grad_bound);

struct SolverState {
  Vector z;
  Vector v;
  int k = 0;  // completed iterations
};

enum class StepStatus { Ok, GradBoundExceeded };

struct StepInfo {
  StepStatus status = StepStatus::Ok;
  double grad_norm = 0.0;
};

// One iteration of the four-update scheme:
//   m = (1-a_k) z + a_k v,  a_k = 2/(k+1)
//   z <- prox_{s h}(m - s grad f(m))
//   vt = v - lambda_k grad f(m),  lambda_k = eta k
//   v <- P_{(C \cap supp z) \cup C-complement}(vt)
// Gradient coordinate i is forced to zero (the z_i = 0 hyperplane).
StepInfo fpgd_step(SolverState& state, Eigen::Index i, const Dataset& data, const Vector& c_col,
                   double gamma, double s, double eta, double grad_bound);

// Full solve from z0. On a gradient-bound violation the bound is doubled, the
// step recomputed, and the run restarted from z0 (bounded retries); exhausted
// retries leave certified = false.
FpgdResult run_fpgd(const Vector& z0, Eigen::Index i, const Dataset& data, const Vector& c_col,
                    double gamma, const SolverConfig& cfg);
FpgdResult run_fpgd(const Vector& z0, Eigen::Index i, const Dataset& data, const Vector& c_col,
                    double gamma, const SolverConfig& cfg, double lipschitz_gram);

// Least-squares minimizer over coordinates (support ∪ {t : c_t <= 0}) \ {i};
// normal equations with 1e-12 ridge jitter on rank deficiency.
Vector restricted_least_squares(const Dataset& data, Eigen::Index i, const std::vector<int>& support,
                                const Vector& c_col);

// First iteration k >= 1 whose z_C support equals the terminal one and stays.
int detect_k0(const ConvergenceTrace& trace);

// Gap/bound series for the final stage; needs record_history = true.
RateReport rate_report(const FpgdResult& result, Eigen::Index i, const Dataset& data,
                       const Vector& c_col, double gamma);

// Near-stationarity certificate: perturbs the zero coordinates with negative
// coefficient by eps, evaluates the smallest-norm subgradient of the full
// column objective there, and compares against L_f |C| eps.
Certificate stationarity_certificate(const Vector& z_star, Eigen::Index i, const Dataset& data,
                                     const Vector& c_col, double gamma, double eps);
Certificate stationarity_certificate(const Vector& z_star, Eigen::Index i, const Dataset& data,
                                     const Vector& c_col, double gamma, double eps,
                                     double lipschitz_gram);

}  // namespace srsg
