#pragma once

#include "svi/problem.hpp"

#include <vector>

// The three iterative schemes, schedule validation, the fixed-alpha
// regularized subproblem solver, and the regularization-path experiment.

namespace svi {

enum class Variant { regularized, forward_backward, moudafi };
enum class StopRule { residual, distance };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Parameter schedules n -> (alpha_n, lambda_n), n >= 1. The conditions they
// are validated against: alpha_n in (0,1) decreasing to 0 with divergent
// sum, |alpha_{n+1}-alpha_n|/alpha_n^2 -> 0, and
// c < lambda_n < (1/rho) min(tau_tilde, 1/||A||^2) with rho > 2.
struct Schedule {
  std::function<double(int)> alpha_at;
  std::function<double(int)> lambda_at;
  double rho = 2.5;
  double c = 1e-8;
  std::string label;
};

// alpha_n = p/(sqrt(q*n + r) + s), lambda_n = n/(u*n + v): the parametric
// family covering both built-in experiments.
Schedule schedule_from_coeffs(double p, double q, double r, double s, double u,
                              double v, std::string label = "custom");
Schedule schedule_ex1();  // alpha_n = 3/(sqrt(n)+3),            lambda_n = n/(7n+3)
Schedule schedule_ex2();  // alpha_n = 0.01/(sqrt(500n+2)+2),    lambda_n = n/(14n+1)
Schedule schedule_constant(double alpha, double lambda, std::string label = "constant");

struct SolverConfig {
  Variant variant = Variant::regularized;
  int max_iter = 1000;
  double tol = 1e-6;
  StopRule stop_rule = StopRule::residual;
  double moudafi_lambda = 0.1;
  double moudafi_gamma = 0.1;
  // When false the per-iteration elapsed_ms entries are recorded as zero so
  // emitted traces are byte-stable across runs (bench mode).
  bool record_timing = true;
};

struct TraceRow {
  int n = 0;  // 1-based step index
  double tol_value = 0.0;
  double step_norm = 0.0;  // ||z_{n+1} - z_n||
  double alpha_n = 0.0;    // 0 for the variants that use no regularization
  double lambda_n = 0.0;
  std::optional<double> dist_to_known;  // ||z_{n+1} - known_solution||
  double elapsed_ms = 0.0;
};

struct IterationTrace {
  std::vector<TraceRow> rows;
  // Full iterates are stored only for dim <= 16 (memory hygiene at dim 200).
  std::vector<Vec> iterates;
};

struct SolveResult {
  Vec final_iterate;
  int iterations = 0;
  bool converged = false;
  double final_tol = 0.0;
  // Moudafi gamma outside (0, 1/||A||^2): the bound is sufficient, not
  // necessary, so the run proceeds with a warning flag.
  bool gamma_warning = false;
  IterationTrace trace;
};

// One step of the regularized scheme:
// J_lambda^{B1}(z - lambda f1(z) - lambda A*(I - J_lambda^{B2}(I - lambda f2))A z
//               - lambda alpha F(z)).
Vec step_regularized(const SviProblem& p, const Vec& z, double lambda, double alpha);

// The alpha = 0 specialization (shares the regularized code path bitwise).
Vec step_forward_backward(const SviProblem& p, const Vec& z, double lambda);

// w = z - gamma A*(I - T)A z with T = J_lambda^{B2}(I - lambda f2), then
// J_lambda^{B1}(w - lambda f1(w)).
Vec step_moudafi(const SviProblem& p, const Vec& z, double lambda, double gamma);

// Iterates the selected scheme from z1. The stopping criterion (residual
// with the lambda of the current iteration, or distance to the known
// solution) is evaluated AFTER each step; the reported iteration count is
// the index of the step that first achieves it. On max_iter exhaustion the
// result is returned with converged = false.
SolveResult run(const SviProblem& p, const Schedule& sched, const SolverConfig& cfg,
                const Vec& z1);

struct ScheduleReport {
  bool hard_pass = true;       // per-term membership and rho > 2
  bool advisory_pass = true;   // finite-horizon trend checks
  std::vector<std::string> violations;   // hard failures
  std::vector<std::string> advisories;   // trend diagnostics
  double b2_ratio_first = 0.0;  // |alpha_2-alpha_1|/alpha_1^2
  double b2_ratio_last = 0.0;   // the same ratio at the horizon
};

// Hard checks: rho > 2, alpha_n in (0,1) and c < lambda_n < bound for all
// n <= horizon. Advisory trends: alpha decays, partial sums keep growing,
// the |dalpha|/alpha^2 ratio decreases toward 0. Limits are undecidable from
// samples, hence the advisory verdict.
ScheduleReport validate_schedule(const Schedule& s, const SviProblem& p, int horizon);

struct FixedAlphaResult {
  Vec x;
  bool converged = false;
  int iterations = 0;
};

// Solves the regularized inclusion 0 in (B1 + f1 + A*(I-T)A + alpha F)(x)
// for fixed alpha > 0 by iterating the regularized step with constant
// (lambda, alpha) until ||z_{k+1} - z_k|| <= tol. The regularized operator
// is strongly monotone, so the iteration contracts.
FixedAlphaResult solve_rsvi_fixed_alpha(const SviProblem& p, double alpha,
                                        double lambda, double tol = 1e-12,
                                        int max_iter = 100000);

struct PathRow {
  double alpha = 0.0;
  bool converged = false;
  double norm_x = 0.0;
  std::optional<double> dist_to_known;
  // ||x_{a1} - x_{a2}|| * a1 / (a1 - a2) for this row and its predecessor
  // (a1 the larger); empty on the first row.
  std::optional<double> ratio;
};

struct PathReport {
  std::vector<PathRow> rows;
  double empirical_M = 0.0;  // max consecutive-pair ratio (smallest valid M)
  double max_norm = 0.0;     // boundedness probe for the net {x_alpha}
  bool all_converged = true;
};

// Computes x_alpha along a strictly decreasing list of alphas and reports
// boundedness, the empirical Lipschitz-in-alpha constant, and distances to
// the known solution when available.
PathReport regularization_path(const SviProblem& p, const std::vector<double>& alphas,
                               double lambda, double tol = 1e-12);

}  // namespace svi
