#include "svi/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace svi {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::regularized: return "regularized";
    case Variant::forward_backward: return "forward_backward";
    case Variant::moudafi: return "moudafi";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "regularized") return Variant::regularized;
  if (name == "forward_backward") return Variant::forward_backward;
  if (name == "moudafi") return Variant::moudafi;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

Schedule schedule_from_coeffs(double p, double q, double r, double s, double u,
                              double v, std::string label) {
  Schedule sched;
  sched.alpha_at = [p, q, r, s](int n) { return p / (std::sqrt(q * n + r) + s); };
  sched.lambda_at = [u, v](int n) { return n / (u * n + v); };
  sched.label = std::move(label);
  return sched;
}

Schedule schedule_ex1() { return schedule_from_coeffs(3, 1, 0, 3, 7, 3, "ex1"); }

Schedule schedule_ex2() { return schedule_from_coeffs(0.01, 500, 2, 2, 14, 1, "ex2"); }

Schedule schedule_constant(double alpha, double lambda, std::string label) {
  Schedule sched;
  sched.alpha_at = [alpha](int) { return alpha; };
  sched.lambda_at = [lambda](int) { return lambda; };
  sched.label = std::move(label);
  return sched;
}

Vec step_regularized(const SviProblem& p, const Vec& z, double lambda, double alpha) {
  require(lambda > 0, "step_regularized: lambda must be positive");
  require(alpha >= 0, "step_regularized: alpha must be nonnegative");
  Vec az = p.A.apply(z);
  Vec taz = forward_backward_map(p.B2, p.f2, lambda, az);
  Vec sz = p.A.apply_adjoint(az - taz);
  Vec arg = z - lambda * p.f1.apply(z) - lambda * sz;
  // Branch instead of multiplying by alpha = 0 so the forward-backward
  // specialization is the same arithmetic bit for bit.
  if (alpha != 0.0) arg -= (lambda * alpha) * p.F.apply(z);
  return p.B1.resolvent(lambda, arg);
}

Vec step_forward_backward(const SviProblem& p, const Vec& z, double lambda) {
  return step_regularized(p, z, lambda, 0.0);
}

Vec step_moudafi(const SviProblem& p, const Vec& z, double lambda, double gamma) {
  require(lambda > 0, "step_moudafi: lambda must be positive");
  require(gamma > 0, "step_moudafi: gamma must be positive");
  Vec az = p.A.apply(z);
  Vec taz = forward_backward_map(p.B2, p.f2, lambda, az);
  Vec w = z - gamma * p.A.apply_adjoint(az - taz);
  return p.B1.resolvent(lambda, w - lambda * p.f1.apply(w));
}

SolveResult run(const SviProblem& p, const Schedule& sched, const SolverConfig& cfg,
                const Vec& z1) {
  require(cfg.max_iter >= 1, "run: max_iter must be >= 1");
  require(cfg.tol > 0, "run: tol must be positive");
  require(static_cast<int>(z1.size()) == p.dim1(), "run: z1 has wrong dimension");
  require(cfg.stop_rule == StopRule::residual || p.known_solution.has_value(),
          "run: distance stopping needs a known solution");

  SolveResult result;
  std::optional<Vec> y_star;
  if (p.known_solution) y_star = p.A.apply(*p.known_solution);

  if (cfg.variant == Variant::moudafi) {
    double bound = 1.0 / p.norm_sq_A();
    if (!(cfg.moudafi_gamma > 0.0 && cfg.moudafi_gamma < bound))
      result.gamma_warning = true;  // sufficient bound only; proceed
  }

  const bool keep_iterates = p.dim1() <= 16;
  Vec z = z1;
  if (keep_iterates) result.trace.iterates.push_back(z);

  for (int n = 1; n <= cfg.max_iter; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    double lambda = cfg.variant == Variant::moudafi ? cfg.moudafi_lambda
                                                    : sched.lambda_at(n);
    double alpha = cfg.variant == Variant::regularized ? sched.alpha_at(n) : 0.0;

    Vec znew;
    switch (cfg.variant) {
      case Variant::regularized:
        znew = step_regularized(p, z, lambda, alpha);
        break;
      case Variant::forward_backward:
        znew = step_forward_backward(p, z, lambda);
        break;
      case Variant::moudafi:
        znew = step_moudafi(p, z, lambda, cfg.moudafi_gamma);
        break;
    }

    // Check-after-step: the criterion is evaluated at the fresh iterate with
    // the lambda of the step just taken; the count below is the index of the
    // step that first achieves it.
    double tol_value = cfg.stop_rule == StopRule::residual
                           ? residual_tol(p, lambda, znew)
                           : distance_tol(znew, *p.known_solution, p.A, *y_star);

    TraceRow row;
    row.n = n;
    row.tol_value = tol_value;
    row.step_norm = (znew - z).norm();
    row.alpha_n = alpha;
    row.lambda_n = lambda;
    if (p.known_solution) row.dist_to_known = (znew - *p.known_solution).norm();
    row.elapsed_ms = cfg.record_timing ? elapsed_ms_since(t0) : 0.0;
    result.trace.rows.push_back(row);

    z = std::move(znew);
    if (keep_iterates) result.trace.iterates.push_back(z);

    result.iterations = n;
    result.final_tol = tol_value;
    if (tol_value <= cfg.tol) {
      result.converged = true;
      break;
    }
  }

  result.final_iterate = std::move(z);
  return result;
}

ScheduleReport validate_schedule(const Schedule& s, const SviProblem& p, int horizon) {
  require(horizon >= 10, "validate_schedule: horizon must be >= 10");
  ScheduleReport report;

  if (!(s.rho > 2)) {
    report.hard_pass = false;
    report.violations.push_back("rho must exceed 2 (got " + std::to_string(s.rho) + ")");
    return report;
  }
  if (!(s.c > 0)) {
    report.hard_pass = false;
    report.violations.push_back("lambda lower bound c must be positive");
  }
  const double bound = lambda_upper_bound(p, s.rho);

  double alpha_first = s.alpha_at(1);
  double alpha_last = s.alpha_at(horizon);
  double sum_all = 0.0, sum_first_half = 0.0;
  int membership_violations = 0;
  for (int n = 1; n <= horizon; ++n) {
    double a = s.alpha_at(n);
    double l = s.lambda_at(n);
    if (!(a > 0.0 && a < 1.0) || !(l > s.c && l < bound)) {
      if (++membership_violations <= 3) {
        std::string what;
        if (!(a > 0.0 && a < 1.0))
          what = "alpha_" + std::to_string(n) + " = " + std::to_string(a) +
                 " outside (0,1)";
        else
          what = "lambda_" + std::to_string(n) + " = " + std::to_string(l) +
                 " outside (" + std::to_string(s.c) + ", " + std::to_string(bound) + ")";
        report.violations.push_back(what);
      }
    }
    sum_all += a;
    if (n <= horizon / 2) sum_first_half += a;
  }
  if (membership_violations > 0) {
    report.hard_pass = false;
    if (membership_violations > 3)
      report.violations.push_back("... and " + std::to_string(membership_violations - 3) +
                                  " more per-term violations");
  }

  auto b2_ratio = [&s](int n) {
    double a = s.alpha_at(n);
    return std::abs(s.alpha_at(n + 1) - a) / (a * a);
  };
  report.b2_ratio_first = b2_ratio(1);
  report.b2_ratio_last = b2_ratio(horizon);

  // Trend diagnostics over the finite horizon; limits are undecidable from
  // samples, so these are advisory.
  if (!(alpha_last <= 0.5 * alpha_first)) {
    report.advisory_pass = false;
    report.advisories.push_back("alpha_n shows no decay toward 0 over the horizon");
  }
  double tail = sum_all - sum_first_half;
  if (!(tail > 10.0 * alpha_first)) {
    report.advisory_pass = false;
    report.advisories.push_back("partial sums of alpha_n plateau (divergent-sum trend fails)");
  }
  if (!(report.b2_ratio_last <= report.b2_ratio_first)) {
    report.advisory_pass = false;
    report.advisories.push_back("|alpha_{n+1}-alpha_n|/alpha_n^2 is not decreasing");
  }
  return report;
}

FixedAlphaResult solve_rsvi_fixed_alpha(const SviProblem& p, double alpha, double lambda,
                                        double tol, int max_iter) {
  require(alpha > 0, "solve_rsvi_fixed_alpha: alpha must be positive");
  require(lambda > 0, "solve_rsvi_fixed_alpha: lambda must be positive");
  FixedAlphaResult res;
  Vec z = Vec::Zero(p.dim1());
  for (int k = 1; k <= max_iter; ++k) {
    Vec znew = step_regularized(p, z, lambda, alpha);
    double move = (znew - z).norm();
    z = std::move(znew);
    res.iterations = k;
    if (move <= tol) {
      res.converged = true;
      break;
    }
  }
  res.x = std::move(z);
  return res;
}

PathReport regularization_path(const SviProblem& p, const std::vector<double>& alphas,
                               double lambda, double tol) {
  require(!alphas.empty(), "regularization_path: alphas must be nonempty");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    require(alphas[i] > 0, "regularization_path: alphas must be positive");
    if (i > 0)
      require(alphas[i] < alphas[i - 1],
              "regularization_path: alphas must be strictly decreasing");
  }

  PathReport report;
  std::optional<Vec> prev_x;
  double prev_alpha = 0.0;
  for (double alpha : alphas) {
    FixedAlphaResult inner = solve_rsvi_fixed_alpha(p, alpha, lambda, tol);
    PathRow row;
    row.alpha = alpha;
    row.converged = inner.converged;
    row.norm_x = inner.x.norm();
    if (!inner.converged) report.all_converged = false;
    if (p.known_solution) row.dist_to_known = (inner.x - *p.known_solution).norm();
    if (prev_x && inner.converged) {
      // Lipschitz-in-alpha probe with the larger alpha in front:
      // ||x_{a1} - x_{a2}|| <= (|a1 - a2| / a1) * M.
      double r = (*prev_x - inner.x).norm() * prev_alpha / (prev_alpha - alpha);
      row.ratio = r;
      report.empirical_M = std::max(report.empirical_M, r);
    }
    report.max_norm = std::max(report.max_norm, row.norm_x);
    report.rows.push_back(row);
    prev_x = std::move(inner.x);
    prev_alpha = alpha;
  }
  return report;
}

}  // namespace svi
