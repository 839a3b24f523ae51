#pragma once

#include "svi/solver.hpp"

// Independent brute-force oracles certifying derived values and sampled
// properties. The scalar step oracle is written in plain double arithmetic
// against the displayed formulas and shares no code with the vector solver:
// independence is the point.

namespace svi {

// 1-D problem instance: B1 x = b1*x, B2 x = b2*x, f1 x = fc1*x, f2 x = fc2*x,
// A x = a*x, F x = fF*x.
struct ScalarSviInstance {
  double b1 = 0.0, b2 = 0.0;  // >= 0
  double fc1 = 1.0, fc2 = 1.0, fF = 1.0;  // > 0
  double a = 1.0;
};

// Closed-form scalar evaluation of one step of the chosen scheme, using
// only J_lambda(x) = x/(1 + lambda*b). For the moudafi variant the fourth
// argument is gamma; for regularized it is alpha; ignored for
// forward_backward.
double scalar_oracle_step(const ScalarSviInstance& inst, Variant variant,
                          double lambda, double alpha_or_gamma, double z);

// The dim-1 SviProblem matching a scalar instance, for solver-vs-oracle
// equivalence tests.
SviProblem scalar_instance_problem(const ScalarSviInstance& inst);

struct GradCheckReport {
  double max_rel_error = 0.0;
  bool pass = false;
};

// Central finite differences of the objective against the claimed gradient
// on seeded points; pass threshold 1e-6 relative at h = 1e-5.
GradCheckReport finite_diff_grad_check(const std::function<double(const Vec&)>& objective,
                                       const IsmMapping& grad, int samples,
                                       double h, std::uint64_t seed);

struct IsmCheckReport {
  double worst_ratio = 0.0;  // min over pairs of <fx-fy,x-y>/||fx-fy||^2
  bool pass = false;         // worst_ratio >= claimed_tau - 1e-9
  int pairs_used = 0;        // degenerate pairs (fx == fy) are skipped
};

// Samples seeded pairs and reports the worst inverse-strong-monotonicity
// ratio against a claimed modulus.
IsmCheckReport ism_constant_sampled(const std::function<Vec(const Vec&)>& f, int dim,
                                    double claimed_tau, int samples,
                                    std::uint64_t seed);

}  // namespace svi
