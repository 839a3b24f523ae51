#pragma once

#include "svi/operators.hpp"

// The split variational inclusion problem model, the split-minimization and
// split-VIP reductions, the two built-in experiments, and the stopping
// functionals used by the solvers and the benchmark harness.

namespace svi {

// Find x* with 0 in B1(x*) + f1(x*) such that y* = A x* satisfies
// 0 in B2(y*) + f2(y*). F is the strongly monotone regularizer used by the
// regularized scheme. known_solution, when present, enables distance-based
// stopping and convergence diagnostics.
struct SviProblem {
  ResolventOperator B1, B2;
  IsmMapping f1, f2;
  LinearOperator A;
  StronglyMonotoneMapping F;
  std::optional<Vec> known_solution;
  std::string label;

  int dim1() const { return B1.dim; }
  int dim2() const { return B2.dim; }
  double tau_tilde() const { return std::min(f1.tau, f2.tau); }
  // Squared norm of A: analytic hint when available, estimate otherwise.
  double norm_sq_A() const;
};

// Split convex minimization data: E = e1 + e2 and G = g1 + g2 with e1, g1
// proper lsc convex (given through their prox) and e2, g2 differentiable
// with Lipschitz gradients (given through the gradients).
struct ScmpSpec {
  ResolventOperator prox_e1, prox_g1;
  IsmMapping grad_e2, grad_g2;
  LinearOperator A;
  StronglyMonotoneMapping F;
  std::optional<Vec> known_solution;
  std::string label;
};

// Split variational inequality data over closed convex sets C, Q.
struct SvipSpec {
  ConvexSetDescriptor C, Q;
  IsmMapping f1, f2;
  LinearOperator A;
  StronglyMonotoneMapping F;
  std::optional<Vec> known_solution;
  std::string label;
};

// B1 := prox of e1's subdifferential, B2 := prox of g1's, f1 := grad e2,
// f2 := grad g2; moduli carried over.
SviProblem scmp_to_svi(const ScmpSpec& spec);

// B1, B2 := normal cones of C, Q; resolvents are the metric projections.
SviProblem svip_to_svi(const SvipSpec& spec);

// First experiment on R^dim (truncation of l2): B1 = 3*Id, B2 = 7*Id,
// f1 = 2x (tau 1/2), f2 = diag(1/i) (tau 1), F = 4x, A the shift operator
// with ||A||^2 = 2; the solution is 0.
SviProblem build_example1(int dim = 200);

// Second experiment on R^3: split minimization of
// E(x) = ||x||^2 + (1,1,-3).x + 2 + ||x||_1 and
// G(y) = ||y||^2 + (1,1,-5).y - 3 + ||y||_1 with A = 2*Id, F = 2x;
// the solution is (0,0,1) with image (0,0,2).
SviProblem build_example2();

// Residual stopping functional:
// ||z - J_lambda^{B1}(z - f1(z))|| + ||Az - J_lambda^{B2}(Az - f2(Az))||.
// Note f1, f2 are NOT multiplied by lambda inside the resolvent argument;
// the benchmark iteration counts assume this exact form.
double residual_tol(const SviProblem& p, double lambda, const Vec& z);

// Distance stopping functional ||z - x*|| + ||Az - y*||.
double distance_tol(const Vec& z, const Vec& x_star, const LinearOperator& A,
                    const Vec& y_star);

// (1/rho) * min(tau_tilde, 1/||A||^2), the strict upper bound for lambda_n.
// Requires rho > 2.
double lambda_upper_bound(const SviProblem& p, double rho);

// Built-in initial points: "Ia".."Id" are the geometric sequences of the
// first experiment (dim entries), "IIa".."IId" the R^3 points of the second.
Vec case_initial(const std::string& name, int dim = 200);

// Objectives of the second experiment's smooth parts (used by gradient
// finite-difference validation): e2(x) = ||x||^2 + (1,1,-3).x + 2 and
// g2(y) = ||y||^2 + (1,1,-5).y - 3.
double example2_e2(const Vec& x);
double example2_g2(const Vec& y);

}  // namespace svi
