#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

// Finite-dimensional Hilbert-space primitives: vectors, inner products,
// bounded linear operators with adjoints, and operator-norm estimation.

namespace svi {

using Vec = Eigen::VectorXd;

// A bounded linear operator H1 -> H2 given by its action and the action of
// its adjoint. When the squared operator norm is known analytically it can
// be supplied as a hint so downstream step-size bounds carry no estimator
// noise.
struct LinearOperator {
  int domain_dim = 0;
  int codomain_dim = 0;
  std::function<Vec(const Vec&)> apply;
  std::function<Vec(const Vec&)> apply_adjoint;
  std::optional<double> norm_sq_hint;
  std::string label;
};

double inner(const Vec& x, const Vec& y);
double norm(const Vec& x);

Vec apply_operator(const LinearOperator& A, const Vec& x);
Vec apply_adjoint(const LinearOperator& A, const Vec& y);

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Largest eigenvalue of A*A, i.e. the squared operator norm. Returns the
// analytic hint when present; otherwise runs power iteration from a
// deterministic start (all-ones when no seed is given, seeded normal
// otherwise) until successive Rayleigh quotients differ by less than tol.
NormEstimate estimate_norm_sq(const LinearOperator& A, int max_iters = 500,
                              double tol = 1e-12,
                              std::optional<std::uint64_t> seed = std::nullopt);

struct AdjointReport {
  double max_error = 0.0;
  bool pass = false;
};

// Samples seeded (x, y) pairs and reports the worst |<Ax,y> - <x,A*y>|
// against the 1e-10 acceptance threshold.
AdjointReport check_adjoint_consistency(const LinearOperator& A, int samples,
                                        std::uint64_t seed);

// Standard-normal sample, the shared primitive behind all sampled checks.
Vec random_normal(int dim, std::mt19937_64& rng);

// ---- operator constructors -------------------------------------------------

// The shift-and-scale operator of the first built-in experiment on R^dim:
// (Ax)_1 = x_1, (Ax)_2 = x_1, (Ax)_k = x_{k-1}/(k-1) for 3 <= k <= dim.
// Its squared norm is exactly 2 (attained on e_1), supplied as a hint.
LinearOperator make_example1_operator(int dim);

LinearOperator make_scaled_identity_operator(double c, int dim);
LinearOperator make_zero_operator(int domain_dim, int codomain_dim);
LinearOperator make_dense_operator(const Eigen::MatrixXd& M, std::string label = "dense");

}  // namespace svi
