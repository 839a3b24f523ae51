#include "svi/oracle.hpp"

#include "svi/problem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace svi {

namespace {

// Scalar resolvent of B x = b*x: (I + lambda B)^{-1} x = x / (1 + lambda b).
double scalar_resolvent(double b, double lambda, double x) {
  return x / (1.0 + lambda * b);
}

}  // namespace

double scalar_oracle_step(const ScalarSviInstance& inst, Variant variant,
                          double lambda, double alpha_or_gamma, double z) {
  if (!(lambda > 0)) throw std::invalid_argument("scalar_oracle_step: lambda must be positive");
  // T = J_lambda^{B2}(I - lambda f2) evaluated at A z.
  const double az = inst.a * z;
  const double taz = scalar_resolvent(inst.b2, lambda, az - lambda * (inst.fc2 * az));
  const double sz = inst.a * (az - taz);  // A*(I - T)A z with scalar adjoint a

  if (variant == Variant::moudafi) {
    const double gamma = alpha_or_gamma;
    const double w = z - gamma * sz;
    return scalar_resolvent(inst.b1, lambda, w - lambda * (inst.fc1 * w));
  }
  const double alpha = variant == Variant::regularized ? alpha_or_gamma : 0.0;
  double arg = z - lambda * (inst.fc1 * z) - lambda * sz;
  if (alpha != 0.0) arg -= (lambda * alpha) * (inst.fF * z);
  return scalar_resolvent(inst.b1, lambda, arg);
}

SviProblem scalar_instance_problem(const ScalarSviInstance& inst) {
  SviProblem p;
  p.B1 = make_scaled_identity_monotone(inst.b1, 1);
  p.B2 = make_scaled_identity_monotone(inst.b2, 1);
  p.f1 = make_diagonal_ism(Vec::Constant(1, inst.fc1));
  p.f2 = make_diagonal_ism(Vec::Constant(1, inst.fc2));
  p.A = make_scaled_identity_operator(inst.a, 1);
  p.F = make_scaled_identity_strongly_monotone(inst.fF, 1);
  p.label = "scalar-instance";
  return p;
}

GradCheckReport finite_diff_grad_check(const std::function<double(const Vec&)>& objective,
                                       const IsmMapping& grad, int samples, double h,
                                       std::uint64_t seed) {
  if (!(h > 0)) throw std::invalid_argument("finite_diff_grad_check: h must be positive");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x = 2.0 * random_normal(grad.dim, rng);
    Vec g = grad.apply(x);
    for (int i = 0; i < grad.dim; ++i) {
      Vec xp = x, xm = x;
      xp(i) += h;
      xm(i) -= h;
      double diff = (objective(xp) - objective(xm)) / (2.0 * h);
      double rel = std::abs(diff - g(i)) / std::max(1.0, std::abs(g(i)));
      worst = std::max(worst, rel);
    }
  }
  return {worst, worst <= 1e-6};
}

IsmCheckReport ism_constant_sampled(const std::function<Vec(const Vec&)>& f, int dim,
                                    double claimed_tau, int samples,
                                    std::uint64_t seed) {
  if (!(claimed_tau > 0))
    throw std::invalid_argument("ism_constant_sampled: claimed_tau must be positive");
  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  int used = 0;
  for (int s = 0; s < samples; ++s) {
    Vec x = 3.0 * random_normal(dim, rng);
    Vec y = 3.0 * random_normal(dim, rng);
    Vec df = f(x) - f(y);
    double denom = df.squaredNorm();
    if (denom == 0.0) continue;  // degenerate pair, nothing to bound
    ++used;
    worst = std::min(worst, df.dot(x - y) / denom);
  }
  if (used == 0) return {std::numeric_limits<double>::infinity(), true, 0};
  return {worst, worst >= claimed_tau - 1e-9, used};
}

}  // namespace svi
