#include "svi/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace svi {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_dims(const SviProblem& p) {
  require(p.B1.dim == p.f1.dim && p.B1.dim == p.F.dim && p.B1.dim == p.A.domain_dim,
          "SviProblem: H1 dimensions disagree");
  require(p.B2.dim == p.f2.dim && p.B2.dim == p.A.codomain_dim,
          "SviProblem: H2 dimensions disagree");
  require(p.tau_tilde() > 0, "SviProblem: tau_tilde must be positive");
  if (p.known_solution)
    require(static_cast<int>(p.known_solution->size()) == p.B1.dim,
            "SviProblem: known_solution has wrong dimension");
}

Vec geometric_vector(double first, double ratio, int dim) {
  Vec v(dim);
  double t = first;
  for (int i = 0; i < dim; ++i) {
    v(i) = t;
    t *= ratio;
  }
  return v;
}

}  // namespace

double SviProblem::norm_sq_A() const {
  return estimate_norm_sq(A).value;
}

SviProblem scmp_to_svi(const ScmpSpec& spec) {
  require(spec.prox_e1.dim == spec.grad_e2.dim && spec.prox_e1.dim == spec.A.domain_dim,
          "scmp_to_svi: H1 dimensions disagree");
  require(spec.prox_g1.dim == spec.grad_g2.dim && spec.prox_g1.dim == spec.A.codomain_dim,
          "scmp_to_svi: H2 dimensions disagree");
  SviProblem p;
  p.B1 = spec.prox_e1;
  p.B2 = spec.prox_g1;
  p.f1 = spec.grad_e2;
  p.f2 = spec.grad_g2;
  p.A = spec.A;
  p.F = spec.F;
  p.known_solution = spec.known_solution;
  p.label = spec.label.empty() ? "scmp" : spec.label;
  check_dims(p);
  return p;
}

SviProblem svip_to_svi(const SvipSpec& spec) {
  SviProblem p;
  p.B1 = make_projection_resolvent(spec.C);
  p.B2 = make_projection_resolvent(spec.Q);
  p.f1 = spec.f1;
  p.f2 = spec.f2;
  p.A = spec.A;
  p.F = spec.F;
  p.known_solution = spec.known_solution;
  p.label = spec.label.empty() ? "svip" : spec.label;
  check_dims(p);
  return p;
}

SviProblem build_example1(int dim) {
  require(dim >= 4, "build_example1: dim must be >= 4");
  SviProblem p;
  p.B1 = make_scaled_identity_monotone(3.0, dim);
  p.B2 = make_scaled_identity_monotone(7.0, dim);
  p.f1 = make_diagonal_ism(Vec::Constant(dim, 2.0));  // f1 x = 2x, tau 1/2
  Vec w(dim);
  for (int i = 0; i < dim; ++i) w(i) = 1.0 / (i + 1);
  p.f2 = make_diagonal_ism(w);  // f2 x = (x_1, x_2/2, x_3/3, ...), tau 1
  p.A = make_example1_operator(dim);
  p.F = make_scaled_identity_strongly_monotone(4.0, dim);
  p.known_solution = Vec::Zero(dim);
  p.label = "example1";
  check_dims(p);
  return p;
}

SviProblem build_example2() {
  const int dim = 3;
  ScmpSpec spec;
  spec.prox_e1 = make_l1_resolvent(dim);
  spec.prox_g1 = make_l1_resolvent(dim);
  Vec b1(dim), b2(dim);
  b1 << 1.0, 1.0, -3.0;
  b2 << 1.0, 1.0, -5.0;
  spec.grad_e2 = make_affine_gradient(2.0, b1);  // grad of ||x||^2 + b1.x + 2
  spec.grad_g2 = make_affine_gradient(2.0, b2);  // grad of ||y||^2 + b2.y - 3
  spec.A = make_scaled_identity_operator(2.0, dim);
  spec.A.norm_sq_hint = 4.0;
  spec.F = make_scaled_identity_strongly_monotone(2.0, dim);
  Vec xs(dim);
  xs << 0.0, 0.0, 1.0;
  spec.known_solution = xs;
  spec.label = "example2";
  return scmp_to_svi(spec);
}

double residual_tol(const SviProblem& p, double lambda, const Vec& z) {
  require(lambda > 0, "residual_tol: lambda must be positive");
  // f1, f2 enter the resolvent argument unscaled (no lambda factor); the
  // benchmark iteration counts assume this exact form.
  Vec az = p.A.apply(z);
  double r1 = (z - p.B1.resolvent(lambda, z - p.f1.apply(z))).norm();
  double r2 = (az - p.B2.resolvent(lambda, az - p.f2.apply(az))).norm();
  return r1 + r2;
}

double distance_tol(const Vec& z, const Vec& x_star, const LinearOperator& A,
                    const Vec& y_star) {
  require(z.size() == x_star.size(), "distance_tol: dimension mismatch");
  require(static_cast<int>(y_star.size()) == A.codomain_dim,
          "distance_tol: y_star has wrong dimension");
  return (z - x_star).norm() + (A.apply(z) - y_star).norm();
}

double lambda_upper_bound(const SviProblem& p, double rho) {
  require(rho > 2, "lambda_upper_bound: rho must be > 2");
  return (1.0 / rho) * std::min(p.tau_tilde(), 1.0 / p.norm_sq_A());
}

Vec case_initial(const std::string& name, int dim) {
  if (name == "Ia") return geometric_vector(16.0, 0.25, dim);
  if (name == "Ib") return geometric_vector(9.0, 1.0 / 3.0, dim);
  if (name == "Ic") return geometric_vector(100.0, -0.1, dim);
  if (name == "Id") return geometric_vector(-20.0, -0.2, dim);
  Vec v(3);
  if (name == "IIa") {
    v << 1.0, -2.0, 16.0;
  } else if (name == "IIb") {
    v << 15.0, 9.0, 0.0;
  } else if (name == "IIc") {
    v << 1.0, 0.0, 6.0;
  } else if (name == "IId") {
    v << 11.0, 1.0, -3.0;
  } else {
    throw std::invalid_argument("case_initial: unknown case '" + name + "'");
  }
  return v;
}

double example2_e2(const Vec& x) {
  Vec b(3);
  b << 1.0, 1.0, -3.0;
  return x.squaredNorm() + b.dot(x) + 2.0;
}

double example2_g2(const Vec& y) {
  Vec b(3);
  b << 1.0, 1.0, -5.0;
  return y.squaredNorm() + b.dot(y) - 3.0;
}

}  // namespace svi
