#include "svi/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace svi {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double inner(const Vec& x, const Vec& y) {
  require(x.size() == y.size(), "inner: dimension mismatch");
  return x.dot(y);
}

double norm(const Vec& x) { return x.norm(); }

Vec apply_operator(const LinearOperator& A, const Vec& x) {
  require(static_cast<int>(x.size()) == A.domain_dim,
          "apply_operator: dimension mismatch");
  return A.apply(x);
}

Vec apply_adjoint(const LinearOperator& A, const Vec& y) {
  require(static_cast<int>(y.size()) == A.codomain_dim,
          "apply_adjoint: dimension mismatch");
  return A.apply_adjoint(y);
}

Vec random_normal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = dist(rng);
  return v;
}

NormEstimate estimate_norm_sq(const LinearOperator& A, int max_iters, double tol,
                              std::optional<std::uint64_t> seed) {
  if (A.norm_sq_hint) return {*A.norm_sq_hint, true, 0};
  require(max_iters >= 1, "estimate_norm_sq: max_iters must be >= 1");
  require(tol > 0, "estimate_norm_sq: tol must be positive");

  Vec x;
  if (seed) {
    std::mt19937_64 rng(*seed);
    x = random_normal(A.domain_dim, rng);
  } else {
    x = Vec::Ones(A.domain_dim);
  }
  double xn = x.norm();
  if (xn == 0.0) return {0.0, true, 0};
  x /= xn;

  double rayleigh = 0.0;
  double prev = -1.0;
  for (int it = 1; it <= max_iters; ++it) {
    Vec w = A.apply_adjoint(A.apply(x));  // A*A x
    rayleigh = x.dot(w);
    double wn = w.norm();
    if (wn == 0.0) return {0.0, true, it};  // x in the kernel of A*A
    x = w / wn;
    if (std::abs(rayleigh - prev) < tol) return {rayleigh, true, it};
    prev = rayleigh;
  }
  return {rayleigh, false, max_iters};
}

AdjointReport check_adjoint_consistency(const LinearOperator& A, int samples,
                                        std::uint64_t seed) {
  require(samples >= 1, "check_adjoint_consistency: samples must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec x = random_normal(A.domain_dim, rng);
    Vec y = random_normal(A.codomain_dim, rng);
    double lhs = A.apply(x).dot(y);
    double rhs = x.dot(A.apply_adjoint(y));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst, worst <= 1e-10};
}

LinearOperator make_example1_operator(int dim) {
  require(dim >= 2, "make_example1_operator: dim must be >= 2");
  LinearOperator A;
  A.domain_dim = dim;
  A.codomain_dim = dim;
  A.label = "example1-shift";
  A.norm_sq_hint = 2.0;
  A.apply = [dim](const Vec& x) {
    Vec y = Vec::Zero(dim);
    y(0) = x(0);
    y(1) = x(0);
    for (int k = 3; k <= dim; ++k) y(k - 1) = x(k - 2) / (k - 1);
    return y;
  };
  A.apply_adjoint = [dim](const Vec& y) {
    Vec x = Vec::Zero(dim);
    x(0) = y(0) + y(1);
    for (int k = 2; k <= dim - 1; ++k) x(k - 1) = y(k) / k;
    return x;
  };
  return A;
}

LinearOperator make_scaled_identity_operator(double c, int dim) {
  LinearOperator A;
  A.domain_dim = dim;
  A.codomain_dim = dim;
  A.label = "scaled-identity";
  A.norm_sq_hint = c * c;
  A.apply = [c](const Vec& x) { return Vec(c * x); };
  A.apply_adjoint = A.apply;
  return A;
}

LinearOperator make_zero_operator(int domain_dim, int codomain_dim) {
  LinearOperator A;
  A.domain_dim = domain_dim;
  A.codomain_dim = codomain_dim;
  A.label = "zero";
  A.apply = [codomain_dim](const Vec&) { return Vec(Vec::Zero(codomain_dim)); };
  A.apply_adjoint = [domain_dim](const Vec&) { return Vec(Vec::Zero(domain_dim)); };
  return A;
}

LinearOperator make_dense_operator(const Eigen::MatrixXd& M, std::string label) {
  LinearOperator A;
  A.domain_dim = static_cast<int>(M.cols());
  A.codomain_dim = static_cast<int>(M.rows());
  A.label = std::move(label);
  A.apply = [M](const Vec& x) { return Vec(M * x); };
  A.apply_adjoint = [M](const Vec& y) { return Vec(M.transpose() * y); };
  return A;
}

}  // namespace svi
