#include "svi/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace svi {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int descriptor_dim(const ConvexSetDescriptor& C) {
  return std::visit(
      [](const auto& set) -> int {
        using T = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<T, BoxSet>) return static_cast<int>(set.lower.size());
        if constexpr (std::is_same_v<T, BallSet>) return static_cast<int>(set.center.size());
        if constexpr (std::is_same_v<T, WholeSpace>) return set.dim;
      },
      C);
}

Vec resolvent_eval(const ResolventOperator& B, double lambda, const Vec& x) {
  require(lambda > 0, "resolvent_eval: lambda must be positive");
  require(static_cast<int>(x.size()) == B.dim, "resolvent_eval: dimension mismatch");
  return B.resolvent(lambda, x);
}

ResolventOperator make_scaled_identity_monotone(double c, int dim) {
  require(c >= 0, "make_scaled_identity_monotone: c must be nonnegative");
  ResolventOperator B;
  B.dim = dim;
  B.label = "scaled-identity(c=" + std::to_string(c) + ")";
  B.resolvent = [c](double lambda, const Vec& x) { return Vec(x / (1.0 + lambda * c)); };
  return B;
}

Vec prox_l1(double lambda, const Vec& x) {
  require(lambda > 0, "prox_l1: lambda must be positive");
  Vec y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double m = std::abs(x(i)) - lambda;
    y(i) = m > 0.0 ? (x(i) > 0.0 ? m : -m) : 0.0;
  }
  return y;
}

ResolventOperator make_l1_resolvent(int dim) {
  ResolventOperator B;
  B.dim = dim;
  B.label = "l1-subdifferential";
  B.resolvent = [](double lambda, const Vec& x) { return prox_l1(lambda, x); };
  return B;
}

Vec project_convex(const ConvexSetDescriptor& C, const Vec& x) {
  return std::visit(
      [&x](const auto& set) -> Vec {
        using T = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<T, BoxSet>) {
          return x.cwiseMax(set.lower).cwiseMin(set.upper);
        } else if constexpr (std::is_same_v<T, BallSet>) {
          Vec d = x - set.center;
          double dn = d.norm();
          if (dn <= set.radius) return x;
          return Vec(set.center + (set.radius / dn) * d);
        } else {
          return x;
        }
      },
      C);
}

ResolventOperator make_projection_resolvent(ConvexSetDescriptor C) {
  std::visit(
      [](const auto& set) {
        using T = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<T, BoxSet>) {
          require(set.lower.size() == set.upper.size() &&
                      (set.lower.array() <= set.upper.array()).all(),
                  "make_projection_resolvent: box requires lower <= upper");
        } else if constexpr (std::is_same_v<T, BallSet>) {
          require(set.radius >= 0, "make_projection_resolvent: radius must be >= 0");
        }
      },
      C);
  ResolventOperator B;
  B.dim = descriptor_dim(C);
  B.label = "normal-cone-projection";
  // The normal cone is a cone, so J_lambda = P_C for every lambda.
  B.resolvent = [C = std::move(C)](double, const Vec& x) { return project_convex(C, x); };
  return B;
}

ResolventOperator make_zero_monotone(int dim) {
  ResolventOperator B;
  B.dim = dim;
  B.label = "zero";
  B.resolvent = [](double, const Vec& x) { return x; };
  return B;
}

IsmMapping make_diagonal_ism(const Vec& weights) {
  require((weights.array() > 0).all(), "make_diagonal_ism: weights must be positive");
  IsmMapping f;
  f.dim = static_cast<int>(weights.size());
  f.tau = 1.0 / weights.maxCoeff();
  f.label = "diagonal";
  f.apply = [w = weights](const Vec& x) { return Vec(w.cwiseProduct(x)); };
  return f;
}

IsmMapping make_affine_gradient(double scale, const Vec& b) {
  require(scale > 0, "make_affine_gradient: scale must be positive");
  IsmMapping f;
  f.dim = static_cast<int>(b.size());
  f.tau = 1.0 / scale;
  f.label = "affine-gradient";
  f.apply = [scale, b](const Vec& x) { return Vec(scale * x + b); };
  return f;
}

IsmMapping make_zero_ism(int dim) {
  IsmMapping f;
  f.dim = dim;
  f.tau = std::numeric_limits<double>::infinity();
  f.label = "zero";
  f.apply = [dim](const Vec&) { return Vec(Vec::Zero(dim)); };
  return f;
}

StronglyMonotoneMapping make_scaled_identity_strongly_monotone(double c, int dim) {
  require(c > 0, "make_scaled_identity_strongly_monotone: c must be positive");
  StronglyMonotoneMapping F;
  F.dim = dim;
  F.gamma = c;
  F.lipschitz = c;
  F.label = "scaled-identity(F=" + std::to_string(c) + "x)";
  F.apply = [c](const Vec& x) { return Vec(c * x); };
  return F;
}

Vec forward_backward_map(const ResolventOperator& B, const IsmMapping& f,
                         double lambda, const Vec& x) {
  require(lambda > 0, "forward_backward_map: lambda must be positive");
  require(B.dim == f.dim && static_cast<int>(x.size()) == B.dim,
          "forward_backward_map: dimension mismatch");
  return B.resolvent(lambda, x - lambda * f.apply(x));
}

FirmNonexpReport check_firmly_nonexpansive_sampled(const ResolventOperator& B,
                                                   double lambda, int samples,
                                                   std::uint64_t seed) {
  require(lambda > 0, "check_firmly_nonexpansive_sampled: lambda must be positive");
  require(samples >= 1, "check_firmly_nonexpansive_sampled: samples must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Vec x = 3.0 * random_normal(B.dim, rng);
    Vec y = 3.0 * random_normal(B.dim, rng);
    Vec jx = B.resolvent(lambda, x);
    Vec jy = B.resolvent(lambda, y);
    Vec d = jx - jy;
    double margin = d.dot(x - y) - d.squaredNorm();
    worst = std::min(worst, margin);
  }
  return {worst, worst >= -1e-9};
}

}  // namespace svi
