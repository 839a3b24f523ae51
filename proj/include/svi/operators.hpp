#pragma once

#include "svi/hilbert.hpp"

#include <variant>

// Catalog of resolvents of maximal monotone operators, inverse-strongly-
// monotone (ism) single-valued mappings, and the proximal/projection
// building blocks the solvers are assembled from.

namespace svi {

// Resolvent family J_lambda = (I + lambda B)^{-1} of a maximal monotone
// operator B, represented only through its action: every algorithm touches
// B exclusively through J_lambda. Firm nonexpansiveness in x for each fixed
// lambda > 0 is a testable invariant.
struct ResolventOperator {
  int dim = 0;
  std::function<Vec(double, const Vec&)> resolvent;  // (lambda, x) -> J_lambda(x)
  std::string label;
};

// Single-valued tau-inverse-strongly-monotone mapping:
// <f(x)-f(y), x-y> >= tau * ||f(x)-f(y)||^2.
struct IsmMapping {
  int dim = 0;
  std::function<Vec(const Vec&)> apply;
  double tau = 0.0;
  std::string label;
};

// gamma-strongly monotone, L-Lipschitz regularizer.
struct StronglyMonotoneMapping {
  int dim = 0;
  std::function<Vec(const Vec&)> apply;
  double gamma = 0.0;
  double lipschitz = 0.0;
  std::string label;
};

struct BoxSet {
  Vec lower, upper;  // lower <= upper per coordinate
};
struct BallSet {
  Vec center;
  double radius = 0.0;
};
struct WholeSpace {
  int dim = 0;
};
using ConvexSetDescriptor = std::variant<BoxSet, BallSet, WholeSpace>;

int descriptor_dim(const ConvexSetDescriptor& C);

Vec resolvent_eval(const ResolventOperator& B, double lambda, const Vec& x);

// B = c*Id, c >= 0; the resolvent is x / (1 + lambda*c) componentwise.
ResolventOperator make_scaled_identity_monotone(double c, int dim);

// Resolvent of the subdifferential of the l1 norm: soft thresholding.
ResolventOperator make_l1_resolvent(int dim);

// Resolvent of the normal cone N_C: the metric projection P_C (for every
// lambda, since N_C is a cone).
ResolventOperator make_projection_resolvent(ConvexSetDescriptor C);

// B = 0; the resolvent is the identity.
ResolventOperator make_zero_monotone(int dim);

// f(x)_i = w_i x_i with all w_i > 0; tau = 1/max(w) is the exact modulus.
IsmMapping make_diagonal_ism(const Vec& weights);

// Gradient of a quadratic: f(x) = scale*x + b, ism with tau = 1/scale
// (Baillon-Haddad: an L-Lipschitz convex gradient is 1/L-ism).
IsmMapping make_affine_gradient(double scale, const Vec& b);

IsmMapping make_zero_ism(int dim);

// F = c*Id: c-strongly monotone and c-Lipschitz.
StronglyMonotoneMapping make_scaled_identity_strongly_monotone(double c, int dim);

// Componentwise soft threshold sign(x_i) * max(|x_i| - lambda, 0).
Vec prox_l1(double lambda, const Vec& x);

// Nearest point of C; idempotent and firmly nonexpansive.
Vec project_convex(const ConvexSetDescriptor& C, const Vec& x);

// T = J_lambda^B (I - lambda f); nonexpansive whenever lambda < 2*f.tau.
Vec forward_backward_map(const ResolventOperator& B, const IsmMapping& f,
                         double lambda, const Vec& x);

struct FirmNonexpReport {
  double worst_margin = 0.0;  // min over pairs of <Jx-Jy,x-y> - ||Jx-Jy||^2
  bool pass = false;          // worst_margin >= -1e-9
};

FirmNonexpReport check_firmly_nonexpansive_sampled(const ResolventOperator& B,
                                                   double lambda, int samples,
                                                   std::uint64_t seed);

}  // namespace svi
