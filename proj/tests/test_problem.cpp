#include "svi/problem.hpp"

#include <doctest.h>

#include <cmath>

using svi::Vec;

namespace {

Vec make3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

// Dim-1 problem with B1 = 3x, B2 = 7x, f1 = 2x, f2 = 1x, A = 1x, F = 4x.
svi::SviProblem tiny_instance() {
  svi::SviProblem p;
  p.B1 = svi::make_scaled_identity_monotone(3.0, 1);
  p.B2 = svi::make_scaled_identity_monotone(7.0, 1);
  p.f1 = svi::make_diagonal_ism(Vec::Constant(1, 2.0));
  p.f2 = svi::make_diagonal_ism(Vec::Constant(1, 1.0));
  p.A = svi::make_scaled_identity_operator(1.0, 1);
  p.F = svi::make_scaled_identity_strongly_monotone(4.0, 1);
  p.label = "tiny";
  return p;
}

}  // namespace

TEST_CASE("first experiment problem data") {
  svi::SviProblem p = svi::build_example1(50);
  CHECK(p.dim1() == 50);
  CHECK(p.dim2() == 50);
  CHECK(p.tau_tilde() == doctest::Approx(0.5));
  CHECK(p.norm_sq_A() == doctest::Approx(2.0));
  REQUIRE(p.known_solution.has_value());
  CHECK(p.known_solution->norm() == 0.0);

  // Residual vanishes at the solution for every admissible lambda.
  for (double lambda : {0.01, 0.05, 0.1, 0.15, 0.2})
    CHECK(svi::residual_tol(p, lambda, *p.known_solution) == doctest::Approx(0.0));

  CHECK_THROWS_AS(svi::build_example1(3), std::invalid_argument);
}

TEST_CASE("second experiment problem data") {
  svi::SviProblem p = svi::build_example2();
  CHECK(p.dim1() == 3);
  CHECK(p.norm_sq_A() == doctest::Approx(4.0));
  CHECK(p.tau_tilde() == doctest::Approx(0.5));
  REQUIRE(p.known_solution.has_value());
  CHECK((*p.known_solution - make3(0, 0, 1)).norm() == 0.0);
  CHECK((p.A.apply(*p.known_solution) - make3(0, 0, 2)).norm() == 0.0);

  // f1 is the gradient of ||x||^2 + (1,1,-3).x + 2.
  Vec g = p.f1.apply(make3(1, 2, 3));
  CHECK((g - make3(3, 5, 3)).norm() == 0.0);
  CHECK(p.f1.tau == doctest::Approx(0.5));

  // Coordinatewise subgradient optimality: 0 in 2t + b_i + d|t| at the
  // solution, i.e. |2t + b_i| <= 1 where t = 0 and 2t + b_i + sign(t) = 0
  // where t != 0. First objective at x* = (0,0,1):
  Vec xs = *p.known_solution;
  Vec b1 = make3(1, 1, -3);
  for (int i = 0; i < 3; ++i) {
    double t = xs(i);
    if (t == 0.0)
      CHECK(std::abs(2.0 * t + b1(i)) <= 1.0 + 1e-12);
    else
      CHECK(2.0 * t + b1(i) + (t > 0 ? 1.0 : -1.0) == doctest::Approx(0.0));
  }
  // Second objective at y* = A x* = (0,0,2):
  Vec ys = p.A.apply(xs);
  Vec b2 = make3(1, 1, -5);
  for (int i = 0; i < 3; ++i) {
    double t = ys(i);
    if (t == 0.0)
      CHECK(std::abs(2.0 * t + b2(i)) <= 1.0 + 1e-12);
    else
      CHECK(2.0 * t + b2(i) + (t > 0 ? 1.0 : -1.0) == doctest::Approx(0.0));
  }

  // 1-D verification that argmin of t^2 - 3t + |t| is t = 1 by dense scan.
  double best_t = -10.0, best_v = 1e30;
  for (int k = -40000; k <= 40000; ++k) {
    double t = k / 10000.0;
    double v = t * t - 3.0 * t + std::abs(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  CHECK(best_t == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("forward-backward fixed point at the known solution") {
  svi::SviProblem p = svi::build_example2();
  Vec xs = *p.known_solution;
  for (double lambda : {0.01, 1.0 / 15.0, 0.09}) {
    Vec t = svi::forward_backward_map(p.B1, p.f1, lambda, xs);
    CHECK((t - xs).norm() <= 1e-12);
    Vec ys = p.A.apply(xs);
    Vec t2 = svi::forward_backward_map(p.B2, p.f2, lambda, ys);
    CHECK((t2 - ys).norm() <= 1e-12);
  }
}

TEST_CASE("split minimization assembly") {
  svi::ScmpSpec spec;
  spec.prox_e1 = svi::make_l1_resolvent(3);
  spec.prox_g1 = svi::make_l1_resolvent(3);
  spec.grad_e2 = svi::make_affine_gradient(2.0, make3(1, 1, -3));
  spec.grad_g2 = svi::make_affine_gradient(2.0, make3(1, 1, -5));
  spec.A = svi::make_scaled_identity_operator(2.0, 3);
  spec.F = svi::make_scaled_identity_strongly_monotone(2.0, 3);
  svi::SviProblem p = svi::scmp_to_svi(spec);

  // B1 is the soft-threshold resolvent, moduli carried over.
  Vec r = p.B1.resolvent(1.0, make3(2.0, -0.5, 0.0));
  CHECK((r - make3(1.0, 0.0, 0.0)).norm() == 0.0);
  CHECK(p.f1.tau == doctest::Approx(0.5));

  SUBCASE("dimension mismatch is rejected") {
    spec.grad_e2 = svi::make_affine_gradient(2.0, Vec::Zero(4));
    CHECK_THROWS_AS(svi::scmp_to_svi(spec), std::invalid_argument);
  }
}

TEST_CASE("split VI assembly") {
  svi::SvipSpec spec;
  spec.C = svi::WholeSpace{2};
  spec.Q = svi::WholeSpace{2};
  spec.f1 = svi::make_diagonal_ism(Vec::Constant(2, 2.0));
  spec.f2 = svi::make_diagonal_ism(Vec::Constant(2, 1.0));
  spec.A = svi::make_scaled_identity_operator(1.0, 2);
  spec.F = svi::make_scaled_identity_strongly_monotone(1.0, 2);
  svi::SviProblem p = svi::svip_to_svi(spec);

  // Whole-space projections are the identity for any lambda.
  Vec x(2);
  x << 3.0, -4.0;
  CHECK((p.B1.resolvent(0.5, x) - x).norm() == 0.0);
  CHECK((p.B2.resolvent(2.0, x) - x).norm() == 0.0);

  SUBCASE("box constraint clamps after the gradient step") {
    svi::SvipSpec boxed = spec;
    boxed.C = svi::BoxSet{Vec::Zero(2), Vec::Ones(2)};
    svi::SviProblem pb = svi::svip_to_svi(boxed);
    Vec t = svi::forward_backward_map(pb.B1, pb.f1, 0.1, x);
    Vec expect = svi::project_convex(svi::ConvexSetDescriptor{svi::BoxSet{Vec::Zero(2), Vec::Ones(2)}},
                                     Vec(x - 0.1 * pb.f1.apply(x)));
    CHECK((t - expect).norm() == 0.0);
  }
}

TEST_CASE("residual functional") {
  svi::SviProblem p = tiny_instance();
  // |1 - (1-2)/1.3| + |1 - (1-1)/1.7| with the unscaled arguments.
  double r = svi::residual_tol(p, 0.1, Vec::Constant(1, 1.0));
  CHECK(r == doctest::Approx(2.7692308).epsilon(1e-6));
  CHECK(svi::residual_tol(p, 0.1, Vec::Constant(1, 0.0)) == 0.0);

  SUBCASE("continuity near a solution") {
    svi::SviProblem ex1 = svi::build_example1(20);
    std::mt19937_64 rng(3);
    for (int s = 0; s < 50; ++s) {
      Vec dz = 1e-9 * svi::random_normal(20, rng);
      CHECK(svi::residual_tol(ex1, 0.1, dz) <= 1e-7);
    }
  }
  CHECK_THROWS_AS(svi::residual_tol(p, 0.0, Vec::Constant(1, 1.0)), std::invalid_argument);
}

TEST_CASE("distance functional") {
  svi::SviProblem p = svi::build_example2();
  Vec xs = *p.known_solution;
  Vec ys = p.A.apply(xs);
  CHECK(svi::distance_tol(xs, xs, p.A, ys) == 0.0);
  CHECK(svi::distance_tol(Vec::Zero(3), xs, p.A, ys) == doctest::Approx(3.0));

  std::mt19937_64 rng(8);
  double anorm = std::sqrt(p.norm_sq_A());
  for (int s = 0; s < 100; ++s) {
    Vec z = svi::random_normal(3, rng);
    CHECK(svi::distance_tol(z, xs, p.A, ys) <= (1.0 + anorm) * (z - xs).norm() + 1e-12);
  }
}

TEST_CASE("step-size upper bound") {
  svi::SviProblem p1 = svi::build_example1(30);
  CHECK(svi::lambda_upper_bound(p1, 2.5) == doctest::Approx(0.2));
  svi::SviProblem p2 = svi::build_example2();
  CHECK(svi::lambda_upper_bound(p2, 2.5) == doctest::Approx(0.1));

  CHECK(svi::lambda_upper_bound(p1, 100.0) < svi::lambda_upper_bound(p1, 2.5));
  CHECK_THROWS_AS(svi::lambda_upper_bound(p1, 2.0), std::invalid_argument);

  SUBCASE("built-in step schedules stay inside the band") {
    for (double rho : {2.1, 2.5, 3.0, 3.4}) {
      double bound1 = svi::lambda_upper_bound(p1, rho);
      for (int n = 1; n <= 10000; ++n) {
        double l = n / (7.0 * n + 3.0);
        CHECK(l < bound1);
      }
    }
    for (double rho : {2.1, 2.5, 3.0, 3.5}) {
      double bound2 = svi::lambda_upper_bound(p2, rho);
      for (int n = 1; n <= 10000; ++n) {
        double l = n / (14.0 * n + 1.0);
        CHECK(l < bound2);
      }
    }
  }
}

TEST_CASE("initial point presets") {
  Vec ia = svi::case_initial("Ia", 8);
  CHECK(ia(0) == 16.0);
  CHECK(ia(1) == 4.0);
  CHECK(ia(2) == 1.0);
  CHECK(ia(3) == 0.25);

  Vec ib = svi::case_initial("Ib", 4);
  CHECK(ib(0) == 9.0);
  CHECK(ib(1) == 3.0);

  Vec ic = svi::case_initial("Ic", 4);
  CHECK(ic(0) == 100.0);
  CHECK(ic(1) == doctest::Approx(-10.0));

  Vec id = svi::case_initial("Id", 4);
  CHECK(id(0) == -20.0);
  CHECK(id(1) == doctest::Approx(4.0));

  CHECK((svi::case_initial("IIa", 0) - make3(1, -2, 16)).norm() == 0.0);
  CHECK((svi::case_initial("IIb", 0) - make3(15, 9, 0)).norm() == 0.0);
  CHECK((svi::case_initial("IIc", 0) - make3(1, 0, 6)).norm() == 0.0);
  CHECK((svi::case_initial("IId", 0) - make3(11, 1, -3)).norm() == 0.0);

  CHECK_THROWS_AS(svi::case_initial("IIx", 3), std::invalid_argument);
}

TEST_CASE("smooth objective evaluators match their gradients' potentials") {
  CHECK(svi::example2_e2(make3(0, 0, 0)) == doctest::Approx(2.0));
  CHECK(svi::example2_e2(make3(0, 0, 1)) == doctest::Approx(0.0));
  CHECK(svi::example2_g2(make3(0, 0, 0)) == doctest::Approx(-3.0));
  CHECK(svi::example2_g2(make3(0, 0, 2)) == doctest::Approx(-9.0));
}
