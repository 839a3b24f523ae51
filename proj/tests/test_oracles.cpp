#include "svi/oracle.hpp"

#include "svi/problem.hpp"

#include <doctest.h>

#include <cmath>

using svi::Vec;

TEST_CASE("scalar step oracle closed forms") {
  svi::ScalarSviInstance inst{3.0, 7.0, 2.0, 1.0, 4.0, 1.0};

  // Hand arithmetic: T(1) = 0.9/1.7, S(1) = 1 - T(1),
  // regularized inner = 1 - 0.2 - 0.1*S(1) - 0.1*0.5*4, then /1.3.
  CHECK(svi::scalar_oracle_step(inst, svi::Variant::regularized, 0.1, 0.5, 1.0) ==
        doctest::Approx(0.4253394).epsilon(1e-6));
  CHECK(svi::scalar_oracle_step(inst, svi::Variant::forward_backward, 0.1, 0.0, 1.0) ==
        doctest::Approx(0.5791855).epsilon(1e-6));
  CHECK(svi::scalar_oracle_step(inst, svi::Variant::moudafi, 0.1, 0.1, 1.0) ==
        doctest::Approx(0.5864253).epsilon(1e-6));

  for (svi::Variant v : {svi::Variant::regularized, svi::Variant::forward_backward,
                         svi::Variant::moudafi})
    CHECK(svi::scalar_oracle_step(inst, v, 0.1, 0.5, 0.0) == 0.0);

  // All maps zero: every variant is the identity step.
  svi::ScalarSviInstance idle{0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  for (svi::Variant v : {svi::Variant::regularized, svi::Variant::forward_backward,
                         svi::Variant::moudafi})
    CHECK(svi::scalar_oracle_step(idle, v, 0.3, 0.5, 2.5) == 2.5);

  CHECK_THROWS_AS(svi::scalar_oracle_step(inst, svi::Variant::regularized, 0.0, 0.5, 1.0),
                  std::invalid_argument);
}

TEST_CASE("vector steps on dim-1 problems match the scalar oracle") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> ub(0.0, 5.0), uc(0.1, 3.0), ua(-2.0, 2.0),
      ul(0.01, 0.5), ug(0.05, 0.95), uz(-5.0, 5.0);
  for (int s = 0; s < 300; ++s) {
    svi::ScalarSviInstance inst;
    inst.b1 = ub(rng);
    inst.b2 = ub(rng);
    inst.fc1 = uc(rng);
    inst.fc2 = uc(rng);
    inst.fF = uc(rng);
    inst.a = ua(rng);
    svi::SviProblem p = svi::scalar_instance_problem(inst);
    double lambda = ul(rng), ag = ug(rng), z = uz(rng);
    Vec zv = Vec::Constant(1, z);

    double want_reg = svi::scalar_oracle_step(inst, svi::Variant::regularized, lambda, ag, z);
    double want_fb =
        svi::scalar_oracle_step(inst, svi::Variant::forward_backward, lambda, 0.0, z);
    double want_md = svi::scalar_oracle_step(inst, svi::Variant::moudafi, lambda, ag, z);

    CHECK(std::abs(svi::step_regularized(p, zv, lambda, ag)(0) - want_reg) <=
          1e-14 * std::max(1.0, std::abs(want_reg)));
    CHECK(std::abs(svi::step_forward_backward(p, zv, lambda)(0) - want_fb) <=
          1e-14 * std::max(1.0, std::abs(want_fb)));
    CHECK(std::abs(svi::step_moudafi(p, zv, lambda, ag)(0) - want_md) <=
          1e-14 * std::max(1.0, std::abs(want_md)));
  }
}

TEST_CASE("finite-difference gradient validation") {
  svi::SviProblem p = svi::build_example2();

  SUBCASE("first smooth objective") {
    svi::GradCheckReport r =
        svi::finite_diff_grad_check(svi::example2_e2, p.f1, 100, 1e-5, 9001);
    CHECK(r.pass);
    CHECK(r.max_rel_error <= 1e-6);
  }
  SUBCASE("second smooth objective") {
    svi::GradCheckReport r =
        svi::finite_diff_grad_check(svi::example2_g2, p.f2, 100, 1e-5, 9002);
    CHECK(r.pass);
  }
  SUBCASE("sign-flipped gradient is rejected") {
    svi::IsmMapping bad = p.f1;
    bad.apply = [inner = p.f1.apply](const Vec& x) { return Vec(-inner(x)); };
    CHECK_FALSE(svi::finite_diff_grad_check(svi::example2_e2, bad, 20, 1e-5, 9003).pass);
  }
}

TEST_CASE("sampled inverse-strong-monotonicity constants") {
  SUBCASE("doubling map has modulus exactly one half") {
    auto f = [](const Vec& x) { return Vec(2.0 * x); };
    svi::IsmCheckReport r = svi::ism_constant_sampled(f, 5, 0.5, 1000, 71);
    CHECK(r.pass);
    CHECK(r.worst_ratio == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.pairs_used == 1000);
  }
  SUBCASE("correction operator of the first experiment") {
    svi::SviProblem p = svi::build_example1(60);
    auto S = [&p](const Vec& z) {
      Vec az = p.A.apply(z);
      Vec taz = svi::forward_backward_map(p.B2, p.f2, 0.1, az);
      return Vec(p.A.apply_adjoint(az - taz));
    };
    // 1/(2 ||A||^2) = 1/4 for this operator.
    svi::IsmCheckReport r = svi::ism_constant_sampled(S, 60, 0.25, 1000, 72);
    CHECK(r.pass);
    CHECK(r.worst_ratio >= 0.25 - 1e-9);
  }
  SUBCASE("inflated claim is rejected") {
    auto f = [](const Vec& x) { return Vec(2.0 * x); };
    CHECK_FALSE(svi::ism_constant_sampled(f, 5, 10.0, 200, 73).pass);
  }
}
