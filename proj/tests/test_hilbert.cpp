#include "svi/hilbert.hpp"

#include <doctest.h>

#include <cmath>

using svi::Vec;

namespace {

Vec make3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("inner product and norm basics") {
  Vec x = make3(1, 2, 3), y = make3(-1, 0, 2);
  CHECK(svi::inner(x, y) == doctest::Approx(5.0));
  CHECK(svi::norm(x) == doctest::Approx(std::sqrt(14.0)));
  CHECK(svi::inner(x, y) == svi::inner(y, x));
  CHECK_THROWS_AS(svi::inner(x, Vec::Zero(2)), std::invalid_argument);
}

TEST_CASE("Cauchy-Schwarz on sampled pairs") {
  std::mt19937_64 rng(123);
  for (int s = 0; s < 200; ++s) {
    Vec x = svi::random_normal(20, rng);
    Vec y = svi::random_normal(20, rng);
    CHECK(std::abs(svi::inner(x, y)) <= svi::norm(x) * svi::norm(y) + 1e-12);
  }
}

TEST_CASE("shift operator action") {
  svi::LinearOperator A = svi::make_example1_operator(6);
  Vec x(6);
  x << 1, 2, 3, 4, 5, 6;
  Vec y = svi::apply_operator(A, x);
  // (x1, x1, x2/2, x3/3, x4/4, x5/5)
  CHECK(y(0) == doctest::Approx(1.0));
  CHECK(y(1) == doctest::Approx(1.0));
  CHECK(y(2) == doctest::Approx(1.0));
  CHECK(y(3) == doctest::Approx(1.0));
  CHECK(y(4) == doctest::Approx(1.0));
  CHECK(y(5) == doctest::Approx(1.0));

  Vec e1 = Vec::Zero(6);
  e1(0) = 1.0;
  Vec ae1 = svi::apply_operator(A, e1);
  CHECK(ae1(0) == 1.0);
  CHECK(ae1(1) == 1.0);
  CHECK(ae1.tail(4).norm() == 0.0);
}

TEST_CASE("shift operator adjoint equals the transpose oracle") {
  const int dim = 12;
  svi::LinearOperator A = svi::make_example1_operator(dim);

  // Dense representation column by column; its transpose is the adjoint oracle.
  Eigen::MatrixXd M(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec e = Vec::Zero(dim);
    e(j) = 1.0;
    M.col(j) = A.apply(e);
  }

  std::mt19937_64 rng(7);
  for (int s = 0; s < 100; ++s) {
    Vec y = svi::random_normal(dim, rng);
    CHECK((svi::apply_adjoint(A, y) - M.transpose() * y).norm() <= 1e-14);
  }

  // Closed form: (A*y)_1 = y_1 + y_2, (A*y)_k = y_{k+1}/k for k >= 2.
  Vec y = Vec::LinSpaced(dim, 1.0, static_cast<double>(dim));
  Vec at = svi::apply_adjoint(A, y);
  CHECK(at(0) == doctest::Approx(y(0) + y(1)));
  for (int k = 2; k <= dim - 1; ++k) CHECK(at(k - 1) == doctest::Approx(y(k) / k));
  CHECK(at(dim - 1) == 0.0);
}

TEST_CASE("adjoint of scaled identity and zero") {
  svi::LinearOperator twoI = svi::make_scaled_identity_operator(2.0, 3);
  Vec y = make3(1, -2, 5);
  CHECK((svi::apply_adjoint(twoI, y) - 2.0 * y).norm() == 0.0);

  svi::LinearOperator A = svi::make_example1_operator(8);
  CHECK(svi::apply_adjoint(A, Vec::Zero(8)).norm() == 0.0);
}

TEST_CASE("squared norm estimation") {
  SUBCASE("scaled identity hits c^2 via the hint") {
    svi::LinearOperator twoI = svi::make_scaled_identity_operator(2.0, 3);
    svi::NormEstimate e = svi::estimate_norm_sq(twoI);
    CHECK(e.value == doctest::Approx(4.0));
    CHECK(e.converged);
  }
  SUBCASE("shift operator power iteration agrees with the analytic value 2") {
    svi::LinearOperator A = svi::make_example1_operator(50);
    A.norm_sq_hint.reset();  // force the estimator
    svi::NormEstimate e = svi::estimate_norm_sq(A, 500, 1e-14);
    CHECK(e.converged);
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-8));
  }
  SUBCASE("zero operator") {
    svi::NormEstimate e = svi::estimate_norm_sq(svi::make_zero_operator(4, 4));
    CHECK(e.value == 0.0);
    CHECK(e.converged);
  }
  SUBCASE("Rayleigh quotient lower-bound consistency") {
    svi::LinearOperator A = svi::make_example1_operator(30);
    A.norm_sq_hint.reset();
    double est = svi::estimate_norm_sq(A, 500, 1e-12).value;
    std::mt19937_64 rng(99);
    for (int s = 0; s < 100; ++s) {
      Vec x = svi::random_normal(30, rng);
      double q = A.apply(x).squaredNorm() / x.squaredNorm();
      CHECK(est >= q - 1e-9);
    }
  }
}

TEST_CASE("adjoint consistency check") {
  SUBCASE("scaled identity is exact") {
    svi::AdjointReport r =
        svi::check_adjoint_consistency(svi::make_scaled_identity_operator(2.0, 5), 100, 42);
    CHECK(r.pass);
    CHECK(r.max_error == 0.0);
  }
  SUBCASE("shift operator passes at 1e-10") {
    svi::AdjointReport r =
        svi::check_adjoint_consistency(svi::make_example1_operator(200), 1000, 7);
    CHECK(r.pass);
  }
  SUBCASE("mismatched adjoint is caught") {
    svi::LinearOperator bad = svi::make_scaled_identity_operator(2.0, 4);
    bad.apply_adjoint = [](const Vec& y) { return Vec(3.0 * y); };
    CHECK_FALSE(svi::check_adjoint_consistency(bad, 100, 1).pass);
  }
}

TEST_CASE("dense operator wraps a matrix with its transpose") {
  Eigen::MatrixXd M(2, 3);
  M << 1, 2, 3, 4, 5, 6;
  svi::LinearOperator A = svi::make_dense_operator(M);
  CHECK(A.domain_dim == 3);
  CHECK(A.codomain_dim == 2);
  CHECK(svi::check_adjoint_consistency(A, 200, 5).pass);
}
