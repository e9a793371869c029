#include <doctest.h>

#include <cmath>
#include <random>

#include "lfa/analysis.hpp"
#include "lfa/errors.hpp"
#include "lfa/numeric.hpp"

using namespace lfa;

namespace {

double frozen_twogrid_sup(double tau) {
  // max over c^2 in {0, 1} of |(tau-1)^2 + tau(3tau-2) c^2|, as a double oracle
  const double a = (tau - 1) * (tau - 1);
  return std::max(std::abs(a), std::abs(a + tau * (3 * tau - 2)));
}

}  // namespace

TEST_CASE("periodic operator assembly") {
  const PeriodicOperators p1 = build_operators(p1_courant(), 8);
  CHECK(p1.h == doctest::Approx(1.0 / 8));
  CHECK(p1.K(0, 0) == doctest::Approx(2 / p1.h));
  CHECK(p1.K(0, 1) == doctest::Approx(-1 / p1.h));
  CHECK(p1.K(0, 7) == doctest::Approx(-1 / p1.h));
  CHECK(p1.K(0, 4) == 0.0);
  CHECK(p1.P.rows() == 8);
  CHECK(p1.P.cols() == 4);
  CHECK((p1.K * Eigen::VectorXd::Ones(8)).cwiseAbs().maxCoeff() < 1e-12);

  const PeriodicOperators nd = build_operators(p2_nodal(), 16);
  const double s = 30 / nd.h;
  CHECK(nd.M(4, 4) * s == doctest::Approx(8));
  CHECK(nd.M(5, 5) * s == doctest::Approx(16));
  CHECK(nd.M(4, 5) * s == doctest::Approx(2));
  CHECK(nd.M(4, 6) * s == doctest::Approx(-1));
  CHECK(nd.M(5, 7) * s == doctest::Approx(0).epsilon(1e-14));

  // one-dimensional kernel
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_operators(p2_spline(), 32).K);
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-10);
  CHECK(es.eigenvalues()(1) > 1e-6);
}

TEST_CASE("grid size checks") {
  CHECK_THROWS_AS(build_operators(p1_courant(), 6), BadGridSize);
  CHECK_THROWS_AS(build_operators(p1_courant(), 9), BadGridSize);
  CHECK_THROWS_AS(build_operators(p2_nodal(), 8), BadGridSize);
  CHECK_THROWS_AS(build_operators(p2_nodal(), 18), BadGridSize);
  CHECK_NOTHROW(build_operators(p2_nodal(), 16));
}

TEST_CASE("numeric Galerkin identity") {
  for (DiscName name : all_discretizations()) {
    const PeriodicOperators ops = build_operators(make_discretization(name), 64);
    CHECK((ops.Kc - ops.P.transpose() * ops.K * ops.P).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("two-grid rates") {
  const PeriodicOperators ops = build_operators(p1_courant(), 128);
  const RateEstimate r = measure_twogrid_rate(ops, 2.0 / 3, 200);
  CHECK(r.iterations == 200);
  CHECK(r.history.size() == 200);
  CHECK(std::abs(r.rate - 1.0 / 9) < 0.01);
  for (std::size_t i = 10; i < r.history.size(); ++i) CHECK(r.history[i] <= 1.0 / 9 + 0.05);

  CHECK(std::abs(measure_twogrid_rate(ops, 0.5, 200).rate - 0.25) < 0.01);
  CHECK(std::abs(measure_twogrid_rate(ops, 0.0, 200).rate - 1.0) < 0.01);
  CHECK_THROWS_AS(measure_twogrid_rate(ops, 5.0, 50), Divergence);
}

TEST_CASE("two-grid rate is mesh independent") {
  std::vector<double> rates;
  for (int n : {32, 64, 128}) rates.push_back(measure_twogrid_rate(build_operators(p1_courant(), n), 2.0 / 3, 200).rate);
  const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
  CHECK(*hi - *lo < 0.01);
}

TEST_CASE("two-grid rate follows the frozen supremum") {
  const PeriodicOperators ops = build_operators(p1_courant(), 128);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double tau = u(rng);
    CAPTURE(tau);
    CHECK(std::abs(measure_twogrid_rate(ops, tau, 200).rate - frozen_twogrid_sup(tau)) < 0.02);
  }
}

TEST_CASE("smoothing rates") {
  const PeriodicOperators ops = build_operators(p1_courant(), 128);
  CHECK(std::abs(measure_smoothing_rate(ops, 2.0 / 3, 200, true).rate - 1.0 / 3) < 0.02);
  CHECK(measure_smoothing_rate(ops, 1.0, 200, false).rate > 0.98);
  CHECK(measure_smoothing_rate(ops, 2.0 / 3, 200, false).rate > 0.98);
  const RateEstimate r = measure_smoothing_rate(ops, 0.5, 40, true);
  CHECK(r.history.size() == 40);
  for (double v : r.history) CHECK(v >= 0);
}

TEST_CASE("approximation constants") {
  CHECK(std::abs(measure_approx_constant(p1_courant(), 128) - 1.0 / 3) < 1e-3);
  CHECK(std::abs(measure_approx_constant(p2_spline(), 128) - 0.4) < 1e-3);
  CHECK(std::abs(measure_approx_constant(p2_nodal(), 128) - 0.1) < 1e-3);
}

TEST_CASE("measurements are deterministic for a fixed seed") {
  const PeriodicOperators ops = build_operators(p1_courant(), 32);
  CHECK(measure_twogrid_rate(ops, 0.6, 50, 3).rate == measure_twogrid_rate(ops, 0.6, 50, 3).rate);
}
