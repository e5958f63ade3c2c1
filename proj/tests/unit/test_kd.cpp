#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lgt/kd.hpp"

using namespace lgt;

namespace {

// Composite Gauss-Legendre on [0, 1/2] after folding, with a graded mesh
// towards the logarithmic endpoint singularity.
double quadrature_one_dim() {
  const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
  const double wg[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                        0.2369268850561891};
  double total = 0.0;
  double hi = 0.5;
  for (int level = 0; level < 60; ++level) {
    const double lo = hi / 2.0;
    const double width = (hi - lo) / 8.0;
    for (int piece = 0; piece < 8; ++piece) {
      const double half = 0.5 * width;
      const double mid = lo + width * piece + half;
      for (int k = 0; k < 5; ++k) {
        const double x = mid + half * xg[k];
        total += wg[k] * half * std::log(2.0 * std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * x));
      }
    }
    hi = lo;
  }
  return 2.0 * total;
}

}  // namespace

TEST_CASE("one-dimensional integral converges to -log 2") {
  CHECK(quadrature_one_dim() == doctest::Approx(-std::numbers::ln2).epsilon(1e-10));
  CHECK(std::abs(one_dim_log_integral(4096) + std::numbers::ln2) <= 5e-3);
  double prev = 1e9;
  for (long long m : {256, 1024, 4096}) {
    const double err = std::abs(one_dim_log_integral(m) + std::numbers::ln2);
    CHECK(err < prev);
    prev = err;
  }
  CHECK_THROWS_AS(one_dim_log_integral(1), std::invalid_argument);
}

TEST_CASE("one-dimensional lattice sum has a sine-product closed form") {
  for (long long m : {2, 3, 7, 64, 4096}) {
    const double md = static_cast<double>(m);
    const double closed = (2.0 * std::log(md) - (md - 1.0) * std::numbers::ln2) / md;
    CHECK(one_dim_log_integral(m) == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("d=2 estimator equals -(2 log m + log 2) / (2m)") {
  for (long long m : {2, 4, 16, 256, 4096}) {
    const double md = static_cast<double>(m);
    CHECK(std::abs(kd_value(2, m).value + (2.0 * std::log(md) + std::numbers::ln2) / (2.0 * md)) <= 1e-9);
  }
}

TEST_CASE("K_2 analytic branch is exactly zero") {
  const auto k = kd_analytic_d2();
  CHECK(k.value == 0.0);
  CHECK(k.method == "analytic-d2");
  CHECK(k.log2_term + k.one_dim_integral_term == 0.0);
}

TEST_CASE("K_2 Riemann branch") {
  CHECK(std::abs(kd_value(2, 4096).value) <= 5e-3);
  double prev = 1e9;
  for (long long m : {256, 1024, 4096}) {
    const double v = std::abs(kd_value(2, m).value);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_FALSE(kd_value(2, 64).d_dim_integral.has_value());
}

TEST_CASE("d-dimensional grid sum is symmetric and bounded") {
  const long long m = 24;
  double swapped = 0.0;
  for (long long q2 = 1; q2 < m; ++q2) {
    for (long long q1 = 1; q1 < m; ++q1) {
      swapped += std::log((1.0 - std::cos(2.0 * std::numbers::pi * q1 / m)) +
                          (1.0 - std::cos(2.0 * std::numbers::pi * q2 / m)));
    }
  }
  CHECK(d_dim_log_integral(2, m) == doctest::Approx(swapped / (m * m)).epsilon(1e-13));
  for (int d = 2; d <= 4; ++d) CHECK(d_dim_log_integral(d, 16) <= std::log(2.0 * d));
}

TEST_CASE("d-dimensional sum: parallel equals serial bitwise") {
  for (int d = 1; d <= 4; ++d) {
    for (long long m : {2, 5, 16, 33}) CHECK(d_dim_log_integral(d, m) == reference::d_dim_log_integral(d, m));
  }
  CHECK(d_dim_log_integral(1, 64) == doctest::Approx(one_dim_log_integral(64)).epsilon(1e-13));
}

TEST_CASE("d=3 Cauchy differences shrink") {
  const double a = kd_value(3, 32).value;
  const double b = kd_value(3, 64).value;
  const double c = kd_value(3, 128).value;
  CHECK(std::abs(c - b) < std::abs(b - a));
}

TEST_CASE("pieces recombine") {
  for (int d = 2; d <= 4; ++d) {
    const auto k = kd_value(d, 20);
    CHECK(k.value == k.log2_term + k.one_dim_integral_term + k.d_dim_integral_term);
    CHECK(k.log2_term == doctest::Approx(-(d - 1) * 0.5 * std::numbers::ln2));
    if (d > 2) CHECK(k.d_dim_integral_term == doctest::Approx(-(d - 2) * 0.5 * *k.d_dim_integral));
  }
  CHECK_THROWS_AS(kd_value(1, 10), std::invalid_argument);
}

TEST_CASE("log factorial product") {
  CHECK(log_factorial_product(1) == 0.0);
  CHECK(log_factorial_product(2) == 0.0);
  CHECK(log_factorial_product(4) == doctest::Approx(std::log(12.0)));
  double s = 0.0;
  for (int j = 1; j < 30; ++j) s += std::lgamma(j + 1.0);
  CHECK(log_factorial_product(30) == doctest::Approx(s));
  double t = 0.0;
  for (int j = 1; j < 20; ++j) t += std::lgamma(j + 1.0);
  CHECK(log_factorial_product(20) == doctest::Approx(t).epsilon(1e-13));
  CHECK_THROWS_AS(log_factorial_product(0), std::invalid_argument);
}

TEST_CASE("leading-order free energy terms") {
  const auto p1 = leading_order_free_energy(3, 8, 1, 1.0, -0.8);
  CHECK(p1.gaussian_scaling_term == 0.0);
  CHECK(p1.haar_jacobian_term == doctest::Approx(-std::log(2.0 * std::numbers::pi)));
  CHECK(p1.kd_term == -0.8);
  CHECK(p1.value == doctest::Approx(p1.haar_jacobian_term - 0.8));

  const auto p2 = leading_order_free_energy(2, 4, 2, 0.5, 0.0);
  CHECK(p2.haar_jacobian_term == doctest::Approx(-std::log(2.0 * std::numbers::pi)));
  CHECK(p2.free_edges == 16);
  CHECK(p2.free_edges_asymptotic == 9);
  CHECK(p2.gaussian_scaling_term == doctest::Approx(16.0 / 32.0 * 4.0 * std::log(0.25)));

  const auto p3 = leading_order_free_energy(3, 2, 1, 1.0, 0.0);
  CHECK(p3.free_edges == 3 * 2 * 9 - 27 + 1);
  CHECK_THROWS_AS(leading_order_free_energy(3, 2, 1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("json output") {
  const auto j = to_json(kd_value(3, 16));
  CHECK(j["method"] == "riemann");
  CHECK(j["grid"] == 16);
  CHECK(j["pieces"].size() == 3);
  CHECK(to_json(kd_analytic_d2())["value"] == 0.0);
  const auto p = to_json(leading_order_free_energy(2, 3, 2, 1.0, 0.0));
  CHECK(p["terms"].size() == 3);
  CHECK(p["free_edge_count"] == 9);
}
