#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace lgt {

/// (1/m) sum_{q=1}^{m-1} log(1 - cos(2 pi q / m)); m >= 2.
double one_dim_log_integral(long long m);

/// (1/m^d) sum over q in {1..m-1}^d of log sum_k (1 - cos(2 pi q_k / m)).
/// Parallel over the first index with per-index partial sums added in order.
double d_dim_log_integral(int d, long long m);

namespace reference {
/// Serial evaluation with the same summation order as d_dim_log_integral.
double d_dim_log_integral(int d, long long m);
}  // namespace reference

struct KdEstimate {
  int d = 0;
  long long grid = 0;  // 0 for the analytic method
  std::string method;  // "riemann" or "analytic-d2"
  double value = 0.0;
  double log2_term = 0.0;                // -(d-1)/2 log 2
  double one_dim_integral_term = 0.0;    // -I_1 / 2
  double d_dim_integral_term = 0.0;      // -(d-2)/2 I_d
  std::optional<double> one_dim_integral;
  std::optional<double> d_dim_integral;  // not evaluated when d = 2
};

KdEstimate kd_value(int d, long long m);
/// K_2 = -log2/2 - (-log2)/2 = 0 exactly.
KdEstimate kd_analytic_d2();

nlohmann::ordered_json to_json(const KdEstimate& k);

/// log prod_{j=1}^{N-1} j!
double log_factorial_product(int N);

struct FreeEnergyPrediction {
  int d = 0;
  int n = 0;
  int N = 0;
  double g = 0.0;
  double kd = 0.0;
  long long free_edges = 0;             // exact count
  long long free_edges_asymptotic = 0;  // (d-1) n^d - d n^{d-1} + 1
  double gaussian_scaling_term = 0.0;   // |E^1| / (2 n^d) N^2 log g^2
  double haar_jacobian_term = 0.0;      // (d-1) log(prod j! / (2 pi)^{N/2})
  double kd_term = 0.0;                 // N^2 K_d
  double value = 0.0;
};

FreeEnergyPrediction leading_order_free_energy(int d, int n, int N, double g, double kd);
nlohmann::ordered_json to_json(const FreeEnergyPrediction& p);

}  // namespace lgt
