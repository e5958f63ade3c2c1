#include "lgt/kd.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lgt {

namespace {

void require_grid(long long m) {
  if (m < 2) throw std::invalid_argument("grid size must be >= 2, got " + std::to_string(m));
}

std::vector<double> symbol_table(long long m) {
  std::vector<double> c(static_cast<std::size_t>(m));
  for (long long q = 0; q < m; ++q) {
    c[q] = 1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(m));
  }
  return c;
}

// Sum over q_2..q_d in {1..m-1} of log(base + sum_k c[q_k]), odometer order.
double slab_sum(const std::vector<double>& c, int rest_dims, long long m, double base) {
  if (rest_dims == 0) return std::log(base);
  std::vector<long long> q(static_cast<std::size_t>(rest_dims), 1);
  double total = 0.0;
  for (;;) {
    double s = base;
    for (auto v : q) s += c[v];
    total += std::log(s);
    int k = rest_dims - 1;
    while (k >= 0 && ++q[k] == m) q[k--] = 1;
    if (k < 0) break;
  }
  return total;
}

double finish(const std::vector<double>& partial, int d, long long m) {
  double total = 0.0;
  for (double p : partial) total += p;
  return total / std::pow(static_cast<double>(m), d);
}

}  // namespace

double one_dim_log_integral(long long m) {
  require_grid(m);
  const auto c = symbol_table(m);
  double s = 0.0;
  for (long long q = 1; q < m; ++q) s += std::log(c[q]);
  return s / static_cast<double>(m);
}

double d_dim_log_integral(int d, long long m) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  require_grid(m);
  const auto c = symbol_table(m);
  std::vector<double> partial(static_cast<std::size_t>(m - 1), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long long q1 = 1; q1 < m; ++q1) partial[q1 - 1] = slab_sum(c, d - 1, m, c[q1]);
  return finish(partial, d, m);
}

namespace reference {

double d_dim_log_integral(int d, long long m) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  require_grid(m);
  const auto c = symbol_table(m);
  std::vector<double> partial(static_cast<std::size_t>(m - 1), 0.0);
  for (long long q1 = 1; q1 < m; ++q1) partial[q1 - 1] = slab_sum(c, d - 1, m, c[q1]);
  return finish(partial, d, m);
}

}  // namespace reference

KdEstimate kd_value(int d, long long m) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
  KdEstimate k;
  k.d = d;
  k.grid = m;
  k.method = "riemann";
  k.log2_term = -0.5 * (d - 1) * std::numbers::ln2;
  k.one_dim_integral = one_dim_log_integral(m);
  k.one_dim_integral_term = -0.5 * *k.one_dim_integral;
  if (d > 2) {
    k.d_dim_integral = d_dim_log_integral(d, m);
    k.d_dim_integral_term = -0.5 * (d - 2) * *k.d_dim_integral;
  }
  k.value = k.log2_term + k.one_dim_integral_term + k.d_dim_integral_term;
  return k;
}

KdEstimate kd_analytic_d2() {
  KdEstimate k;
  k.d = 2;
  k.method = "analytic-d2";
  k.log2_term = -0.5 * std::numbers::ln2;
  k.one_dim_integral = -std::numbers::ln2;
  k.one_dim_integral_term = 0.5 * std::numbers::ln2;
  k.value = 0.0;
  return k;
}

nlohmann::ordered_json to_json(const KdEstimate& k) {
  nlohmann::ordered_json j;
  j["d"] = k.d;
  j["method"] = k.method;
  j["grid"] = k.grid;
  j["value"] = k.value;
  j["pieces"] = {{"log2_term", k.log2_term},
                 {"one_dim_integral_term", k.one_dim_integral_term},
                 {"d_dim_integral_term", k.d_dim_integral_term}};
  j["one_dim_integral"] = k.one_dim_integral ? nlohmann::ordered_json(*k.one_dim_integral) : nullptr;
  j["d_dim_integral"] = k.d_dim_integral ? nlohmann::ordered_json(*k.d_dim_integral) : nullptr;
  return j;
}

double log_factorial_product(int N) {
  if (N < 1) throw std::invalid_argument("group rank must be >= 1, got " + std::to_string(N));
  if (N <= 20) {
    long double prod = 1.0L;
    long double fact = 1.0L;
    for (int j = 1; j < N; ++j) {
      fact *= j;
      prod *= fact;
    }
    return static_cast<double>(std::log(prod));
  }
  double s = 0.0;
  for (int j = 1; j < N; ++j) s += std::lgamma(static_cast<double>(j) + 1.0);
  return s;
}

FreeEnergyPrediction leading_order_free_energy(int d, int n, int N, double g, double kd) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
  if (n < 1) throw std::invalid_argument("lattice side must be >= 1, got " + std::to_string(n));
  if (!(g > 0.0)) throw std::invalid_argument("coupling must be positive");
  FreeEnergyPrediction p;
  p.d = d;
  p.n = n;
  p.N = N;
  p.g = g;
  p.kd = kd;
  long long np1 = 1;
  long long np1_dm1 = 1;
  long long nd = 1;
  long long nd_m1 = 1;
  for (int k = 0; k < d; ++k) {
    np1 *= n + 1;
    nd *= n;
    if (k < d - 1) {
      np1_dm1 *= n + 1;
      nd_m1 *= n;
    }
  }
  p.free_edges = static_cast<long long>(d) * n * np1_dm1 - np1 + 1;
  p.free_edges_asymptotic = static_cast<long long>(d - 1) * nd - static_cast<long long>(d) * nd_m1 + 1;
  const double n2 = static_cast<double>(N) * N;
  p.gaussian_scaling_term = static_cast<double>(p.free_edges) / (2.0 * static_cast<double>(nd)) * n2 * std::log(g * g);
  p.haar_jacobian_term = (d - 1) * (log_factorial_product(N) - 0.5 * N * std::log(2.0 * std::numbers::pi));
  p.kd_term = n2 * kd;
  p.value = p.gaussian_scaling_term + p.haar_jacobian_term + p.kd_term;
  return p;
}

nlohmann::ordered_json to_json(const FreeEnergyPrediction& p) {
  nlohmann::ordered_json j;
  j["d"] = p.d;
  j["n"] = p.n;
  j["N"] = p.N;
  j["g"] = p.g;
  j["kd"] = p.kd;
  j["free_edge_count"] = p.free_edges;
  j["free_edge_count_asymptotic"] = p.free_edges_asymptotic;
  j["terms"] = {{"gaussian_scaling_term", p.gaussian_scaling_term},
                {"haar_jacobian_term", p.haar_jacobian_term},
                {"kd_term", p.kd_term}};
  j["value"] = p.value;
  return j;
}

}  // namespace lgt
