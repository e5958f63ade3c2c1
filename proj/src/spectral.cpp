#include "lgt/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace lgt {

SingularOperator::SingularOperator(std::size_t count, double tol)
    : std::runtime_error(std::to_string(count) + " eigenvalue(s) at or below the singularity tolerance " +
                         std::to_string(tol)),
      count_(count),
      tol_(tol) {}

std::vector<double> sym_eigs(const SymmetricOperator& a, const EigenOptions& opts) {
  return symmetric_eigenvalues(a, opts);
}

double singular_tolerance(std::span<const double> eigenvalues) {
  double m = 0.0;
  for (double v : eigenvalues) m = std::max(m, std::abs(v));
  return 1e-10 * m;
}

double trace_log(std::span<const double> eigenvalues, double tol) {
  std::size_t bad = 0;
  for (double v : eigenvalues) {
    if (!(v > tol)) ++bad;
  }
  if (bad > 0) throw SingularOperator(bad, tol);
  double s = 0.0;
  for (double v : eigenvalues) s += std::log(v);
  return s;
}

double trace_log(std::span<const double> eigenvalues) {
  return trace_log(eigenvalues, singular_tolerance(eigenvalues));
}

double density_from_trace_log(double tl, int d, int n) {
  return -tl / (2.0 * std::pow(static_cast<double>(n), d));
}

double free_energy_density(const SymmetricOperator& a, int d, int n) {
  return density_from_trace_log(trace_log(sym_eigs(a)), d, n);
}

SpectrumReport spectrum_report(const SymmetricOperator& a, int d, int n, const EigenOptions& opts) {
  SpectrumReport r;
  r.operator_name = a.name();
  r.d = d;
  r.n = n;
  r.eigenvalues = sym_eigs(a, opts);
  try {
    r.trace_log = trace_log(r.eigenvalues);
    r.free_energy_density = density_from_trace_log(*r.trace_log, d, n);
  } catch (const SingularOperator& e) {
    r.singular_count = e.count();
  }
  return r;
}

nlohmann::ordered_json to_json(const SpectrumReport& r, bool with_eigenvalues) {
  nlohmann::ordered_json j;
  j["operator_name"] = r.operator_name;
  j["d"] = r.d;
  j["n"] = r.n;
  j["dim"] = r.dim();
  j["lambda_min"] = r.eigenvalues.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.eigenvalues.front());
  j["lambda_max"] = r.eigenvalues.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.eigenvalues.back());
  if (r.trace_log) {
    j["trace_log"] = *r.trace_log;
    j["free_energy_density"] = *r.free_energy_density;
  } else {
    j["trace_log"] = nullptr;
    j["free_energy_density"] = nullptr;
    j["singular_count"] = r.singular_count;
  }
  if (with_eigenvalues) j["eigenvalues"] = r.eigenvalues;
  return j;
}

DenseBasis coordinate_basis(std::size_t dim, std::span<const std::size_t> rows) {
  DenseBasis v{dim, rows.size(), std::vector<double>(dim * rows.size(), 0.0)};
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (rows[c] >= dim) throw std::out_of_range("coordinate_basis row out of range");
    v.data[rows[c] * v.rank + c] = 1.0;
  }
  return v;
}

SymmetricOperator project(const SymmetricOperator& a, const DenseBasis& v, std::string name) {
  if (v.dim != a.dim()) throw std::invalid_argument("projection basis dimension mismatch");
  const std::size_t k = v.dim;
  const std::size_t l = v.rank;
  std::vector<double> av(k * l, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = a.row(i);
    for (std::size_t t = 0; t < k; ++t) {
      if (row[t] == 0.0) continue;
      for (std::size_t c = 0; c < l; ++c) av[i * l + c] += row[t] * v(t, c);
    }
  }
  std::vector<BasisLabel> labels;
  labels.reserve(l);
  for (std::size_t c = 0; c < l; ++c) labels.push_back({BasisLabel::Kind::kSiteComponent, c, -1});
  SymmetricOperator out(std::move(name), std::move(labels));
  for (std::size_t x = 0; x < l; ++x) {
    for (std::size_t y = x; y < l; ++y) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += v(i, x) * av[i * l + y];
      out.set(x, y, s);
    }
  }
  return out;
}

InterlacingResult check_interlacing(std::span<const double> eig_a, std::span<const double> eig_projected,
                                    double norm_a) {
  const std::size_t k = eig_a.size();
  const std::size_t l = eig_projected.size();
  if (l > k) throw std::invalid_argument("compression has larger dimension than the operator");
  InterlacingResult r;
  r.tolerance = 1e-8 * norm_a;
  for (std::size_t j = 0; j < l; ++j) {
    const double below = eig_a[j] - eig_projected[j];
    const double above = eig_projected[j] - eig_a[j + k - l];
    const double v = std::max(below, above);
    if (v > r.max_violation) r.max_violation = v;
    if (v > r.tolerance && r.ok) {
      r.ok = false;
      r.first_violation = j;
    }
  }
  return r;
}

InterlacingResult check_interlacing(const SymmetricOperator& a, const DenseBasis& v, const EigenOptions& opts) {
  const auto ea = sym_eigs(a, opts);
  const auto ep = sym_eigs(project(a, v, a.name() + "_projected"), opts);
  return check_interlacing(ea, ep, a.frobenius_norm());
}

SubspaceComparison compare_dropped_subspace(const SymmetricOperator& a, const DenseBasis& v, int d, int n,
                                            const EigenOptions& opts) {
  const auto ea = sym_eigs(a, opts);
  const auto ep = sym_eigs(project(a, v, a.name() + "_projected"), opts);
  SubspaceComparison out{};
  out.interlacing = check_interlacing(ea, ep, a.frobenius_norm());
  if (!out.interlacing.ok) {
    throw std::logic_error("interlacing violated at index " + std::to_string(*out.interlacing.first_violation) +
                           " by " + std::to_string(out.interlacing.max_violation));
  }
  out.density_full = density_from_trace_log(trace_log(ea), d, n);
  out.density_subspace = density_from_trace_log(trace_log(ep), d, n);
  out.difference = out.density_full - out.density_subspace;
  return out;
}

}  // namespace lgt
