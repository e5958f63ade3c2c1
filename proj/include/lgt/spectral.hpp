#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgt/eigen.hpp"
#include "lgt/symmetric_operator.hpp"

namespace lgt {

class SingularOperator : public std::runtime_error {
 public:
  SingularOperator(std::size_t count, double tol);
  std::size_t count() const { return count_; }
  double tolerance() const { return tol_; }

 private:
  std::size_t count_;
  double tol_;
};

std::vector<double> sym_eigs(const SymmetricOperator& a, const EigenOptions& opts = {});

/// Default singularity threshold 1e-10 * max |lambda|.
double singular_tolerance(std::span<const double> eigenvalues);

/// sum log lambda_j; throws SingularOperator if any lambda_j <= tol.
double trace_log(std::span<const double> eigenvalues, double tol);
double trace_log(std::span<const double> eigenvalues);

/// -trace_log / (2 n^d)
double density_from_trace_log(double trace_log, int d, int n);
double free_energy_density(const SymmetricOperator& a, int d, int n);

struct SpectrumReport {
  std::string operator_name;
  int d = 0;
  int n = 0;
  std::vector<double> eigenvalues;  // ascending
  std::optional<double> trace_log;  // empty when singular
  std::optional<double> free_energy_density;
  std::size_t singular_count = 0;

  std::size_t dim() const { return eigenvalues.size(); }
  double gap() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

SpectrumReport spectrum_report(const SymmetricOperator& a, int d, int n, const EigenOptions& opts = {});
nlohmann::ordered_json to_json(const SpectrumReport& r, bool with_eigenvalues);

/// Orthonormal columns stored row-major: basis[row * rank + col].
struct DenseBasis {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<double> data;
  double operator()(std::size_t row, std::size_t col) const { return data[row * rank + col]; }
};

/// Coordinate basis picking out the given rows.
DenseBasis coordinate_basis(std::size_t dim, std::span<const std::size_t> rows);

/// V^T A V
SymmetricOperator project(const SymmetricOperator& a, const DenseBasis& v, std::string name);

struct InterlacingResult {
  bool ok = true;
  std::optional<std::size_t> first_violation;  // 0-based j
  double max_violation = 0.0;
  double tolerance = 0.0;
};

/// lambda_j(A) <= lambda_j(V^T A V) <= lambda_{j+k-l}(A), j < l, within
/// 1e-8 * ||A|| (Frobenius norm).
InterlacingResult check_interlacing(std::span<const double> eig_a, std::span<const double> eig_projected,
                                    double norm_a);
InterlacingResult check_interlacing(const SymmetricOperator& a, const DenseBasis& v, const EigenOptions& opts = {});

struct SubspaceComparison {
  double density_full;
  double density_subspace;
  double difference;  // density_full - density_subspace
  InterlacingResult interlacing;
};

/// Densities of A and of its compression to V. Throws std::logic_error if the
/// compression violates interlacing and SingularOperator if either is singular.
SubspaceComparison compare_dropped_subspace(const SymmetricOperator& a, const DenseBasis& v, int d, int n,
                                            const EigenOptions& opts = {});

}  // namespace lgt
