#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgt/symmetric_operator.hpp"

namespace lgt {

enum class Execution { kSerial, kParallel };

struct EigenOptions {
  /// Off-diagonal e_m is deflated once |e_m| <= tol * (|d_m| + |d_m+1|).
  double deflation_tol = 1e-12;
  int max_iterations = 60;  // QL sweeps per eigenvalue
  Execution execution = Execution::kParallel;
};

class EigenNonConvergence : public std::runtime_error {
 public:
  EigenNonConvergence(std::size_t index, int iterations, double residual);
  std::size_t index() const { return index_; }
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::size_t index_;
  int iterations_;
  double residual_;
};

/// Symmetric tridiagonal matrix: diag[0..n), offdiag[i] couples i and i+1
/// (offdiag has n entries, the last one unused).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

namespace kernels {

/// Householder reduction of the row-major symmetric n x n matrix `a` (full
/// storage, overwritten). If `q` is non-null it receives the orthogonal Q
/// (row-major) with a = Q T Q^T.
Tridiagonal tridiagonalize_serial(std::vector<double>& a, std::size_t n, std::vector<double>* q);
/// Same reduction with the O(n^2) work per step split across OpenMP threads.
/// All reductions are kept in serial order, so the result is bitwise equal
/// to tridiagonalize_serial.
Tridiagonal tridiagonalize_omp(std::vector<double>& a, std::size_t n, std::vector<double>* q);

/// Implicit-shift QL on a tridiagonal matrix. Eigenvalues are left in t.diag
/// (unsorted). If z is non-null its columns (row-major n x n) are rotated
/// along, turning Q into the eigenvector matrix.
void tridiagonal_ql(Tridiagonal& t, std::vector<double>* z, const EigenOptions& opts);

}  // namespace kernels

/// Ascending eigenvalues with multiplicity.
std::vector<double> symmetric_eigenvalues(const SymmetricOperator& a, const EigenOptions& opts = {});

struct EigenSystem {
  std::size_t dim = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major; column k is the eigenvector of values[k]
  double component(std::size_t row, std::size_t k) const { return vectors[row * dim + k]; }
};
EigenSystem symmetric_eigensystem(const SymmetricOperator& a, const EigenOptions& opts = {});

}  // namespace lgt
