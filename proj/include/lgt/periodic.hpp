#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgt/fields.hpp"
#include "lgt/gauge.hpp"
#include "lgt/lattice.hpp"
#include "lgt/symmetric_operator.hpp"

namespace lgt {

/// Periodic grid (Z/nZ)^d with sites 0..n-1 per axis.
Grid torus_grid(int d, int n);

/// Row/column of the torus operator for (site, component): site * (d-1) + component.
inline std::size_t torus_basis_index(int d, std::size_t site, int component) {
  return site * static_cast<std::size_t>(d - 1) + static_cast<std::size_t>(component);
}

/// (Q^per w)_i = -Delta w_i - sum_{j<d-1} d_i d_j^* w_j on d-1 components over
/// the torus, as a dense matrix of dimension (d-1) n^d. Rejects n < 2.
SymmetricOperator torus_operator(int d, int n);
/// The same operator on an arbitrary periodic grid.
SymmetricOperator torus_operator(const Grid& torus);

/// epsilon_p = 2 sum_k (1 - cos 2 pi q_k / n)
double torus_symbol(int n, std::span<const int> q);

enum class ModeFamily { kZeroMode, kAxisAligned, kLongitudinal, kTransverse };
const char* family_name(ModeFamily f);

struct SpectralEntry {
  std::vector<int> q;  // frequency p = q / n
  double eigenvalue;
  int multiplicity;
  ModeFamily family;
  bool structural_zero;  // eigenvalue vanishes identically
};

struct AnalyticSpectrum {
  int d = 0;
  int n = 0;
  std::vector<SpectralEntry> entries;  // ordered by q, then family

  std::size_t total_multiplicity() const;
  /// Ascending multiset with multiplicities expanded.
  std::vector<double> sorted_values() const;
  double smallest_positive() const;
  std::size_t zero_count() const;
};

/// Closed-form spectrum from the plane-wave decomposition, per frequency:
/// p = 0 gives 0 (x d-1); p' = 0, p_d != 0 gives 2(1 - cos 2 pi p_d) (x d-1);
/// otherwise 2(1 - cos 2 pi p_d) (x 1) and epsilon_p (x d-2).
AnalyticSpectrum analytic_spectrum(int d, int n);
nlohmann::ordered_json to_json(const AnalyticSpectrum& s);

/// (d-1) + n^{d-1} - 1
long long kernel_dimension(int d, int n);

/// -(1 / 2n^d) sum over positive analytic eigenvalues of mult * log lambda.
double periodic_free_energy(int d, int n);

/// Torus of side n + 1 + 2 margin with the box sitting at offset margin:
/// grid origin is -margin so lattice coordinates are kept.
Grid embedding_torus(const Lattice& lat, int margin);

/// Periodic image of an axial one-form (d components on padded_grid(lat),
/// last component zero) as a (d-1)-component field on embedding_torus.
/// Rejects margin < 2 and fields outside the axial space.
OneForm embed_axial_into_torus(const Lattice& lat, const AxialGauge& gauge, const OneForm& w, int margin = 2);

/// Torus basis indices of the free edges, in free-edge order.
std::vector<std::size_t> embedded_axial_rows(const Lattice& lat, const AxialGauge& gauge, int margin = 2);

}  // namespace lgt
