#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "lgt/fields.hpp"
#include "lgt/lattice.hpp"

namespace lgt {

/// Real values on the oriented edges of a lattice, zero-extended to Z^d.
/// Reading an edge against its orientation flips the sign.
class EdgeField {
 public:
  explicit EdgeField(const Lattice& lat) : lat_(&lat), values_(lat.edge_count(), 0.0) {}
  EdgeField(const Lattice& lat, std::vector<double> values);

  const Lattice& lattice() const { return *lat_; }
  std::span<const double> values() const { return values_; }
  double& operator[](std::size_t e) { return values_[e]; }
  double operator[](std::size_t e) const { return values_[e]; }

  /// u_(x,y) for any pair of sites in Z^d: +u_e for e = (x,y), -u_e for
  /// e = (y,x), 0 if the pair is not an edge of the box.
  double oriented(std::span<const int> x, std::span<const int> y) const;

 private:
  const Lattice* lat_;
  std::vector<double> values_;
};

/// Axial gauge: the maximal tree rooted at the origin made of the edges
/// (x, x+e_j) with x_t = 0 for all t > j, its complement, and the per-axis
/// zero sets that cut the free one-forms out of all one-forms on the box.
class AxialGauge {
 public:
  explicit AxialGauge(const Lattice& lat);

  bool in_tree(std::size_t e) const { return tree_flag_[e]; }
  const std::vector<std::size_t>& tree_edges() const { return tree_; }
  const std::vector<std::size_t>& free_edges() const { return free_; }
  /// Position of e among free_edges(), if e is free.
  std::optional<std::size_t> free_position(std::size_t e) const;
  /// Vertices where component `axis` of an axial one-form must vanish.
  const std::vector<std::size_t>& zero_set(int axis) const { return zero_sets_[axis]; }

 private:
  std::vector<bool> tree_flag_;
  std::vector<std::size_t> tree_;
  std::vector<std::size_t> free_;
  std::vector<std::int64_t> free_pos_;
  std::vector<std::vector<std::size_t>> zero_sets_;
};

/// Grid {-1, ..., n+1}^d: the box with one zero layer on every side, enough
/// to evaluate nearest-neighbour operators on zero-extended fields exactly.
Grid padded_grid(const Lattice& lat);

/// Site of the padded grid holding lattice vertex v.
std::size_t padded_site(const Lattice& lat, const Grid& g, std::size_t v);

/// w_i(x) = u_(x, x+e_i), as a d-component one-form on padded_grid(lat).
OneForm edge_field_to_one_form(const EdgeField& u);
/// Inverse of edge_field_to_one_form; ignores values off the edge slots.
EdgeField one_form_to_edge_field(const Lattice& lat, const OneForm& w);

/// Indicator one-forms of the free edges, in free-edge order. Orthonormal.
std::vector<SparseOneForm> axial_basis(const Lattice& lat, const AxialGauge& gauge);

/// True if w vanishes on every zero set, off the box and in component d.
bool in_axial_space(const Lattice& lat, const AxialGauge& gauge, const OneForm& w, double tol = 0.0);

/// The asymptotic free-edge count (d-1) n^d - d n^{d-1} + 1, which is exact
/// for a box with n sites per axis rather than n + 1.
long long free_edge_count_asymptotic(int d, int n);

nlohmann::ordered_json summary_json(const Lattice& lat, const AxialGauge& gauge);

}  // namespace lgt
