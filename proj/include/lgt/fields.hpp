#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace lgt {

enum class Boundary { kZeroExtended, kPeriodic };

/// Cubic site grid {origin, ..., origin + side - 1}^d, indexed lexicographically.
///
/// With kZeroExtended, reads outside the grid are zero; this realises the
/// embedding of a compactly supported field into Z^d as long as the grid has
/// one spare layer around the support. With kPeriodic the grid is the torus
/// (Z / side Z)^d.
class Grid {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Grid(int dim, int side, int origin, Boundary boundary);

  int dim() const { return dim_; }
  int side() const { return side_; }
  int origin() const { return origin_; }
  Boundary boundary() const { return boundary_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int axis) const { return strides_[axis]; }

  /// Index of the site with absolute coordinates x. Periodic grids wrap;
  /// zero-extended grids return nullopt outside.
  std::optional<std::size_t> index(std::span<const int> x) const;
  void coords(std::size_t site, std::span<int> out) const;
  int coord(std::size_t site, int axis) const {
    return origin_ + static_cast<int>((site / strides_[axis]) % static_cast<std::size_t>(side_));
  }
  /// Neighbour at offset +-1 along axis, or npos outside a zero-extended grid.
  std::size_t neighbor(std::size_t site, int axis, int delta) const;

  bool operator==(const Grid&) const = default;

 private:
  int dim_;
  int side_;
  int origin_;
  Boundary boundary_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

/// Vector of `components` scalar fields on a common grid. Components beyond
/// `components` (up to grid.dim()) are identically zero.
struct OneForm {
  OneForm(Grid g, int components);

  Grid grid;
  std::vector<std::vector<double>> values;

  int components() const { return static_cast<int>(values.size()); }
  double& at(int c, std::size_t site) { return values[c][site]; }
  double at(int c, std::size_t site) const { return values[c][site]; }
  double norm_squared() const;
};

double inner(const OneForm& a, const OneForm& b);

struct SparseEntry {
  int component;
  std::size_t site;
  double value;
};

/// A one-form given by its nonzero entries on some grid.
struct SparseOneForm {
  std::vector<SparseEntry> entries;
};

OneForm densify(const Grid& grid, int components, const SparseOneForm& s);
/// <s, w> for a sparse s and dense w on the same grid.
double inner(const SparseOneForm& s, const OneForm& w);

// Lattice derivatives: (d_i f)(x) = f(x+e_i) - f(x), (d_i^* f)(x) = f(x-e_i) - f(x).
std::vector<double> forward_difference(const Grid& g, std::span<const double> f, int axis);
std::vector<double> forward_difference_adjoint(const Grid& g, std::span<const double> f, int axis);
/// -Delta f = sum_i d_i^* d_i f
std::vector<double> neg_laplacian(const Grid& g, std::span<const double> f);

/// (Q w)_i = -Delta w_i - sum_j d_i d_j^* w_j over the components present in w,
/// fused into a single nearest-neighbour stencil and parallelised over sites.
OneForm apply_maxwell(const OneForm& w);

/// 1/2 sum_{i,j < dim} || d_i w_j - d_j w_i ||^2, missing components read as zero.
double curl_form(const OneForm& w);

namespace reference {
/// Serial composition of the primitive difference operators; the fused
/// kernel is tested against it.
OneForm apply_maxwell(const OneForm& w);
}  // namespace reference

}  // namespace lgt
