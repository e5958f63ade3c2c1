#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace lgt {

using Coords = std::vector<int>;

/// Positively oriented edge (x, x + e_axis). `base` is a vertex index.
struct Edge {
  std::size_t base;
  int axis;
};

/// Plaquette spanned at its lexicographically smallest vertex by axes j < k.
struct Plaquette {
  std::size_t base;
  int j;
  int k;
};

struct NeighborSets {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};

/// The box {0,...,n}^d with its oriented edges, plaquettes and the boundary
/// stratification of its edges.
///
/// Vertices are indexed lexicographically (axis 0 most significant), edges by
/// (base vertex, axis) and plaquettes by (base vertex, j, k). All indices are
/// stable and used as matrix bases elsewhere. Immutable after construction.
class Lattice {
 public:
  /// Throws std::invalid_argument unless d >= 2 and n >= 1.
  Lattice(int d, int n);

  int dim() const { return d_; }
  int side() const { return n_; }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t plaquette_count() const { return plaquettes_.size(); }

  std::span<const int> vertex_coords(std::size_t v) const {
    return {coords_.data() + v * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
  }
  std::optional<std::size_t> vertex_index(std::span<const int> x) const;
  /// Vertex one step along `axis`; nullopt when it leaves the box.
  std::optional<std::size_t> step(std::size_t v, int axis, int delta) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::size_t edge_head(std::size_t e) const;
  std::optional<std::size_t> edge_index(std::size_t base, int axis) const;
  std::optional<std::size_t> edge_index(std::span<const int> base, int axis) const;

  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  /// Edges e1..e4 in the order (x,x+e_j), (x+e_j,x+e_j+e_k), (x+e_k,x+e_j+e_k), (x,x+e_k).
  std::array<std::size_t, 4> plaquette_edges(const Plaquette& p) const;

  /// Number of coordinates other than the edge axis frozen at 0 or n.
  int stratum(std::size_t e) const { return strata_[e]; }
  /// Edge counts per stratum, indexed 0..d-1.
  std::vector<std::size_t> strata_histogram() const;

  bool on_boundary(std::size_t v) const;

  /// Co-edges sharing a plaquette with e, split by the relative sign they
  /// carry in the plaquette sum. Built from the displacement pattern of an
  /// interior edge and intersected with the box.
  NeighborSets neighbor_sets(std::size_t e) const;
  std::vector<Plaquette> plaquettes_containing(std::size_t e) const;

 private:
  int d_;
  int n_;
  std::size_t vertex_count_;
  std::vector<std::size_t> strides_;
  std::vector<int> coords_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> edge_lookup_;  // vertex * d + axis -> edge or -1
  std::vector<Plaquette> plaquettes_;
  std::vector<int> strata_;
};

nlohmann::ordered_json summary_json(const Lattice& lat);

}  // namespace lgt
