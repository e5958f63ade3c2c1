#include "lgt/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lgt {

Lattice::Lattice(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("lattice dimension must be >= 2, got " + std::to_string(d));
  if (n < 1) throw std::invalid_argument("lattice side must be >= 1, got " + std::to_string(n));

  const std::size_t per_axis = static_cast<std::size_t>(n) + 1;
  strides_.assign(static_cast<std::size_t>(d), 1);
  for (int a = d - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * per_axis;
  vertex_count_ = strides_[0] * per_axis;

  coords_.resize(vertex_count_ * static_cast<std::size_t>(d));
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::size_t rest = v;
    for (int a = 0; a < d; ++a) {
      coords_[v * d + a] = static_cast<int>(rest / strides_[a]);
      rest %= strides_[a];
    }
  }

  edge_lookup_.assign(vertex_count_ * static_cast<std::size_t>(d), -1);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto x = vertex_coords(v);
    for (int a = 0; a < d; ++a) {
      if (x[a] < n) {
        edge_lookup_[v * d + a] = static_cast<std::int64_t>(edges_.size());
        edges_.push_back({v, a});
      }
    }
  }

  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto x = vertex_coords(v);
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        if (x[j] < n && x[k] < n) plaquettes_.push_back({v, j, k});
      }
    }
  }

  strata_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto x = vertex_coords(edges_[e].base);
    int frozen = 0;
    for (int a = 0; a < d; ++a) {
      if (a != edges_[e].axis && (x[a] == 0 || x[a] == n)) ++frozen;
    }
    strata_[e] = frozen;
  }
}

std::optional<std::size_t> Lattice::vertex_index(std::span<const int> x) const {
  if (x.size() != static_cast<std::size_t>(d_)) return std::nullopt;
  std::size_t v = 0;
  for (int a = 0; a < d_; ++a) {
    if (x[a] < 0 || x[a] > n_) return std::nullopt;
    v += static_cast<std::size_t>(x[a]) * strides_[a];
  }
  return v;
}

std::optional<std::size_t> Lattice::step(std::size_t v, int axis, int delta) const {
  const int c = coords_[v * d_ + axis] + delta;
  if (c < 0 || c > n_) return std::nullopt;
  return delta >= 0 ? v + static_cast<std::size_t>(delta) * strides_[axis]
                    : v - static_cast<std::size_t>(-delta) * strides_[axis];
}

std::size_t Lattice::edge_head(std::size_t e) const {
  return edges_[e].base + strides_[edges_[e].axis];
}

std::optional<std::size_t> Lattice::edge_index(std::size_t base, int axis) const {
  if (base >= vertex_count_ || axis < 0 || axis >= d_) return std::nullopt;
  const auto idx = edge_lookup_[base * d_ + axis];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::optional<std::size_t> Lattice::edge_index(std::span<const int> base, int axis) const {
  auto v = vertex_index(base);
  if (!v) return std::nullopt;
  return edge_index(*v, axis);
}

std::array<std::size_t, 4> Lattice::plaquette_edges(const Plaquette& p) const {
  const std::size_t xj = p.base + strides_[p.j];
  const std::size_t xk = p.base + strides_[p.k];
  return {*edge_index(p.base, p.j), *edge_index(xj, p.k), *edge_index(xk, p.j),
          *edge_index(p.base, p.k)};
}

std::vector<std::size_t> Lattice::strata_histogram() const {
  std::vector<std::size_t> hist(static_cast<std::size_t>(d_), 0);
  for (int s : strata_) ++hist[s];
  return hist;
}

bool Lattice::on_boundary(std::size_t v) const {
  for (int a = 0; a < d_; ++a) {
    const int c = coords_[v * d_ + a];
    if (c == 0 || c == n_) return true;
  }
  return false;
}

NeighborSets Lattice::neighbor_sets(std::size_t e) const {
  const auto [x, i] = edges_[e];
  NeighborSets out;
  // Resolve the edge starting at x + di*e_i + dj*e_j along `axis`.
  auto edge_at = [&](int di, int j, int dj, int axis) -> std::optional<std::size_t> {
    auto v = step(x, i, di);
    if (!v) return std::nullopt;
    v = step(*v, j, dj);
    if (!v) return std::nullopt;
    return edge_index(*v, axis);
  };
  auto push = [](std::vector<std::size_t>& dst, std::optional<std::size_t> f) {
    if (f) dst.push_back(*f);
  };
  for (int j = 0; j < d_; ++j) {
    if (j == i) continue;
    push(out.positive, edge_at(1, j, 0, j));    // (x+e_i, x+e_i+e_j)
    push(out.positive, edge_at(0, j, -1, j));   // (x-e_j, x)
    push(out.negative, edge_at(0, j, 1, i));    // (x+e_j, x+e_i+e_j)
    push(out.negative, edge_at(0, j, -1, i));   // (x-e_j, x+e_i-e_j)
    push(out.negative, edge_at(0, j, 0, j));    // (x, x+e_j)
    push(out.negative, edge_at(1, j, -1, j));   // (x+e_i-e_j, x+e_i)
  }
  return out;
}

std::vector<Plaquette> Lattice::plaquettes_containing(std::size_t e) const {
  const auto [x, i] = edges_[e];
  std::vector<Plaquette> out;
  for (int j = 0; j < d_; ++j) {
    if (j == i) continue;
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    // e is the j-free side of the square at x and at x - e_j.
    for (int dj : {0, -1}) {
      auto base = step(x, j, dj);
      if (!base) continue;
      if (!step(*base, j, 1) || !step(*base, i, 1)) continue;
      out.push_back({*base, lo, hi});
    }
  }
  return out;
}

nlohmann::ordered_json summary_json(const Lattice& lat) {
  nlohmann::ordered_json j;
  j["d"] = lat.dim();
  j["n"] = lat.side();
  j["vertex_count"] = lat.vertex_count();
  j["edge_count"] = lat.edge_count();
  j["plaquette_count"] = lat.plaquette_count();
  j["strata_histogram"] = lat.strata_histogram();
  return j;
}

}  // namespace lgt
