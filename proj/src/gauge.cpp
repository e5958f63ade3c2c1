#include "lgt/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace lgt {

EdgeField::EdgeField(const Lattice& lat, std::vector<double> values) : lat_(&lat), values_(std::move(values)) {
  if (values_.size() != lat.edge_count()) throw std::invalid_argument("edge field size mismatch");
}

double EdgeField::oriented(std::span<const int> x, std::span<const int> y) const {
  const int d = lat_->dim();
  if (x.size() != static_cast<std::size_t>(d) || y.size() != static_cast<std::size_t>(d)) return 0.0;
  int axis = -1;
  int delta = 0;
  for (int a = 0; a < d; ++a) {
    const int diff = y[a] - x[a];
    if (diff == 0) continue;
    if (axis >= 0 || (diff != 1 && diff != -1)) return 0.0;
    axis = a;
    delta = diff;
  }
  if (axis < 0) return 0.0;
  auto e = lat_->edge_index(delta > 0 ? x : y, axis);
  if (!e) return 0.0;
  return delta > 0 ? values_[*e] : -values_[*e];
}

AxialGauge::AxialGauge(const Lattice& lat) {
  const int d = lat.dim();
  tree_flag_.assign(lat.edge_count(), false);
  free_pos_.assign(lat.edge_count(), -1);
  for (std::size_t e = 0; e < lat.edge_count(); ++e) {
    const auto [base, j] = lat.edge(e);
    auto x = lat.vertex_coords(base);
    bool tree = true;
    for (int t = j + 1; t < d; ++t) {
      if (x[t] != 0) {
        tree = false;
        break;
      }
    }
    tree_flag_[e] = tree;
    if (tree) {
      tree_.push_back(e);
    } else {
      free_pos_[e] = static_cast<std::int64_t>(free_.size());
      free_.push_back(e);
    }
  }

  zero_sets_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (std::size_t v = 0; v < lat.vertex_count(); ++v) {
      auto e = lat.edge_index(v, i);
      const bool tree_edge = e && tree_flag_[*e];
      const bool dangling = lat.on_boundary(v) && !e;
      if (tree_edge || dangling) zero_sets_[i].push_back(v);
    }
  }
}

std::optional<std::size_t> AxialGauge::free_position(std::size_t e) const {
  if (e >= free_pos_.size() || free_pos_[e] < 0) return std::nullopt;
  return static_cast<std::size_t>(free_pos_[e]);
}

Grid padded_grid(const Lattice& lat) {
  return Grid(lat.dim(), lat.side() + 3, -1, Boundary::kZeroExtended);
}

std::size_t padded_site(const Lattice& lat, const Grid& g, std::size_t v) {
  return *g.index(lat.vertex_coords(v));
}

OneForm edge_field_to_one_form(const EdgeField& u) {
  const Lattice& lat = u.lattice();
  OneForm w(padded_grid(lat), lat.dim());
  for (std::size_t e = 0; e < lat.edge_count(); ++e) {
    const auto [base, axis] = lat.edge(e);
    w.at(axis, padded_site(lat, w.grid, base)) = u[e];
  }
  return w;
}

EdgeField one_form_to_edge_field(const Lattice& lat, const OneForm& w) {
  if (!(w.grid == padded_grid(lat))) throw std::invalid_argument("one-form is not on the padded lattice grid");
  EdgeField u(lat);
  for (std::size_t e = 0; e < lat.edge_count(); ++e) {
    const auto [base, axis] = lat.edge(e);
    if (axis < w.components()) u[e] = w.at(axis, padded_site(lat, w.grid, base));
  }
  return u;
}

std::vector<SparseOneForm> axial_basis(const Lattice& lat, const AxialGauge& gauge) {
  const Grid g = padded_grid(lat);
  std::vector<SparseOneForm> basis;
  basis.reserve(gauge.free_edges().size());
  for (auto e : gauge.free_edges()) {
    const auto [base, axis] = lat.edge(e);
    basis.push_back(SparseOneForm{{{axis, padded_site(lat, g, base), 1.0}}});
  }
  return basis;
}

bool in_axial_space(const Lattice& lat, const AxialGauge& gauge, const OneForm& w, double tol) {
  if (!(w.grid == padded_grid(lat))) return false;
  std::vector<bool> inside(w.grid.size(), false);
  for (std::size_t v = 0; v < lat.vertex_count(); ++v) inside[padded_site(lat, w.grid, v)] = true;
  for (int i = 0; i < w.components(); ++i) {
    for (std::size_t s = 0; s < w.grid.size(); ++s) {
      if (!inside[s] && std::abs(w.at(i, s)) > tol) return false;
    }
    for (auto v : gauge.zero_set(i)) {
      if (std::abs(w.at(i, padded_site(lat, w.grid, v))) > tol) return false;
    }
  }
  return true;
}

long long free_edge_count_asymptotic(int d, int n) {
  long long nd = 1;
  long long nd1 = 1;
  for (int a = 0; a < d; ++a) nd *= n;
  for (int a = 0; a + 1 < d; ++a) nd1 *= n;
  return (d - 1) * nd - d * nd1 + 1;
}

nlohmann::ordered_json summary_json(const Lattice& lat, const AxialGauge& gauge) {
  nlohmann::ordered_json j;
  j["d"] = lat.dim();
  j["n"] = lat.side();
  j["tree_edge_count"] = gauge.tree_edges().size();
  j["free_edge_count"] = gauge.free_edges().size();
  j["dim_axial_space"] = gauge.free_edges().size();
  j["free_edge_count_asymptotic"] = free_edge_count_asymptotic(lat.dim(), lat.side());
  std::vector<std::size_t> sizes;
  for (int i = 0; i < lat.dim(); ++i) sizes.push_back(gauge.zero_set(i).size());
  j["zero_set_sizes"] = sizes;
  return j;
}

}  // namespace lgt
