#include "lgt/fields.hpp"

#include <stdexcept>
#include <string>

namespace lgt {

Grid::Grid(int dim, int side, int origin, Boundary boundary)
    : dim_(dim), side_(side), origin_(origin), boundary_(boundary) {
  if (dim < 1) throw std::invalid_argument("grid dimension must be positive");
  if (side < 1) throw std::invalid_argument("grid side must be positive");
  strides_.assign(static_cast<std::size_t>(dim), 1);
  for (int a = dim - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * static_cast<std::size_t>(side);
  size_ = strides_[0] * static_cast<std::size_t>(side);
}

std::optional<std::size_t> Grid::index(std::span<const int> x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) return std::nullopt;
  std::size_t site = 0;
  for (int a = 0; a < dim_; ++a) {
    int c = x[a] - origin_;
    if (boundary_ == Boundary::kPeriodic) {
      c %= side_;
      if (c < 0) c += side_;
    } else if (c < 0 || c >= side_) {
      return std::nullopt;
    }
    site += static_cast<std::size_t>(c) * strides_[a];
  }
  return site;
}

void Grid::coords(std::size_t site, std::span<int> out) const {
  for (int a = 0; a < dim_; ++a) out[a] = coord(site, a);
}

std::size_t Grid::neighbor(std::size_t site, int axis, int delta) const {
  const int c = static_cast<int>((site / strides_[axis]) % static_cast<std::size_t>(side_));
  const int t = c + delta;
  if (t >= 0 && t < side_) {
    return delta >= 0 ? site + strides_[axis] : site - strides_[axis];
  }
  if (boundary_ == Boundary::kZeroExtended) return npos;
  const std::size_t wrap = strides_[axis] * static_cast<std::size_t>(side_ - 1);
  return t < 0 ? site + wrap : site - wrap;
}

OneForm::OneForm(Grid g, int components)
    : grid(std::move(g)),
      values(static_cast<std::size_t>(components), std::vector<double>(grid.size(), 0.0)) {
  if (components < 0 || components > grid.dim()) {
    throw std::invalid_argument("one-form component count " + std::to_string(components) +
                                " outside [0, " + std::to_string(grid.dim()) + "]");
  }
}

double OneForm::norm_squared() const { return inner(*this, *this); }

double inner(const OneForm& a, const OneForm& b) {
  if (!(a.grid == b.grid) || a.components() != b.components()) {
    throw std::invalid_argument("inner product of one-forms on different spaces");
  }
  double s = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (std::size_t x = 0; x < a.grid.size(); ++x) s += a.values[c][x] * b.values[c][x];
  }
  return s;
}

OneForm densify(const Grid& grid, int components, const SparseOneForm& s) {
  OneForm w(grid, components);
  for (const auto& e : s.entries) w.at(e.component, e.site) += e.value;
  return w;
}

double inner(const SparseOneForm& s, const OneForm& w) {
  double acc = 0.0;
  for (const auto& e : s.entries) acc += e.value * w.at(e.component, e.site);
  return acc;
}

namespace {

double read(std::span<const double> f, std::size_t site) {
  return site == Grid::npos ? 0.0 : f[site];
}

}  // namespace

std::vector<double> forward_difference(const Grid& g, std::span<const double> f, int axis) {
  std::vector<double> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = read(f, g.neighbor(x, axis, 1)) - f[x];
  return out;
}

std::vector<double> forward_difference_adjoint(const Grid& g, std::span<const double> f, int axis) {
  std::vector<double> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = read(f, g.neighbor(x, axis, -1)) - f[x];
  return out;
}

std::vector<double> neg_laplacian(const Grid& g, std::span<const double> f) {
  std::vector<double> out(g.size(), 0.0);
  for (int a = 0; a < g.dim(); ++a) {
    auto df = forward_difference(g, f, a);
    auto adj = forward_difference_adjoint(g, df, a);
    for (std::size_t x = 0; x < g.size(); ++x) out[x] += adj[x];
  }
  return out;
}

OneForm apply_maxwell(const OneForm& w) {
  const Grid& g = w.grid;
  const int d = g.dim();
  const int m = w.components();
  OneForm out(g, m);
  const auto sites = static_cast<std::int64_t>(g.size());

#pragma omp parallel for schedule(static)
  for (std::int64_t sx = 0; sx < sites; ++sx) {
    const auto x = static_cast<std::size_t>(sx);
    for (int i = 0; i < m; ++i) {
      const auto& wi = w.values[i];
      // -Delta w_i
      double acc = 2.0 * d * wi[x];
      for (int a = 0; a < d; ++a) {
        acc -= read(wi, g.neighbor(x, a, 1)) + read(wi, g.neighbor(x, a, -1));
      }
      // -d_i d_j^* w_j = -[w_j(x+e_i-e_j) - w_j(x+e_i) - w_j(x-e_j) + w_j(x)]
      const std::size_t xi = g.neighbor(x, i, 1);
      for (int j = 0; j < m; ++j) {
        const auto& wj = w.values[j];
        const std::size_t xmj = g.neighbor(x, j, -1);
        const std::size_t xi_mj = xi == Grid::npos ? Grid::npos : g.neighbor(xi, j, -1);
        acc -= read(wj, xi_mj) - read(wj, xi) - read(wj, xmj) + wj[x];
      }
      out.values[i][x] = acc;
    }
  }
  return out;
}

double curl_form(const OneForm& w) {
  const Grid& g = w.grid;
  const int d = g.dim();
  const int m = w.components();
  const std::vector<double> zero(g.size(), 0.0);
  auto comp = [&](int c) -> std::span<const double> { return c < m ? w.values[c] : zero; };
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      auto diwj = forward_difference(g, comp(j), i);
      auto djwi = forward_difference(g, comp(i), j);
      for (std::size_t x = 0; x < g.size(); ++x) {
        const double c = diwj[x] - djwi[x];
        total += c * c;
      }
    }
  }
  return 0.5 * total;
}

namespace reference {

OneForm apply_maxwell(const OneForm& w) {
  const Grid& g = w.grid;
  const int m = w.components();
  OneForm out(g, m);
  std::vector<std::vector<double>> adj(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) adj[j] = forward_difference_adjoint(g, w.values[j], j);
  for (int i = 0; i < m; ++i) {
    auto lap = neg_laplacian(g, w.values[i]);
    for (int j = 0; j < m; ++j) {
      auto mixed = forward_difference(g, adj[j], i);
      for (std::size_t x = 0; x < g.size(); ++x) lap[x] -= mixed[x];
    }
    out.values[i] = std::move(lap);
  }
  return out;
}

}  // namespace reference

}  // namespace lgt
