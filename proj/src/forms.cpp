#include "lgt/forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace lgt {

namespace {

std::vector<BasisLabel> edge_labels(const Lattice& lat) {
  std::vector<BasisLabel> labels;
  labels.reserve(lat.edge_count());
  for (std::size_t e = 0; e < lat.edge_count(); ++e) {
    labels.push_back({BasisLabel::Kind::kEdge, e, lat.edge(e).axis});
  }
  return labels;
}

}  // namespace

IntegerSymmetricMatrix assemble_sigma_exact(const Lattice& lat) {
  const std::size_t m = lat.edge_count();
  IntegerSymmetricMatrix s{m, std::vector<std::int64_t>(m * m, 0)};
  const int d = lat.dim();
  for (std::size_t e = 0; e < m; ++e) {
    s.entries[e * m + e] = 2 * (d - 1) - lat.stratum(e);
    const auto nb = lat.neighbor_sets(e);
    for (auto f : nb.positive) s.entries[e * m + f] = 1;
    for (auto f : nb.negative) s.entries[e * m + f] = -1;
  }
  return s;
}

SymmetricOperator assemble_sigma(const Lattice& lat) {
  const auto exact = assemble_sigma_exact(lat);
  SymmetricOperator op("sigma", edge_labels(lat));
  for (std::size_t i = 0; i < exact.dim; ++i) {
    for (std::size_t j = i; j < exact.dim; ++j) {
      if (exact(i, j) != exact(j, i)) throw std::logic_error("plaquette stencil is not symmetric");
      op.set(i, j, static_cast<double>(exact(i, j)));
    }
  }
  return op;
}

SymmetricOperator restrict_to_axial(const SymmetricOperator& sigma, const AxialGauge& gauge) {
  return sigma.principal_submatrix(gauge.free_edges(), "sigma0");
}

OneForm apply_Qd(const OneForm& w) {
  if (w.grid.boundary() != Boundary::kZeroExtended) {
    throw std::invalid_argument("apply_Qd expects a zero-extended one-form");
  }
  return apply_maxwell(w);
}

OneForm apply_Rd(const Lattice& lat, const OneForm& w) {
  if (!(w.grid == padded_grid(lat))) throw std::invalid_argument("apply_Rd expects a one-form on the padded grid");
  OneForm out(w.grid, w.components());
  for (std::size_t e = 0; e < lat.edge_count(); ++e) {
    const auto [base, axis] = lat.edge(e);
    if (axis >= w.components()) continue;
    const auto s = padded_site(lat, w.grid, base);
    out.at(axis, s) = lat.stratum(e) * w.at(axis, s);
  }
  return out;
}

double SplitCheck::error() const { return std::abs(lhs - rhs); }

SplitCheck verify_sigma_split(const EdgeField& u) {
  const Lattice& lat = u.lattice();
  SplitCheck out{};
  out.lhs = sigma_form<double>(lat, u.values(), u.values());
  const OneForm w = edge_field_to_one_form(u);
  out.rhs = inner(w, apply_Qd(w)) - inner(w, apply_Rd(lat, w));
  return out;
}

double orthonormality_defect(std::span<const SparseOneForm> basis) {
  // Pair up basis vectors that share a slot; everything else is orthogonal.
  std::map<std::pair<int, std::size_t>, std::vector<std::pair<std::size_t, double>>> slots;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (const auto& e : basis[a].entries) slots[{e.component, e.site}].push_back({a, e.value});
  }
  std::map<std::pair<std::size_t, std::size_t>, double> gram;
  for (const auto& [slot, members] : slots) {
    for (const auto& [a, va] : members) {
      for (const auto& [b, vb] : members) {
        if (a <= b) gram[{a, b}] += va * vb;
      }
    }
  }
  double defect = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    auto it = gram.find({a, a});
    defect = std::max(defect, std::abs((it == gram.end() ? 0.0 : it->second) - 1.0));
  }
  for (const auto& [ab, g] : gram) {
    if (ab.first != ab.second) defect = std::max(defect, std::abs(g));
  }
  return defect;
}

SymmetricOperator assemble_projected_maxwell(const Grid& grid, int components,
                                             std::span<const SparseOneForm> basis, std::string name) {
  const double defect = orthonormality_defect(basis);
  if (defect > 1e-10) {
    throw std::invalid_argument("projection basis is not orthonormal (Gram defect " + std::to_string(defect) + ")");
  }
  std::vector<BasisLabel> labels;
  labels.reserve(basis.size());
  for (const auto& b : basis) {
    const auto& lead = b.entries.empty() ? SparseEntry{0, 0, 0.0} : b.entries.front();
    labels.push_back({BasisLabel::Kind::kSiteComponent, lead.site, lead.component});
  }
  SymmetricOperator op(std::move(name), std::move(labels));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const OneForm qb = apply_maxwell(densify(grid, components, basis[b]));
    for (std::size_t a = 0; a <= b; ++a) op.set(a, b, inner(basis[a], qb));
  }
  return op;
}

}  // namespace lgt
