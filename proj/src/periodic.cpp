#include "lgt/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "lgt/forms.hpp"

namespace lgt {

namespace {

void require_torus(int d, int n) {
  if (d < 2) throw std::invalid_argument("torus dimension must be >= 2, got " + std::to_string(d));
  if (n < 2) throw std::invalid_argument("torus side must be >= 2, got " + std::to_string(n));
}

double one_minus_cos(int n, int q) {
  return 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n)));
}

}  // namespace

Grid torus_grid(int d, int n) {
  require_torus(d, n);
  return Grid(d, n, 0, Boundary::kPeriodic);
}

SymmetricOperator torus_operator(const Grid& torus) {
  if (torus.boundary() != Boundary::kPeriodic) throw std::invalid_argument("torus_operator needs a periodic grid");
  require_torus(torus.dim(), torus.side());
  const int d = torus.dim();
  const int comps = d - 1;
  std::vector<SparseOneForm> basis;
  basis.reserve(torus.size() * static_cast<std::size_t>(comps));
  for (std::size_t s = 0; s < torus.size(); ++s) {
    for (int c = 0; c < comps; ++c) basis.push_back(SparseOneForm{{{c, s, 1.0}}});
  }
  return assemble_projected_maxwell(torus, comps, basis, "torus");
}

SymmetricOperator torus_operator(int d, int n) { return torus_operator(torus_grid(d, n)); }

double torus_symbol(int n, std::span<const int> q) {
  double e = 0.0;
  for (int qk : q) e += one_minus_cos(n, qk);
  return e;
}

const char* family_name(ModeFamily f) {
  switch (f) {
    case ModeFamily::kZeroMode: return "zero_mode";
    case ModeFamily::kAxisAligned: return "axis_aligned";
    case ModeFamily::kLongitudinal: return "longitudinal";
    case ModeFamily::kTransverse: return "transverse";
  }
  return "unknown";
}

std::size_t AnalyticSpectrum::total_multiplicity() const {
  std::size_t t = 0;
  for (const auto& e : entries) t += static_cast<std::size_t>(e.multiplicity);
  return t;
}

std::vector<double> AnalyticSpectrum::sorted_values() const {
  std::vector<double> v;
  v.reserve(total_multiplicity());
  for (const auto& e : entries) v.insert(v.end(), static_cast<std::size_t>(e.multiplicity), e.eigenvalue);
  std::sort(v.begin(), v.end());
  return v;
}

double AnalyticSpectrum::smallest_positive() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (!e.structural_zero) m = std::min(m, e.eigenvalue);
  }
  return m;
}

std::size_t AnalyticSpectrum::zero_count() const {
  std::size_t z = 0;
  for (const auto& e : entries) {
    if (e.structural_zero) z += static_cast<std::size_t>(e.multiplicity);
  }
  return z;
}

AnalyticSpectrum analytic_spectrum(int d, int n) {
  require_torus(d, n);
  std::size_t modes = 1;
  for (int k = 0; k < d; ++k) modes *= static_cast<std::size_t>(n);

  // Each frequency yields at most two entries; fill fixed slots, then compact.
  std::vector<SpectralEntry> slots(2 * modes);
  std::vector<unsigned char> used(2 * modes, 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t sp = 0; sp < static_cast<std::int64_t>(modes); ++sp) {
    std::vector<int> q(static_cast<std::size_t>(d));
    auto rest = static_cast<std::size_t>(sp);
    for (int k = d - 1; k >= 0; --k) {
      q[k] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    const bool transverse_zero = std::all_of(q.begin(), q.end() - 1, [](int v) { return v == 0; });
    const int qd = q[d - 1];
    const double axis_value = one_minus_cos(n, qd);
    const auto slot = 2 * static_cast<std::size_t>(sp);
    if (transverse_zero && qd == 0) {
      slots[slot] = {q, 0.0, d - 1, ModeFamily::kZeroMode, true};
      used[slot] = 1;
    } else if (transverse_zero) {
      slots[slot] = {q, axis_value, d - 1, ModeFamily::kAxisAligned, false};
      used[slot] = 1;
    } else {
      slots[slot] = {q, axis_value, 1, ModeFamily::kLongitudinal, qd == 0};
      used[slot] = 1;
      if (d > 2) {
        slots[slot + 1] = {q, torus_symbol(n, q), d - 2, ModeFamily::kTransverse, false};
        used[slot + 1] = 1;
      }
    }
  }

  AnalyticSpectrum s;
  s.d = d;
  s.n = n;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (used[i]) s.entries.push_back(std::move(slots[i]));
  }
  return s;
}

nlohmann::ordered_json to_json(const AnalyticSpectrum& s) {
  nlohmann::ordered_json out;
  out["d"] = s.d;
  out["n"] = s.n;
  out["total_multiplicity"] = s.total_multiplicity();
  out["kernel_dimension"] = kernel_dimension(s.d, s.n);
  auto& list = out["modes"] = nlohmann::ordered_json::array();
  for (const auto& e : s.entries) {
    nlohmann::ordered_json p = nlohmann::ordered_json::array();
    for (int qk : e.q) p.push_back(std::to_string(qk) + "/" + std::to_string(s.n));
    list.push_back({{"p", p},
                    {"eigenvalue", e.eigenvalue},
                    {"multiplicity", e.multiplicity},
                    {"family", family_name(e.family)}});
  }
  return out;
}

long long kernel_dimension(int d, int n) {
  require_torus(d, n);
  long long slab = 1;
  for (int k = 0; k < d - 1; ++k) slab *= n;
  return (d - 1) + slab - 1;
}

double periodic_free_energy(int d, int n) {
  const auto s = analytic_spectrum(d, n);
  double sum = 0.0;
  for (const auto& e : s.entries) {
    if (!e.structural_zero) sum += e.multiplicity * std::log(e.eigenvalue);
  }
  return -sum / (2.0 * std::pow(static_cast<double>(n), d));
}

Grid embedding_torus(const Lattice& lat, int margin) {
  if (margin < 2) throw std::invalid_argument("embedding margin must be >= 2, got " + std::to_string(margin));
  return Grid(lat.dim(), lat.side() + 1 + 2 * margin, -margin, Boundary::kPeriodic);
}

OneForm embed_axial_into_torus(const Lattice& lat, const AxialGauge& gauge, const OneForm& w, int margin) {
  const Grid torus = embedding_torus(lat, margin);
  if (!in_axial_space(lat, gauge, w, 0.0)) throw std::invalid_argument("field is not in the axial space");
  const int d = lat.dim();
  OneForm out(torus, d - 1);
  std::vector<int> x(static_cast<std::size_t>(d));
  for (std::size_t s = 0; s < w.grid.size(); ++s) {
    w.grid.coords(s, x);
    const std::size_t t = *torus.index(x);
    for (int c = 0; c < std::min(d - 1, w.components()); ++c) out.at(c, t) = w.at(c, s);
  }
  return out;
}

std::vector<std::size_t> embedded_axial_rows(const Lattice& lat, const AxialGauge& gauge, int margin) {
  const Grid torus = embedding_torus(lat, margin);
  std::vector<std::size_t> rows;
  rows.reserve(gauge.free_edges().size());
  for (auto e : gauge.free_edges()) {
    const auto [base, axis] = lat.edge(e);
    rows.push_back(torus_basis_index(lat.dim(), *torus.index(lat.vertex_coords(base)), axis));
  }
  return rows;
}

}  // namespace lgt
