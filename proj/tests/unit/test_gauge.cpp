#include <set>

#include "doctest.h"
#include "lgt/forms.hpp"
#include "lgt/gauge.hpp"
#include "lgt/rng.hpp"
#include "lgt/verification.hpp"
#include "oracles.hpp"

using namespace lgt;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("axial tree is a spanning tree of the box") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const Lattice lat(d, n);
      const AxialGauge gauge(lat);
      oracle::DisjointSets sets(lat.vertex_count());
      bool acyclic = true;
      for (auto e : gauge.tree_edges()) acyclic = sets.unite(lat.edge(e).base, lat.edge_head(e)) && acyclic;
      CHECK(acyclic);
      std::set<std::size_t> roots;
      for (std::size_t v = 0; v < lat.vertex_count(); ++v) roots.insert(sets.find(v));
      CHECK(roots.size() == 1);
      CHECK(static_cast<long long>(gauge.tree_edges().size()) == ipow(n + 1, d) - 1);
    }
  }
}

TEST_CASE("tree membership rule and free-edge count") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const Lattice lat(d, n);
      const AxialGauge gauge(lat);
      for (std::size_t e = 0; e < lat.edge_count(); ++e) {
        const auto [base, j] = lat.edge(e);
        const auto x = lat.vertex_coords(base);
        bool rule = true;
        for (int t = j + 1; t < d; ++t) rule = rule && x[t] == 0;
        CHECK(gauge.in_tree(e) == rule);
        CHECK(gauge.free_position(e).has_value() == !rule);
      }
      const long long exact = d * n * ipow(n + 1, d - 1) - ipow(n + 1, d) + 1;
      CHECK(static_cast<long long>(gauge.free_edges().size()) == exact);
      if (d == 2) {
        CHECK(exact == n * n);
      }
    }
  }
}

TEST_CASE("free edges never point along the last axis") {
  const Lattice lat(3, 3);
  const AxialGauge gauge(lat);
  for (auto e : gauge.free_edges()) CHECK(lat.edge(e).axis < 2);
}

TEST_CASE("asymptotic free-edge count is exact for n sites per axis") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 5; ++n) {
      const Lattice lat(d, n - 1);
      const AxialGauge gauge(lat);
      CHECK(static_cast<long long>(gauge.free_edges().size()) == free_edge_count_asymptotic(d, n));
    }
  }
  CHECK(free_edge_count_asymptotic(2, 3) == 4);
}

TEST_CASE("zero sets are the complement of the free-edge bases") {
  for (int d = 2; d <= 3; ++d) {
    const Lattice lat(d, 3);
    const AxialGauge gauge(lat);
    for (int i = 0; i < d; ++i) {
      std::set<std::size_t> zero(gauge.zero_set(i).begin(), gauge.zero_set(i).end());
      for (std::size_t v = 0; v < lat.vertex_count(); ++v) {
        const auto e = lat.edge_index(v, i);
        const bool free = e && !gauge.in_tree(*e);
        CHECK(zero.count(v) == (free ? 0u : 1u));
      }
    }
  }
}

TEST_CASE("oriented edge values") {
  const Lattice lat(2, 2);
  EdgeField u(lat);
  const int x[2] = {1, 0};
  const int y[2] = {1, 1};
  const int far[2] = {2, 2};
  const int outside[2] = {1, -1};
  u[*lat.edge_index(x, 1)] = 2.5;
  CHECK(u.oriented(x, y) == 2.5);
  CHECK(u.oriented(y, x) == -2.5);
  CHECK(u.oriented(x, far) == 0.0);
  CHECK(u.oriented(outside, x) == 0.0);
  CHECK(u.oriented(x, x) == 0.0);
}

TEST_CASE("edge field and one-form conversions are inverse") {
  Rng rng(7);
  for (int d = 2; d <= 3; ++d) {
    const Lattice lat(d, 3);
    const auto u = random_edge_field(rng, lat);
    const auto w = edge_field_to_one_form(u);
    CHECK(w.grid == padded_grid(lat));
    const auto back = one_form_to_edge_field(lat, w);
    for (std::size_t e = 0; e < lat.edge_count(); ++e) CHECK(back[e] == u[e]);
    double norm = 0.0;
    for (double v : u.values()) norm += v * v;
    CHECK(w.norm_squared() == doctest::Approx(norm));
  }
}

TEST_CASE("axial basis is orthonormal and spans the axial space") {
  Rng rng(3);
  const Lattice lat(3, 2);
  const AxialGauge gauge(lat);
  const auto basis = axial_basis(lat, gauge);
  CHECK(basis.size() == gauge.free_edges().size());
  CHECK(orthonormality_defect(basis) == 0.0);
  for (int t = 0; t < 10; ++t) {
    const auto w = random_axial_one_form(rng, lat, gauge);
    CHECK(in_axial_space(lat, gauge, w));
    double coeff = 0.0;
    for (const auto& b : basis) coeff += inner(b, w) * inner(b, w);
    CHECK(coeff == doctest::Approx(w.norm_squared()));
  }
  auto w = random_box_one_form(rng, lat);
  CHECK_FALSE(in_axial_space(lat, gauge, w));
}

TEST_CASE("summary json") {
  const Lattice lat(2, 3);
  const auto j = summary_json(lat, AxialGauge(lat));
  CHECK(j["tree_edge_count"] == 15);
  CHECK(j["free_edge_count"] == 9);
  CHECK(j["free_edge_count_asymptotic"] == 4);
}
