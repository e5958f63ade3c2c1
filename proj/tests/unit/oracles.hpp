#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lgt/lattice.hpp"
#include "lgt/symmetric_operator.hpp"

namespace oracle {

/// Cyclic Jacobi eigenvalues of a dense symmetric matrix, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<double> jacobi_eigenvalues(const lgt::SymmetricOperator& op) {
  return jacobi_eigenvalues(std::vector<double>(op.data().begin(), op.data().end()), op.dim());
}

/// Exact determinant of an integer matrix by fraction-free Bareiss elimination.
inline __int128 bareiss_determinant(std::vector<__int128> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

/// True when the symmetric matrix admits a Cholesky factorisation with
/// strictly positive pivots (long double arithmetic).
inline bool cholesky_succeeds(const std::vector<__int128>& m, std::size_t n) {
  std::vector<long double> l(n * n, 0.0L);
  for (std::size_t j = 0; j < n; ++j) {
    long double diag = static_cast<long double>(m[j * n + j]);
    for (std::size_t k = 0; k < j; ++k) diag -= l[j * n + k] * l[j * n + k];
    if (!(diag > 1e-12L)) return false;
    l[j * n + j] = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      long double s = static_cast<long double>(m[i * n + j]);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / l[j * n + j];
    }
  }
  return true;
}

/// Brute-force plaquette list: every (vertex, j<k) whose unit square lies in the box.
inline std::vector<lgt::Plaquette> scan_plaquettes(const lgt::Lattice& lat) {
  std::vector<lgt::Plaquette> out;
  for (std::size_t v = 0; v < lat.vertex_count(); ++v) {
    for (int j = 0; j < lat.dim(); ++j) {
      for (int k = j + 1; k < lat.dim(); ++k) {
        auto a = lat.step(v, j, 1);
        auto b = lat.step(v, k, 1);
        if (a && b) out.push_back({v, j, k});
      }
    }
  }
  return out;
}

/// Largest codimension of a boundary face of the box containing both endpoints
/// of e, by enumerating all faces (each coordinate free or frozen at 0 / n).
inline int face_stratum(const lgt::Lattice& lat, std::size_t e) {
  const int d = lat.dim();
  const int n = lat.side();
  const auto x = lat.vertex_coords(lat.edge(e).base);
  const auto y = lat.vertex_coords(lat.edge_head(e));
  int best = 0;
  int faces = 1;
  for (int a = 0; a < d; ++a) faces *= 3;
  for (int f = 0; f < faces; ++f) {
    int code = f;
    int frozen = 0;
    bool contains = true;
    for (int a = 0; a < d; ++a) {
      const int kind = code % 3;
      code /= 3;
      if (kind == 0) continue;
      const int val = kind == 1 ? 0 : n;
      ++frozen;
      if (x[a] != val || y[a] != val) contains = false;
    }
    if (contains) best = std::max(best, frozen);
  }
  return best;
}

/// Union-find over vertices.
struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace oracle
