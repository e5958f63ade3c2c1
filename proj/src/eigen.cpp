#include "lgt/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace lgt {

EigenNonConvergence::EigenNonConvergence(std::size_t index, int iterations, double residual)
    : std::runtime_error("QL iteration did not converge for eigenvalue " + std::to_string(index) + " after " +
                         std::to_string(iterations) + " sweeps (|offdiag| = " + std::to_string(residual) + ")"),
      index_(index),
      iterations_(iterations),
      residual_(residual) {}

namespace kernels {

namespace {

// Reflector for column k: v (length m) and h = |v|^2 / 2, or h = 0 when the
// column is already reduced. Returns the new subdiagonal entry.
double make_reflector(const std::vector<double>& a, std::size_t n, std::size_t k, std::vector<double>& v,
                      double& h) {
  const std::size_t m = n - k - 1;
  double scale = 0.0;
  double tail = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double x = std::abs(a[(k + 1 + r) * n + k]);
    scale += x;
    if (r > 0) tail += x;
  }
  const double x0 = a[(k + 1) * n + k];
  if (tail == 0.0) {
    h = 0.0;
    return x0;
  }
  double sigma = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double x = a[(k + 1 + r) * n + k] / scale;
    sigma += x * x;
  }
  const double norm = scale * std::sqrt(sigma);
  const double alpha = x0 >= 0.0 ? -norm : norm;
  for (std::size_t r = 0; r < m; ++r) v[r] = a[(k + 1 + r) * n + k];
  v[0] = x0 - alpha;
  h = norm * norm - x0 * alpha;
  return alpha;
}

Tridiagonal finish(const std::vector<double>& a, std::size_t n, std::vector<double>& off) {
  Tridiagonal t;
  t.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a[i * n + i];
  if (n >= 2) off[n - 2] = a[(n - 1) * n + (n - 2)];
  t.offdiag = std::move(off);
  return t;
}

}  // namespace

Tridiagonal tridiagonalize_serial(std::vector<double>& a, std::size_t n, std::vector<double>* q) {
  std::vector<double> off(n, 0.0);
  std::vector<double> hs(n, 0.0);
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double h = 0.0;
    off[k] = make_reflector(a, n, k, v, h);
    hs[k] = h;
    if (h == 0.0) continue;
    const double beta = 1.0 / h;
    for (std::size_t r = 0; r < m; ++r) {
      const double* row = a.data() + (k + 1 + r) * n + (k + 1);
      double s = 0.0;
      for (std::size_t c = 0; c < m; ++c) s += row[c] * v[c];
      p[r] = beta * s;
    }
    double vp = 0.0;
    for (std::size_t r = 0; r < m; ++r) vp += v[r] * p[r];
    const double kk = 0.5 * beta * vp;
    for (std::size_t r = 0; r < m; ++r) p[r] -= kk * v[r];
    for (std::size_t r = 0; r < m; ++r) {
      double* row = a.data() + (k + 1 + r) * n + (k + 1);
      for (std::size_t c = 0; c < m; ++c) row[c] -= v[r] * p[c] + p[r] * v[c];
    }
    for (std::size_t r = 0; r < m; ++r) a[(k + 1 + r) * n + k] = v[r];
  }

  if (q) {
    q->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*q)[i * n + i] = 1.0;
    for (std::size_t k = n >= 2 ? n - 2 : 0; k-- > 0;) {
      if (hs[k] == 0.0) continue;
      const std::size_t m = n - k - 1;
      for (std::size_t c = k + 1; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += a[(k + 1 + r) * n + k] * (*q)[(k + 1 + r) * n + c];
        s /= hs[k];
        for (std::size_t r = 0; r < m; ++r) (*q)[(k + 1 + r) * n + c] -= s * a[(k + 1 + r) * n + k];
      }
    }
  }
  return finish(a, n, off);
}

Tridiagonal tridiagonalize_omp(std::vector<double>& a, std::size_t n, std::vector<double>* q) {
  std::vector<double> off(n, 0.0);
  std::vector<double> hs(n, 0.0);
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const auto m = static_cast<std::int64_t>(n - k - 1);
    double h = 0.0;
    off[k] = make_reflector(a, n, k, v, h);
    hs[k] = h;
    if (h == 0.0) continue;
    const double beta = 1.0 / h;
    double* base = a.data() + (k + 1) * n + (k + 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < m; ++r) {
      const double* row = base + r * static_cast<std::int64_t>(n);
      double s = 0.0;
      for (std::int64_t c = 0; c < m; ++c) s += row[c] * v[c];
      p[r] = beta * s;
    }
    double vp = 0.0;
    for (std::int64_t r = 0; r < m; ++r) vp += v[r] * p[r];
    const double kk = 0.5 * beta * vp;
    for (std::int64_t r = 0; r < m; ++r) p[r] -= kk * v[r];
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < m; ++r) {
      double* row = base + r * static_cast<std::int64_t>(n);
      const double vr = v[r];
      const double pr = p[r];
      for (std::int64_t c = 0; c < m; ++c) row[c] -= vr * p[c] + pr * v[c];
    }
    for (std::int64_t r = 0; r < m; ++r) a[(k + 1 + r) * n + k] = v[r];
  }

  if (q) {
    q->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*q)[i * n + i] = 1.0;
    for (std::size_t k = n >= 2 ? n - 2 : 0; k-- > 0;) {
      if (hs[k] == 0.0) continue;
      const std::size_t m = n - k - 1;
      const double hk = hs[k];
#pragma omp parallel for schedule(static)
      for (std::int64_t c = static_cast<std::int64_t>(k + 1); c < static_cast<std::int64_t>(n); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += a[(k + 1 + r) * n + k] * (*q)[(k + 1 + r) * n + c];
        s /= hk;
        for (std::size_t r = 0; r < m; ++r) (*q)[(k + 1 + r) * n + c] -= s * a[(k + 1 + r) * n + k];
      }
    }
  }
  return finish(a, n, off);
}

void tridiagonal_ql(Tridiagonal& t, std::vector<double>* z, const EigenOptions& opts) {
  auto& d = t.diag;
  auto& e = t.offdiag;
  const std::size_t n = d.size();
  if (n == 0) return;
  e.resize(n);
  e[n - 1] = 0.0;
  double tnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) tnorm = std::max(tnorm, std::abs(d[i]) + std::abs(e[i]));
  const double floor = std::numeric_limits<double>::epsilon() * tnorm;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= opts.deflation_tol * dd || std::abs(e[m]) <= floor) break;
      }
      if (m == l) break;
      if (++iter > opts.max_iterations) throw EigenNonConvergence(l, iter - 1, std::abs(e[l]));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool early = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          early = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z) {
          auto& zz = *z;
          for (std::size_t k = 0; k < n; ++k) {
            const double zf = zz[k * n + i + 1];
            zz[k * n + i + 1] = s * zz[k * n + i] + c * zf;
            zz[k * n + i] = c * zz[k * n + i] - s * zf;
          }
        }
      }
      if (early) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace kernels

namespace {

Tridiagonal reduce(const SymmetricOperator& a, const EigenOptions& opts, std::vector<double>* q) {
  std::vector<double> work(a.data().begin(), a.data().end());
  return opts.execution == Execution::kParallel ? kernels::tridiagonalize_omp(work, a.dim(), q)
                                                : kernels::tridiagonalize_serial(work, a.dim(), q);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const SymmetricOperator& a, const EigenOptions& opts) {
  auto t = reduce(a, opts, nullptr);
  kernels::tridiagonal_ql(t, nullptr, opts);
  std::sort(t.diag.begin(), t.diag.end());
  return std::move(t.diag);
}

EigenSystem symmetric_eigensystem(const SymmetricOperator& a, const EigenOptions& opts) {
  const std::size_t n = a.dim();
  std::vector<double> q;
  auto t = reduce(a, opts, &q);
  kernels::tridiagonal_ql(t, &q, opts);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return t.diag[x] < t.diag[y]; });

  EigenSystem out;
  out.dim = n;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = t.diag[order[k]];
    for (std::size_t row = 0; row < n; ++row) out.vectors[row * n + k] = q[row * n + order[k]];
  }
  return out;
}

}  // namespace lgt
