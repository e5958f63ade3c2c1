#include <cmath>

#include "doctest.h"
#include "lgt/eigen.hpp"
#include "lgt/forms.hpp"
#include "lgt/rng.hpp"
#include "lgt/verification.hpp"
#include "oracles.hpp"

using namespace lgt;

namespace {

SymmetricOperator from_dense(const std::vector<double>& a, std::size_t n) {
  std::vector<BasisLabel> labels(n, {BasisLabel::Kind::kSiteComponent, 0, 0});
  SymmetricOperator op("dense", labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) op.set(i, j, a[i * n + j]);
  }
  return op;
}

SymmetricOperator random_symmetric(Rng& rng, std::size_t n) {
  std::vector<double> a(n * n);
  for (auto& v : a) v = rng.uniform(-1.0, 1.0);
  return from_dense(a, n);
}

}  // namespace

TEST_CASE("diag(1,3)") {
  const auto ev = symmetric_eigenvalues(from_dense({1, 0, 0, 3}, 2));
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == 1.0);
  CHECK(ev[1] == 3.0);
}

TEST_CASE("empty and 1x1 operators") {
  CHECK(symmetric_eigenvalues(SymmetricOperator("empty", {})).empty());
  CHECK(symmetric_eigenvalues(from_dense({-2.5}, 1)) == std::vector<double>{-2.5});
}

TEST_CASE("plaquette form for a single square has spectrum {0,0,0,4}") {
  const auto ev = symmetric_eigenvalues(assemble_sigma(Lattice(2, 1)));
  REQUIRE(ev.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(ev[i]) < 1e-14);
  CHECK(ev[3] == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues agree with the Jacobi oracle") {
  Rng rng(21);
  for (std::size_t n : {2u, 3u, 5u, 10u, 40u, 90u}) {
    const auto a = random_symmetric(rng, n);
    const auto ours = symmetric_eigenvalues(a);
    const auto ref = oracle::jacobi_eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref[i]) <= 1e-10 * a.frobenius_norm());
  }
  const Lattice lat(3, 2);
  const auto s = assemble_sigma(lat);
  const auto ours = symmetric_eigenvalues(s);
  const auto ref = oracle::jacobi_eigenvalues(s);
  for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) <= 1e-10 * s.frobenius_norm());
}

TEST_CASE("eigenpairs are backward stable and orthonormal") {
  Rng rng(23);
  for (std::size_t n : {4u, 33u, 120u}) {
    const auto a = random_symmetric(rng, n);
    const auto sys = symmetric_eigensystem(a);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) v[r] = sys.component(r, k);
      const auto av = a.apply(v);
      double res = 0.0;
      for (std::size_t r = 0; r < n; ++r) res += (av[r] - sys.values[k] * v[r]) * (av[r] - sys.values[k] * v[r]);
      CHECK(std::sqrt(res) <= 1e-8 * a.frobenius_norm());
    }
    for (std::size_t k = 0; k < n; k += 7) {
      for (std::size_t l = 0; l < n; l += 5) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += sys.component(r, k) * sys.component(r, l);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("eigensystem values match eigenvalue-only path") {
  Rng rng(29);
  const auto a = random_symmetric(rng, 25);
  const auto ev = symmetric_eigenvalues(a);
  const auto sys = symmetric_eigensystem(a);
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(sys.values[i]).epsilon(1e-13));
}

TEST_CASE("eigenvalue sum equals trace") {
  Rng rng(31);
  const auto a = random_symmetric(rng, 60);
  double sum = 0.0;
  for (double v : symmetric_eigenvalues(a)) sum += v;
  CHECK(std::abs(sum - a.trace()) <= 1e-8 * a.frobenius_norm() * 60);
}

TEST_CASE("parallel tridiagonalization is bitwise equal to the serial reference") {
  Rng rng(37);
  for (std::size_t n : {1u, 2u, 3u, 17u, 64u, 150u}) {
    const auto a = random_symmetric(rng, n);
    std::vector<double> w1(a.data().begin(), a.data().end());
    std::vector<double> w2 = w1;
    std::vector<double> q1;
    std::vector<double> q2;
    const auto t1 = kernels::tridiagonalize_serial(w1, n, &q1);
    const auto t2 = kernels::tridiagonalize_omp(w2, n, &q2);
    CHECK(t1.diag == t2.diag);
    CHECK(t1.offdiag == t2.offdiag);
    CHECK(q1 == q2);
    EigenOptions serial;
    serial.execution = Execution::kSerial;
    CHECK(symmetric_eigenvalues(a, serial) == symmetric_eigenvalues(a));
  }
}

TEST_CASE("tridiagonal reduction is an orthogonal similarity") {
  Rng rng(41);
  const std::size_t n = 12;
  const auto a = random_symmetric(rng, n);
  std::vector<double> w(a.data().begin(), a.data().end());
  std::vector<double> q;
  const auto t = kernels::tridiagonalize_serial(w, n, &q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += q[i * n + k] * t.diag[k] * q[j * n + k];
        if (k + 1 < n) {
          s += q[i * n + k] * t.offdiag[k] * q[j * n + k + 1];
          s += q[i * n + k + 1] * t.offdiag[k] * q[j * n + k];
        }
      }
      CHECK(std::abs(s - a(i, j)) < 1e-12);
    }
  }
}

TEST_CASE("already diagonal input skips every reflector") {
  const auto a = from_dense({3, 0, 0, 0, 1, 0, 0, 0, 2}, 3);
  const auto ev = symmetric_eigenvalues(a);
  CHECK(ev == std::vector<double>{1, 2, 3});
}

TEST_CASE("non-convergence reports diagnostics") {
  Rng rng(43);
  const auto a = random_symmetric(rng, 8);
  EigenOptions opts;
  opts.max_iterations = 0;
  try {
    symmetric_eigenvalues(a, opts);
    FAIL("expected EigenNonConvergence");
  } catch (const EigenNonConvergence& e) {
    CHECK(e.iterations() == 0);
    CHECK(e.residual() > 0.0);
    CHECK(e.index() < 8);
  }
}

TEST_CASE("degenerate spectrum") {
  const std::size_t n = 30;
  std::vector<double> a(n * n, 1.0);
  const auto ev = symmetric_eigenvalues(from_dense(a, n));
  for (std::size_t i = 0; i + 1 < n; ++i) CHECK(std::abs(ev[i]) < 1e-12);
  CHECK(ev.back() == doctest::Approx(30.0));
}
