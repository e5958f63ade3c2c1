#include "lgt/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lgt/eigen.hpp"
#include "lgt/forms.hpp"
#include "lgt/kd.hpp"
#include "lgt/periodic.hpp"

namespace lgt {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["formula"] = c.formula;
  j["status"] = status_name(c.status);
  j["max_error"] = c.max_error;
  j["tolerance"] = c.tolerance;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::vector<std::int64_t> random_integer_field(Rng& rng, std::size_t size, std::int64_t k) {
  std::vector<std::int64_t> u(size);
  for (auto& v : u) v = rng.symmetric_int(k);
  return u;
}

EdgeField random_edge_field(Rng& rng, const Lattice& lat) {
  EdgeField u(lat);
  for (std::size_t e = 0; e < lat.edge_count(); ++e) u[e] = rng.uniform(-1.0, 1.0);
  return u;
}

OneForm random_box_one_form(Rng& rng, const Lattice& lat) {
  OneForm w(padded_grid(lat), lat.dim());
  for (std::size_t v = 0; v < lat.vertex_count(); ++v) {
    const auto s = padded_site(lat, w.grid, v);
    for (int c = 0; c < lat.dim(); ++c) w.at(c, s) = rng.uniform(-1.0, 1.0);
  }
  return w;
}

OneForm random_axial_one_form(Rng& rng, const Lattice& lat, const AxialGauge& gauge) {
  OneForm w(padded_grid(lat), lat.dim());
  for (auto e : gauge.free_edges()) {
    const auto [base, axis] = lat.edge(e);
    w.at(axis, padded_site(lat, w.grid, base)) = rng.uniform(-1.0, 1.0);
  }
  return w;
}

SymmetricOperator random_psd_operator(Rng& rng, std::size_t dim) {
  std::vector<double> b(dim * dim);
  for (auto& v : b) v = rng.uniform(-1.0, 1.0);
  std::vector<BasisLabel> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back({BasisLabel::Kind::kSiteComponent, i, 0});
  SymmetricOperator a("random_psd", std::move(labels));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += b[k * dim + i] * b[k * dim + j];
      a.set(i, j, s);
    }
  }
  return a;
}

DenseBasis random_orthonormal_basis(Rng& rng, std::size_t dim, std::size_t rank) {
  if (rank > dim) throw std::invalid_argument("rank exceeds dimension");
  DenseBasis v{dim, rank, std::vector<double>(dim * rank)};
  for (auto& x : v.data) x = rng.uniform(-1.0, 1.0);
  for (std::size_t c = 0; c < rank; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        double dot = 0.0;
        for (std::size_t r = 0; r < dim; ++r) dot += v.data[r * rank + p] * v.data[r * rank + c];
        for (std::size_t r = 0; r < dim; ++r) v.data[r * rank + c] -= dot * v.data[r * rank + p];
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += v.data[r * rank + c] * v.data[r * rank + c];
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) v.data[r * rank + c] /= norm;
  }
  return v;
}

namespace {

class Recorder {
 public:
  void check(std::string name, std::string formula, double err, double tol, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), std::move(formula), ok ? CheckStatus::kPass : CheckStatus::kFail, err, tol,
                   std::move(detail)});
  }
  void skip(std::string name, std::string formula, std::string why) {
    out.push_back({std::move(name), std::move(formula), CheckStatus::kSkip, 0.0, 0.0, std::move(why)});
  }
  std::vector<CheckResult> out;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string too_large(std::size_t dim, std::size_t cap) {
  return "operator dimension " + std::to_string(dim) + " exceeds max-dim " + std::to_string(cap);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); }

void lattice_checks(Recorder& rec, const Lattice& lat, const AxialGauge& gauge, Rng& rng, int trials) {
  const int d = lat.dim();
  const int n = lat.side();

  {
    const auto sigma = assemble_sigma_exact(lat);
    double err = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto u = random_integer_field(rng, lat.edge_count(), 5);
      const auto lhs = sigma.quadratic_form(u, u);
      const auto rhs = sigma_form<std::int64_t>(lat, u, u);
      err = std::max(err, static_cast<double>(std::llabs(lhs - rhs)));
    }
    rec.check("sigma_stencil_exact", "<u, Sigma u> = sum_p u_p^2 (integer fields)", err, 0.0, err == 0.0);

    std::size_t bad = 0;
    for (std::size_t e = 0; e < lat.edge_count(); ++e) {
      const auto diag = sigma(e, e);
      const auto count = static_cast<std::int64_t>(lat.plaquettes_containing(e).size());
      if (diag != count || diag != 2 * (d - 1) - lat.stratum(e)) ++bad;
    }
    rec.check("sigma_diagonal_strata", "Sigma_ee = #plaquettes(e) = 2(d-1) - stratum(e)", static_cast<double>(bad),
              0.0, bad == 0);
  }

  {
    double err = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto split = verify_sigma_split(random_edge_field(rng, lat));
      err = std::max(err, split.error() / (1.0 + std::abs(split.lhs)));
    }
    rec.check("sigma_split", "Sigma(u,u) = <w,Q w> - <w,R w>", err, 1e-9, err <= 1e-9);
  }

  {
    double err = 0.0;
    double fused = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto w = random_box_one_form(rng, lat);
      const auto qw = apply_Qd(w);
      err = std::max(err, rel(curl_form(w), inner(w, qw)));
      const auto ref = reference::apply_maxwell(w);
      for (int c = 0; c < w.components(); ++c) {
        for (std::size_t s = 0; s < w.grid.size(); ++s) fused = std::max(fused, std::abs(qw.at(c, s) - ref.at(c, s)));
      }
    }
    rec.check("curl_form_identity", "<w, Q w> = 1/2 sum_ij |d_i w_j - d_j w_i|^2", err, 1e-10, err <= 1e-10);
    rec.check("fused_stencil_reference", "fused Q stencil = composed difference operators", fused, 1e-12,
              fused <= 1e-12);
  }

  {
    long long np1 = 1;
    for (int k = 0; k < d; ++k) np1 *= n + 1;
    const auto exact_free = static_cast<long long>(lat.edge_count()) - (np1 - 1);
    const bool ok = static_cast<long long>(gauge.tree_edges().size()) == np1 - 1 &&
                    static_cast<long long>(gauge.free_edges().size()) == exact_free &&
                    (d != 2 || exact_free == static_cast<long long>(n) * n);
    rec.check("axial_tree_counts", "|tree| = (n+1)^d - 1, |E1| = |E| - |tree|", ok ? 0.0 : 1.0, 0.0, ok,
              "free_edges=" + std::to_string(gauge.free_edges().size()) +
                  " asymptotic=" + std::to_string(free_edge_count_asymptotic(d, n)));
  }
}

void spectral_checks(Recorder& rec, const Lattice& lat, const AxialGauge& gauge, Rng& rng, const VerifyOptions& o) {
  const int d = lat.dim();
  const int n = lat.side();
  if (lat.edge_count() > o.max_dim) {
    for (const char* name : {"sigma_eigen_trace", "sigma_interlacing", "axial_gap_positive", "eigen_residual"}) {
      rec.skip(name, "", too_large(lat.edge_count(), o.max_dim));
    }
    return;
  }
  const auto sigma = assemble_sigma(lat);
  const auto sigma0 = restrict_to_axial(sigma, gauge);
  const auto es = sym_eigs(sigma);
  const auto e0 = sym_eigs(sigma0);
  const double norm = sigma.frobenius_norm();

  {
    double sum = 0.0;
    for (double v : es) sum += v;
    const double err = std::abs(sum - sigma.trace());
    const double tol = 1e-8 * norm * static_cast<double>(es.size());
    const bool psd = es.empty() || es.front() >= -1e-10 * norm;
    rec.check("sigma_eigen_trace", "sum lambda(Sigma) = tr Sigma, Sigma >= 0", err, tol, err <= tol && psd);
  }
  {
    const auto r = check_interlacing(es, e0, norm);
    rec.check("sigma_interlacing", "lambda_j(Sigma) <= lambda_j(Sigma0) <= lambda_{j+k-l}(Sigma)", r.max_violation,
              r.tolerance, r.ok);
  }
  if (e0.empty()) {
    rec.skip("axial_gap_positive", "lambda_1(Sigma0) > 1e-10 lambda_max", "empty axial space");
  } else {
    const double ratio = e0.front() / e0.back();
    rec.check("axial_gap_positive", "lambda_1(Sigma0) > 1e-10 lambda_max", ratio, 1e-10, ratio > 1e-10,
              "lambda_1=" + fmt(e0.front()) + " density=" + fmt(density_from_trace_log(trace_log(e0), d, n)));
  }
  if (sigma0.dim() == 0 || sigma0.dim() > 200) {
    rec.skip("eigen_residual", "|A v - lambda v| <= 1e-8 |A|", "dimension outside 1..200");
  } else {
    const auto sys = symmetric_eigensystem(sigma0);
    const std::size_t m = sys.dim;
    double worst = 0.0;
    std::vector<double> v(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t r = 0; r < m; ++r) v[r] = sys.component(r, k);
      const auto av = sigma0.apply(v);
      double res = 0.0;
      for (std::size_t r = 0; r < m; ++r) res += (av[r] - sys.values[k] * v[r]) * (av[r] - sys.values[k] * v[r]);
      worst = std::max(worst, std::sqrt(res));
    }
    const double tol = 1e-8 * sigma0.frobenius_norm();
    rec.check("eigen_residual", "|A v - lambda v| <= 1e-8 |A|", worst, tol, worst <= tol);
  }

  {
    const int pairs = std::min(o.trials, 20);
    double worst = 0.0;
    bool ok = true;
    for (int t = 0; t < pairs; ++t) {
      const std::size_t k = 2 + rng.raw() % 19;
      const std::size_t l = 1 + rng.raw() % k;
      const auto a = random_psd_operator(rng, k);
      const auto r = check_interlacing(a, random_orthonormal_basis(rng, k, l));
      ok = ok && r.ok;
      worst = std::max(worst, r.max_violation / std::max(a.frobenius_norm(), 1e-300));
    }
    rec.check("random_interlacing", "interlacing for random PSD compressions", worst, 1e-8, ok);
  }
}

void periodic_checks(Recorder& rec, const Lattice& lat, const AxialGauge& gauge, Rng& rng, const VerifyOptions& o) {
  const int d = lat.dim();
  const int n = lat.side();
  if (n < 2) {
    for (const char* name : {"torus_multiplicity", "torus_spectrum_match", "torus_kernel_dimension",
                             "torus_gap_formula", "torus_trace"}) {
      rec.skip(name, "", "torus needs n >= 2");
    }
  } else {
    const auto spec = analytic_spectrum(d, n);
    std::size_t dim = static_cast<std::size_t>(d - 1);
    for (int k = 0; k < d; ++k) dim *= static_cast<std::size_t>(n);
    rec.check("torus_multiplicity", "sum of multiplicities = (d-1) n^d",
              std::abs(static_cast<double>(spec.total_multiplicity()) - static_cast<double>(dim)), 0.0,
              spec.total_multiplicity() == dim);
    if (dim > o.max_dim) {
      for (const char* name : {"torus_spectrum_match", "torus_kernel_dimension", "torus_gap_formula", "torus_trace"}) {
        rec.skip(name, "", too_large(dim, o.max_dim));
      }
    } else {
      const auto op = torus_operator(d, n);
      const auto numeric = sym_eigs(op);
      const auto analytic = spec.sorted_values();
      double err = 0.0;
      for (std::size_t i = 0; i < numeric.size(); ++i) err = std::max(err, std::abs(numeric[i] - analytic[i]));
      rec.check("torus_spectrum_match", "sorted numeric spectrum = analytic multiset", err, 1e-8, err <= 1e-8);

      const double tol = singular_tolerance(numeric);
      const auto zeros = static_cast<long long>(std::count_if(numeric.begin(), numeric.end(),
                                                              [&](double v) { return v <= tol; }));
      const auto expected = kernel_dimension(d, n);
      rec.check("torus_kernel_dimension", "dim ker = (d-1) + n^(d-1) - 1", static_cast<double>(std::llabs(zeros - expected)),
                0.0, zeros == expected && static_cast<long long>(spec.zero_count()) == expected);

      const double gap = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / n));
      const auto first_pos = std::find_if(numeric.begin(), numeric.end(), [&](double v) { return v > tol; });
      const double gerr = std::max(std::abs(*first_pos - gap), std::abs(spec.smallest_positive() - gap));
      rec.check("torus_gap_formula", "smallest positive eigenvalue = 2(1 - cos 2pi/n)", gerr, 1e-8, gerr <= 1e-8);

      double asum = 0.0;
      for (const auto& e : spec.entries) asum += e.multiplicity * e.eigenvalue;
      const double closed = (d - 1) * (2.0 * d - 2.0) * std::pow(static_cast<double>(n), d);
      const double terr = std::max(std::abs(asum - op.trace()), std::abs(closed - op.trace()));
      const double ttol = 1e-8 * static_cast<double>(dim);
      rec.check("torus_trace", "sum mult * lambda = tr Q_per = (d-1)(2d-2) n^d", terr, ttol, terr <= ttol);
    }
    if (d == 2) {
      const double err = std::abs(periodic_free_energy(2, n) + std::log(static_cast<double>(n)) / n);
      rec.check("periodic_closed_form_d2", "periodic density = -log(n)/n", err, 1e-9, err <= 1e-9);
    }
  }

  if (gauge.free_edges().empty()) {
    for (const char* name : {"embedding_isometry", "embedding_form", "embedded_compression", "dropped_boundary_subspace"}) {
      rec.skip(name, "", "empty axial space");
    }
    return;
  }

  double iso = 0.0;
  double form = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const auto w = random_axial_one_form(rng, lat, gauge);
    const auto iw = embed_axial_into_torus(lat, gauge, w);
    iso = std::max(iso, rel(w.norm_squared(), iw.norm_squared()));
    form = std::max(form, rel(inner(w, apply_Qd(w)), inner(iw, apply_maxwell(iw))));
  }
  rec.check("embedding_isometry", "|iota w| = |w|", iso, 1e-10, iso <= 1e-10);
  rec.check("embedding_form", "<w, Q w> = <iota w, Q_per iota w>", form, 1e-10, form <= 1e-10);

  const std::size_t m = gauge.free_edges().size();
  if (m > o.max_dim) {
    rec.skip("embedded_compression", "", too_large(m, o.max_dim));
    rec.skip("dropped_boundary_subspace", "", too_large(m, o.max_dim));
    return;
  }
  const auto basis = axial_basis(lat, gauge);
  const auto box = assemble_projected_maxwell(padded_grid(lat), d, basis, "Q_axial");
  {
    const Grid torus = embedding_torus(lat, 2);
    std::vector<SparseOneForm> embedded;
    embedded.reserve(m);
    for (auto e : gauge.free_edges()) {
      const auto [base, axis] = lat.edge(e);
      embedded.push_back(SparseOneForm{{{axis, *torus.index(lat.vertex_coords(base)), 1.0}}});
    }
    const auto per = assemble_projected_maxwell(torus, d - 1, embedded, "Q_per_axial");
    double err = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) err = std::max(err, std::abs(box(i, j) - per(i, j)));
    }
    rec.check("embedded_compression", "P Q P on axial fields = P Q_per P on their images", err, 1e-12, err <= 1e-12);
  }
  {
    std::vector<std::size_t> interior;
    for (std::size_t i = 0; i < m; ++i) {
      if (lat.stratum(gauge.free_edges()[i]) == 0) interior.push_back(i);
    }
    const auto v = coordinate_basis(m, interior);
    try {
      const auto cmp = compare_dropped_subspace(box, v, d, n);
      rec.check("dropped_boundary_subspace", "interlacing of P Q P under dropping boundary edges",
                cmp.interlacing.max_violation, cmp.interlacing.tolerance, cmp.interlacing.ok,
                "density_full=" + fmt(cmp.density_full) + " density_interior=" + fmt(cmp.density_subspace) +
                    " difference=" + fmt(cmp.difference));
    } catch (const std::exception& ex) {
      rec.check("dropped_boundary_subspace", "interlacing of P Q P under dropping boundary edges", 0.0, 0.0, false,
                ex.what());
    }
  }
}

void kd_checks(Recorder& rec, int d) {
  const auto k = kd_value(d, 64);
  const double sum = k.log2_term + k.one_dim_integral_term + k.d_dim_integral_term;
  rec.check("kd_bookkeeping", "K_d pieces recombine to the value", std::abs(sum - k.value), 0.0, sum == k.value);
  if (d == 2) {
    const auto a = kd_analytic_d2();
    rec.check("kd_analytic_d2", "K_2 = 0", std::abs(a.value), 0.0, a.value == 0.0);
  } else {
    const double par = d_dim_log_integral(d, 32);
    const double ser = reference::d_dim_log_integral(d, 32);
    rec.check("kd_grid_sum_parallel", "parallel grid sum = serial grid sum (bitwise)", std::abs(par - ser), 0.0,
              par == ser);
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  const Lattice lat(o.d, o.n);
  const AxialGauge gauge(lat);
  Rng rng(o.seed);
  Recorder rec;
  lattice_checks(rec, lat, gauge, rng, o.trials);
  spectral_checks(rec, lat, gauge, rng, o);
  periodic_checks(rec, lat, gauge, rng, o);
  kd_checks(rec, o.d);
  return std::move(rec.out);
}

}  // namespace lgt
