#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgt/forms.hpp"
#include "lgt/gauge.hpp"
#include "lgt/kd.hpp"
#include "lgt/lattice.hpp"
#include "lgt/periodic.hpp"
#include "lgt/rng.hpp"
#include "lgt/spectral.hpp"
#include "lgt/verification.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailure = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

json envelope(json spec, json results) {
  json j;
  j["tool_version"] = kToolVersion;
  j["spec"] = std::move(spec);
  j["results"] = std::move(results);
  return j;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct Common {
  int d = 2;
  int n = 3;
  std::uint64_t seed = 0;
  std::size_t max_dim = 8000;
  std::string out;
  std::string format = "json";
};

void add_size(CLI::App* cmd, Common& c, bool with_n) {
  cmd->add_option("--d", c.d, "dimension")->check(CLI::Range(2, 8))->capture_default_str();
  if (with_n) cmd->add_option("--n", c.n, "lattice side")->check(CLI::PositiveNumber)->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

int run_verify(const Common& c, int trials) {
  lgt::VerifyOptions o;
  o.d = c.d;
  o.n = c.n;
  o.seed = c.seed;
  o.max_dim = c.max_dim;
  o.trials = trials;
  const auto checks = lgt::run_verification(o);
  bool failed = false;
  for (const auto& r : checks) failed = failed || r.status == lgt::CheckStatus::kFail;

  if (c.format == "csv") {
    std::ostringstream os;
    os << "name,status,max_error,tolerance\n";
    for (const auto& r : checks) {
      os << r.name << ',' << lgt::status_name(r.status) << ',' << num(r.max_error) << ',' << num(r.tolerance) << '\n';
    }
    emit(os.str(), c.out);
  } else {
    json spec{{"command", "verify"}, {"d", c.d},           {"n", c.n},
              {"seed", c.seed},      {"rng", lgt::Rng::kAlgorithm}, {"trials", trials},
              {"max_dim", c.max_dim}};
    json results = json::array();
    for (const auto& r : checks) results.push_back(lgt::to_json(r));
    emit(envelope(spec, results).dump(2) + "\n", c.out);
  }
  for (const auto& r : checks) {
    if (r.status == lgt::CheckStatus::kFail) std::cerr << "check failed: " << r.name << "\n";
  }
  return failed ? kCheckFailure : kOk;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--n-list: not an integer: '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

struct ConvergeRow {
  int n;
  double axial_density;
  double periodic_density;
  double kd_riemann;
  double gap_sigma0;
  long long kernel_dim;
  std::size_t axial_dim;
};

int run_converge(const Common& c, const std::string& n_list, std::optional<long long> m, const std::string& long_out) {
  const auto ns = parse_list(n_list);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2) throw UsageError("--n-list entries must be >= 2");
    if (i > 0 && ns[i] <= ns[i - 1]) throw UsageError("--n-list must be strictly ascending");
  }

  std::vector<ConvergeRow> rows;
  for (int n : ns) {
    const lgt::Lattice lat(c.d, n);
    const lgt::AxialGauge gauge(lat);
    const std::size_t dim = gauge.free_edges().size();
    if (dim > c.max_dim || lat.edge_count() > 4 * c.max_dim) {
      std::cerr << "skipping n=" << n << ": axial dimension " << dim << " exceeds max-dim " << c.max_dim << "\n";
      continue;
    }
    const auto sigma0 = lgt::restrict_to_axial(lgt::assemble_sigma(lat), gauge);
    const auto eig = lgt::sym_eigs(sigma0);
    ConvergeRow r{};
    r.n = n;
    r.axial_dim = dim;
    r.axial_density = lgt::density_from_trace_log(lgt::trace_log(eig), c.d, n);
    r.periodic_density = lgt::periodic_free_energy(c.d, n);
    r.kd_riemann = lgt::kd_value(c.d, m.value_or(n)).value;
    r.gap_sigma0 = eig.front();
    r.kernel_dim = lgt::kernel_dimension(c.d, n);
    rows.push_back(r);
  }

  if (c.format == "csv") {
    std::ostringstream os;
    os << "d,n,axial_density,periodic_density,kd_riemann,gap_sigma0,kernel_dim\n";
    for (const auto& r : rows) {
      os << c.d << ',' << r.n << ',' << num(r.axial_density) << ',' << num(r.periodic_density) << ','
         << num(r.kd_riemann) << ',' << num(r.gap_sigma0) << ',' << r.kernel_dim << '\n';
    }
    emit(os.str(), c.out);
  } else {
    json spec{{"command", "converge"},
              {"d", c.d},
              {"n_list", ns},
              {"m", m ? json(*m) : json("n")},
              {"max_dim", c.max_dim},
              {"tolerances", {{"singular", "1e-10 * lambda_max"}, {"eigen_deflation", 1e-12}}}};
    json results = json::array();
    for (const auto& r : rows) {
      results.push_back({{"d", c.d},
                         {"n", r.n},
                         {"axial_dim", r.axial_dim},
                         {"axial_density", r.axial_density},
                         {"periodic_density", r.periodic_density},
                         {"kd_riemann", r.kd_riemann},
                         {"gap_sigma0", r.gap_sigma0},
                         {"kernel_dim", r.kernel_dim}});
    }
    emit(envelope(spec, results).dump(2) + "\n", c.out);
  }

  if (!long_out.empty()) {
    std::ostringstream os;
    os << "d,n,quantity,value,method\n";
    for (const auto& r : rows) {
      os << c.d << ',' << r.n << ",axial_density," << num(r.axial_density) << ",householder-ql\n";
      os << c.d << ',' << r.n << ",periodic_density," << num(r.periodic_density) << ",analytic-spectrum\n";
      os << c.d << ',' << r.n << ",kd_riemann," << num(r.kd_riemann) << ",riemann-m=" << m.value_or(r.n) << "\n";
      os << c.d << ',' << r.n << ",gap_sigma0," << num(r.gap_sigma0) << ",householder-ql\n";
      os << c.d << ',' << r.n << ",kernel_dim," << r.kernel_dim << ",closed-form\n";
    }
    emit(os.str(), long_out);
  }
  return kOk;
}

int run_kd(const Common& c, long long m, bool analytic, const std::vector<std::string>& predict) {
  lgt::KdEstimate k;
  if (analytic) {
    if (c.d != 2) throw UsageError("--analytic is only available for d = 2");
    k = lgt::kd_analytic_d2();
  } else {
    if (m < 2) throw UsageError("--m must be >= 2");
    k = lgt::kd_value(c.d, m);
  }
  json spec{{"command", "kd"}, {"d", c.d}, {"m", analytic ? json(nullptr) : json(m)}, {"analytic", analytic}};
  json results = json::array();
  results.push_back(lgt::to_json(k));
  if (!predict.empty()) {
    if (predict.size() != 3) throw UsageError("--predict takes N g n");
    int N = 0;
    int n = 0;
    double g = 0.0;
    try {
      N = std::stoi(predict[0]);
      g = std::stod(predict[1]);
      n = std::stoi(predict[2]);
    } catch (const std::exception&) {
      throw UsageError("--predict takes N g n");
    }
    if (N < 1 || n < 1 || !(g > 0.0)) throw UsageError("--predict needs N >= 1, g > 0, n >= 1");
    spec["predict"] = {{"N", N}, {"g", g}, {"n", n}};
    results.push_back(lgt::to_json(lgt::leading_order_free_energy(c.d, n, N, g, k.value)));
  }
  emit(envelope(spec, results).dump(2) + "\n", c.out);
  return kOk;
}

lgt::SymmetricOperator build_operator(const std::string& which, int d, int n) {
  if (which == "torus") return lgt::torus_operator(d, n);
  const lgt::Lattice lat(d, n);
  auto sigma = lgt::assemble_sigma(lat);
  if (which == "sigma") return sigma;
  return lgt::restrict_to_axial(sigma, lgt::AxialGauge(lat));
}

std::size_t operator_dim(const std::string& which, int d, int n) {
  if (which == "torus") return static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(std::pow(n, d));
  const lgt::Lattice lat(d, n);
  if (which == "sigma") return lat.edge_count();
  return lgt::AxialGauge(lat).free_edges().size();
}

int run_spectrum(const Common& c, const std::string& which, bool eigenvalues, bool analytic) {
  json spec{{"command", "spectrum"}, {"d", c.d}, {"n", c.n}, {"operator", which}};
  json results = json::array();
  if (analytic) {
    if (which != "torus") throw UsageError("--analytic is only available for the torus operator");
    results.push_back(lgt::to_json(lgt::analytic_spectrum(c.d, c.n)));
  } else {
    const auto dim = operator_dim(which, c.d, c.n);
    if (dim > c.max_dim) throw UsageError("operator dimension " + std::to_string(dim) + " exceeds --max-dim");
    results.push_back(lgt::to_json(lgt::spectrum_report(build_operator(which, c.d, c.n), c.d, c.n), eigenvalues));
  }
  emit(envelope(spec, results).dump(2) + "\n", c.out);
  return kOk;
}

int run_export(const Common& c, const std::string& which) {
  const auto dim = operator_dim(which, c.d, c.n);
  if (dim > c.max_dim) throw UsageError("operator dimension " + std::to_string(dim) + " exceeds --max-dim");
  const auto op = build_operator(which, c.d, c.n);
  std::ostringstream os;
  lgt::write_triplets(os, op, json{{"tool_version", kToolVersion}, {"d", c.d}, {"n", c.n}, {"operator", which}});
  emit(os.str(), c.out);
  return kOk;
}

int run_inspect(const Common& c) {
  const lgt::Lattice lat(c.d, c.n);
  const lgt::AxialGauge gauge(lat);
  json spec{{"command", "inspect"}, {"d", c.d}, {"n", c.n}};
  json results = json::array();
  results.push_back(lgt::summary_json(lat));
  results.push_back(lgt::summary_json(lat, gauge));
  emit(envelope(spec, results).dump(2) + "\n", c.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice Maxwell operators, spectra and free-energy constants"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Common c;
  int trials = 100;
  std::string n_list;
  std::optional<long long> m_value;
  std::optional<long long> converge_m;
  bool analytic = false;
  bool eigenvalues = false;
  std::vector<std::string> predict;
  std::string long_out;
  std::string which = "sigma0";

  auto* verify = app.add_subcommand("verify", "run the invariant checks of every module");
  add_size(verify, c, true);
  add_output(verify, c);
  verify->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  verify->add_option("--trials", trials, "random inputs per property")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--max-dim", c.max_dim, "largest dense operator to build")->capture_default_str();

  auto* converge = app.add_subcommand("converge", "free-energy densities along a sweep of n");
  add_size(converge, c, false);
  add_output(converge, c);
  converge->add_option("--n-list", n_list, "ascending sizes, e.g. 4,8,16")->required();
  converge->add_option("--m", converge_m, "Riemann grid for K_d (default m = n)");
  converge->add_option("--seed", c.seed, "RNG seed (unused by the sweep, recorded)")->capture_default_str();
  converge->add_option("--max-dim", c.max_dim, "largest axial operator to diagonalise")->capture_default_str();
  converge->add_option("--long-out", long_out, "also write long-format data to this path");

  auto* kd = app.add_subcommand("kd", "evaluate K_d and the leading-order free energy");
  add_size(kd, c, false);
  kd->add_option("--m", m_value, "Riemann grid size (default 4096 for d = 2, 128 otherwise)");
  kd->add_flag("--analytic", analytic, "exact value (d = 2 only)");
  kd->add_option("--predict", predict, "N g n")->expected(3);
  kd->add_option("--out", c.out, "output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "spectrum report of an operator");
  add_size(spectrum, c, true);
  spectrum->add_option("--operator", which, "sigma, sigma0 or torus")
      ->check(CLI::IsMember({"sigma", "sigma0", "torus"}))
      ->capture_default_str();
  spectrum->add_flag("--eigenvalues", eigenvalues, "include the full eigenvalue list");
  spectrum->add_flag("--analytic", analytic, "closed-form torus spectrum");
  spectrum->add_option("--max-dim", c.max_dim, "largest dense operator to build")->capture_default_str();
  spectrum->add_option("--out", c.out, "output path (default stdout)");

  auto* exporter = app.add_subcommand("export-matrix", "write an operator as coordinate triplets");
  add_size(exporter, c, true);
  exporter->add_option("--operator", which, "sigma, sigma0 or torus")
      ->check(CLI::IsMember({"sigma", "sigma0", "torus"}))
      ->capture_default_str();
  exporter->add_option("--max-dim", c.max_dim, "largest dense operator to build")->capture_default_str();
  exporter->add_option("--out", c.out, "output path (default stdout)");

  auto* inspect = app.add_subcommand("inspect", "lattice and gauge counts");
  add_size(inspect, c, true);
  inspect->add_option("--out", c.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(c, trials);
    if (*converge) return run_converge(c, n_list, converge_m, long_out);
    if (*kd) return run_kd(c, m_value.value_or(c.d == 2 ? 4096 : 128), analytic, predict);
    if (*spectrum) return run_spectrum(c, which, eigenvalues, analytic);
    if (*exporter) return run_export(c, which);
    if (*inspect) return run_inspect(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsage;
}
