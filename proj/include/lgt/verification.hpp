#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgt/fields.hpp"
#include "lgt/gauge.hpp"
#include "lgt/lattice.hpp"
#include "lgt/rng.hpp"
#include "lgt/spectral.hpp"
#include "lgt/symmetric_operator.hpp"

namespace lgt {

enum class CheckStatus { kPass, kFail, kSkip };
const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string formula;
  CheckStatus status = CheckStatus::kPass;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

nlohmann::ordered_json to_json(const CheckResult& c);

struct VerifyOptions {
  int d = 2;
  int n = 3;
  std::uint64_t seed = 0;
  std::size_t max_dim = 8000;
  int trials = 100;
};

/// Runs every module's invariant checks at (d, n). Checks whose operator
/// would exceed max_dim, or which need n >= 2, are reported as skipped.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

// Random inputs shared by the verification suite, the tests and the benches.
std::vector<std::int64_t> random_integer_field(Rng& rng, std::size_t size, std::int64_t k);
EdgeField random_edge_field(Rng& rng, const Lattice& lat);
/// d-component one-form on padded_grid(lat) with random values on the box sites.
OneForm random_box_one_form(Rng& rng, const Lattice& lat);
/// Random element of the axial space on padded_grid(lat).
OneForm random_axial_one_form(Rng& rng, const Lattice& lat, const AxialGauge& gauge);
/// B^T B for B with uniform(-1, 1) entries.
SymmetricOperator random_psd_operator(Rng& rng, std::size_t dim);
/// Orthonormal rank-l family from Gram-Schmidt (applied twice) on random vectors.
DenseBasis random_orthonormal_basis(Rng& rng, std::size_t dim, std::size_t rank);

}  // namespace lgt
