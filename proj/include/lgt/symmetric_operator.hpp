#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace lgt {

/// What a row/column of an operator stands for.
struct BasisLabel {
  enum class Kind { kEdge, kSiteComponent };
  Kind kind;
  std::size_t index;  // edge index, or site index for kSiteComponent
  int component;      // axis of the edge, or one-form component
};

/// Dense real symmetric matrix with a labelled basis.
///
/// Entries are written through set()/add(), which touch (i,j) and (j,i)
/// together, so the matrix is symmetric by construction.
class SymmetricOperator {
 public:
  SymmetricOperator() = default;
  SymmetricOperator(std::string name, std::vector<BasisLabel> labels);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] += v;
    if (i != j) data_[j * dim_ + i] += v;
  }

  std::span<const double> data() const { return data_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  double trace() const;
  /// max_ij |a_ij|
  double max_abs() const;
  /// Frobenius norm; an upper bound for the operator norm.
  double frobenius_norm() const;
  std::vector<double> apply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x, std::span<const double> y) const;
  SymmetricOperator principal_submatrix(std::span<const std::size_t> rows, std::string name) const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<BasisLabel> labels_;
  std::vector<double> data_;
};

/// Exact integer symmetric matrix (used for the plaquette form before any
/// floating point enters).
struct IntegerSymmetricMatrix {
  std::size_t dim = 0;
  std::vector<std::int64_t> entries;

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  std::int64_t quadratic_form(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;
};

/// Writes a coordinate-triplet export: one JSON header line, then
/// "row col value" per nonzero of the upper triangle (1-based indices).
void write_triplets(std::ostream& os, const SymmetricOperator& op, const nlohmann::ordered_json& header);

}  // namespace lgt
