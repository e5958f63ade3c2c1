#include "lgt/symmetric_operator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace lgt {

SymmetricOperator::SymmetricOperator(std::string name, std::vector<BasisLabel> labels)
    : name_(std::move(name)), dim_(labels.size()), labels_(std::move(labels)), data_(dim_ * dim_, 0.0) {}

double SymmetricOperator::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

double SymmetricOperator::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double SymmetricOperator::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

std::vector<double> SymmetricOperator::apply(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("operator/vector dimension mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = data_.data() + i * dim_;
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymmetricOperator::quadratic_form(std::span<const double> x, std::span<const double> y) const {
  auto ay = apply(y);
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += x[i] * ay[i];
  return s;
}

SymmetricOperator SymmetricOperator::principal_submatrix(std::span<const std::size_t> rows,
                                                         std::string name) const {
  std::vector<BasisLabel> labels;
  labels.reserve(rows.size());
  for (auto r : rows) {
    if (r >= dim_) throw std::out_of_range("principal_submatrix index out of range");
    labels.push_back(labels_[r]);
  }
  SymmetricOperator sub(std::move(name), std::move(labels));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a; b < rows.size(); ++b) sub.set(a, b, (*this)(rows[a], rows[b]));
  }
  return sub;
}

std::int64_t IntegerSymmetricMatrix::quadratic_form(std::span<const std::int64_t> u,
                                                    std::span<const std::int64_t> v) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    std::int64_t r = 0;
    for (std::size_t j = 0; j < dim; ++j) r += entries[i * dim + j] * v[j];
    s += u[i] * r;
  }
  return s;
}

void write_triplets(std::ostream& os, const SymmetricOperator& op, const nlohmann::ordered_json& header) {
  nlohmann::ordered_json h = header;
  h["name"] = op.name();
  h["dim"] = op.dim();
  os << h.dump() << '\n';
  os << std::setprecision(17);
  for (std::size_t i = 0; i < op.dim(); ++i) {
    for (std::size_t j = i; j < op.dim(); ++j) {
      const double v = op(i, j);
      if (v != 0.0) os << (i + 1) << ' ' << (j + 1) << ' ' << v << '\n';
    }
  }
}

}  // namespace lgt
