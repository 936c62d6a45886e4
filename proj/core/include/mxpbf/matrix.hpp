#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "mxpbf/errors.hpp"

namespace mxpbf {

/// An n x p data matrix (rows = observations, columns = variables) stored
/// column-major so that a column is a contiguous length-n range.
class SampleMatrix {
 public:
  SampleMatrix() = default;

  SampleMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
      throw InvalidInputError("SampleMatrix requires n >= 1 and p >= 1");
    }
  }

  /// Builds from a row-major buffer (the CSV layout).
  static SampleMatrix from_rows(std::size_t rows, std::size_t cols,
                                std::span<const double> row_major) {
    if (row_major.size() != rows * cols) {
      throw InvalidInputError("SampleMatrix::from_rows: buffer size mismatch");
    }
    SampleMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = row_major[i * cols + j];
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return values_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[j * rows_ + i]; }

  std::span<const double> column(std::size_t j) const {
    return std::span<const double>(values_.data() + j * rows_, rows_);
  }
  std::span<double> column(std::size_t j) {
    return std::span<double>(values_.data() + j * rows_, rows_);
  }

  std::span<const double> data() const noexcept { return values_; }

  bool all_finite() const noexcept {
    for (double v : values_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  /// Subtracts each column's mean in place.
  void center_columns() {
    for (std::size_t j = 0; j < cols_; ++j) {
      auto col = column(j);
      double s = 0.0;
      for (double v : col) s += v;
      const double mean = s / static_cast<double>(rows_);
      for (double& v : col) v -= mean;
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Dense square matrix (column-major); used for covariance / precision matrices.
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t dim) : dim_(dim), values_(dim * dim, 0.0) {}

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  double& operator()(std::size_t i, std::size_t j) { return values_[j * dim_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[j * dim_ + i]; }

  void add_to_diagonal(double delta) {
    for (std::size_t i = 0; i < dim_; ++i) (*this)(i, i) += delta;
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest absolute asymmetry |a_ij - a_ji|.
  double max_asymmetry() const noexcept {
    double m = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t i = j + 1; i < dim_; ++i) {
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
      }
    }
    return m;
  }

  std::span<const double> data() const noexcept { return values_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

}  // namespace mxpbf
