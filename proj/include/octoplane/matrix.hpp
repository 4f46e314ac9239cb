#pragma once

#include "octoplane/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace octoplane {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return data_; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;

  bool operator==(const RatMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row-sparse matrix; the format constraint systems are assembled in.
struct SparseRatMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;

  explicit SparseRatMatrix(std::size_t c = 0) : cols(c) {}
  static SparseRatMatrix from_dense(const RatMatrix& m);
  RatMatrix to_dense() const;

  /// Appends a row after merging duplicate columns and dropping zeros.
  void add_row(SparseRow row);
  std::size_t row_count() const { return rows.size(); }
};

}  // namespace octoplane
