#pragma once

#include <vector>

#include "vassiliev/poly.hpp"

namespace vassiliev {

/// Rectangular matrix over Q. Rows may be appended; all rows must share width.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::vector<std::vector<Rational>> rows);

  void add_row(std::vector<Rational> row);
  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return cols_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  QMatrix transpose() const;

  /// Exact rank over Q by rational Gaussian elimination.
  int rank() const;

 private:
  std::vector<std::vector<Rational>> rows_;
  int cols_ = 0;
};

enum class Projection { gl, so, both };

/// Dimension of the span of (gl, so) value pairs, seen through the chosen
/// projection as coefficient vectors.
int span_dim(const std::vector<PairedPoly>& values, Projection proj);

}  // namespace vassiliev
