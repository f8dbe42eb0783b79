#include "vassiliev/matrix.hpp"

#include <stdexcept>

namespace vassiliev {

QMatrix::QMatrix(std::vector<std::vector<Rational>> rows) {
  for (auto& r : rows) add_row(std::move(r));
}

void QMatrix::add_row(std::vector<Rational> row) {
  if (rows_.empty()) {
    cols_ = static_cast<int>(row.size());
  } else if (static_cast<int>(row.size()) != cols_) {
    throw std::invalid_argument("ragged matrix row");
  }
  rows_.push_back(std::move(row));
}

QMatrix QMatrix::transpose() const {
  QMatrix t;
  for (int j = 0; j < cols_; ++j) {
    std::vector<Rational> row;
    row.reserve(rows_.size());
    for (const auto& r : rows_) row.push_back(r[j]);
    t.add_row(std::move(row));
  }
  return t;
}

int QMatrix::rank() const {
  std::vector<std::vector<Rational>> m = rows_;
  int r = 0;
  for (int col = 0; col < cols_ && r < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const Rational pv = m[r][col];
    for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / pv;
      for (int j = col; j < cols_; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int span_dim(const std::vector<PairedPoly>& values, Projection proj) {
  if (values.empty()) return 0;
  int deg = 0;
  for (const auto& v : values) {
    deg = std::max(deg, v.gl.degree().value_or(0));
    deg = std::max(deg, v.so.degree().value_or(0));
  }
  QMatrix m;
  for (const auto& v : values) {
    std::vector<Rational> row;
    if (proj != Projection::so)
      for (int i = 0; i <= deg; ++i) row.push_back(v.gl.coeff(i));
    if (proj != Projection::gl)
      for (int i = 0; i <= deg; ++i) row.push_back(v.so.coeff(i));
    m.add_row(std::move(row));
  }
  return m.rank();
}

}  // namespace vassiliev
