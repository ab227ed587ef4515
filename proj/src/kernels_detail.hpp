#pragma once

// Per-item kernel bodies shared by the serial and OpenMP variants.

#include <cmath>
#include <span>

#include "densilex/kernels.hpp"
#include "densilex/util.hpp"

namespace densilex::kernels::detail {

inline double project_row(const RowMatrix& vectors, Eigen::Index r,
                          std::span<const double> axis,
                          std::span<const double> offset) {
  const double* row = vectors.data() + r * vectors.cols();
  double s = 0.0;
  if (offset.empty()) {
    for (std::size_t j = 0; j < axis.size(); ++j) s += axis[j] * row[j];
  } else {
    for (std::size_t j = 0; j < axis.size(); ++j) {
      s += axis[j] * (row[j] - offset[j]);
    }
  }
  return s;
}

inline double pair_value(const RowMatrix& vectors, std::span<const double> q,
                         const IndexPair& p, PairKind kind) {
  const auto cols = vectors.cols();
  const double* a = vectors.data() + static_cast<Eigen::Index>(p.first) * cols;
  const double* b = vectors.data() + static_cast<Eigen::Index>(p.second) * cols;
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) s += q[j] * (a[j] - b[j]);
  return kind == PairKind::Same ? std::abs(s) : -std::abs(s);
}

inline int sign_of(double d) { return (d > 0) - (d < 0); }

inline void check_project(const RowMatrix& vectors, std::span<const double> axis,
                   std::span<const double> offset, std::span<double> out) {
  if (axis.size() != static_cast<std::size_t>(vectors.cols()) ||
      (!offset.empty() && offset.size() != axis.size()) ||
      out.size() != static_cast<std::size_t>(vectors.rows())) {
    throw InvalidArgument("project: dimension mismatch");
  }
}

}  // namespace densilex::kernels::detail
