#pragma once

// Data-parallel inner loops of the pipeline. Every kernel has a serial
// reference in `serial` and an OpenMP version in `omp` with the same
// signature. The two produce bit-identical results: per-item work is the
// same code, and reductions go through pairwise_sum in item order.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "densilex/corpus.hpp"

namespace densilex {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class PairKind { Same, Different };

struct IndexPair {
  std::size_t first;
  std::size_t second;
};

struct KendallCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t pairs = 0;
};

namespace kernels {

// Fixed-shape binary tree sum; the result depends only on the order of
// the inputs, never on thread count.
double pairwise_sum(std::span<const double> values);

double dot(std::span<const double> a, std::span<const double> b);

namespace serial {

FrequencyTable count_tokens(const std::vector<Document>& documents);

// out[i] = axis . (row_i - offset); offset may be empty (treated as zero).
void project(const RowMatrix& vectors, std::span<const double> axis,
             std::span<const double> offset, std::span<double> out);

// Sum over pairs of |q.(e_a - e_b)| (Same) or -|q.(e_a - e_b)| (Different).
double pair_loss_sum(const RowMatrix& vectors, std::span<const double> q,
                     std::span<const IndexPair> pairs, PairKind kind);

// O(n^2) concordance counts; tied pairs count as neither.
KendallCounts kendall_counts(std::span<const double> x,
                             std::span<const double> y);

}  // namespace serial

namespace omp {

FrequencyTable count_tokens(const std::vector<Document>& documents);
void project(const RowMatrix& vectors, std::span<const double> axis,
             std::span<const double> offset, std::span<double> out);
double pair_loss_sum(const RowMatrix& vectors, std::span<const double> q,
                     std::span<const IndexPair> pairs, PairKind kind);
KendallCounts kendall_counts(std::span<const double> x,
                             std::span<const double> y);

int max_threads();

}  // namespace omp

}  // namespace kernels
}  // namespace densilex
