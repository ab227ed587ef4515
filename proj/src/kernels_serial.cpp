#include "densilex/kernels.hpp"

#include <cmath>

#include "densilex/util.hpp"
#include "kernels_detail.hpp"

namespace densilex::kernels {

namespace {

constexpr std::size_t kLeaf = 8;

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}


namespace serial {

FrequencyTable count_tokens(const std::vector<Document>& documents) {
  FrequencyTable table;
  for (const auto& doc : documents) {
    for (const auto& t : doc) table.add(t);
  }
  return table;
}

void project(const RowMatrix& vectors, std::span<const double> axis,
             std::span<const double> offset, std::span<double> out) {
  detail::check_project(vectors, axis, offset, out);
  for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
    out[static_cast<std::size_t>(r)] = detail::project_row(vectors, r, axis, offset);
  }
}

double pair_loss_sum(const RowMatrix& vectors, std::span<const double> q,
                     std::span<const IndexPair> pairs, PairKind kind) {
  std::vector<double> values(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    values[i] = detail::pair_value(vectors, q, pairs[i], kind);
  }
  return pairwise_sum(values);
}

KendallCounts kendall_counts(std::span<const double> x,
                             std::span<const double> y) {
  KendallCounts k;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int p = detail::sign_of(x[i] - x[j]) * detail::sign_of(y[i] - y[j]);
      if (p > 0) ++k.concordant;
      if (p < 0) ++k.discordant;
    }
  }
  k.pairs = static_cast<std::int64_t>(n * (n - 1) / 2);
  return k;
}

}  // namespace serial
}  // namespace densilex::kernels
