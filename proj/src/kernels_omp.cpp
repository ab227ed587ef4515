#include <omp.h>

#include <cstdint>

#include "densilex/kernels.hpp"
#include "kernels_detail.hpp"

namespace densilex::kernels::omp {

int max_threads() { return omp_get_max_threads(); }

FrequencyTable count_tokens(const std::vector<Document>& documents) {
  const int threads = omp_get_max_threads();
  std::vector<FrequencyTable> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::int64_t>(documents.size());
#pragma omp parallel num_threads(threads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t d = 0; d < n; ++d) {
      for (const auto& t : documents[static_cast<std::size_t>(d)]) local.add(t);
    }
  }
  FrequencyTable table;
  for (const auto& p : partial) table.merge(p);
  return table;
}

void project(const RowMatrix& vectors, std::span<const double> axis,
             std::span<const double> offset, std::span<double> out) {
  detail::check_project(vectors, axis, offset, out);
  const auto rows = vectors.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index r = 0; r < rows; ++r) {
    out[static_cast<std::size_t>(r)] = detail::project_row(vectors, r, axis, offset);
  }
}

double pair_loss_sum(const RowMatrix& vectors, std::span<const double> q,
                     std::span<const IndexPair> pairs, PairKind kind) {
  std::vector<double> values(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    values[k] = detail::pair_value(vectors, q, pairs[k], kind);
  }
  return pairwise_sum(values);
}

KendallCounts kendall_counts(std::span<const double> x,
                             std::span<const double> y) {
  const auto n = static_cast<std::int64_t>(x.size());
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : concordant, discordant)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(j);
      int p = detail::sign_of(x[a] - x[b]) * detail::sign_of(y[a] - y[b]);
      concordant += p > 0;
      discordant += p < 0;
    }
  }
  KendallCounts k;
  k.concordant = concordant;
  k.discordant = discordant;
  k.pairs = n * (n - 1) / 2;
  return k;
}

}  // namespace densilex::kernels::omp
