// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "densilex/kernels.hpp"

namespace {

using namespace densilex;

RowMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  RowMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

std::vector<Document> random_documents(int n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> w(0, 5000), len(3, 40);
  std::vector<Document> docs(static_cast<std::size_t>(n));
  for (auto& d : docs) {
    for (int i = len(rng); i > 0; --i) d.push_back("w" + std::to_string(w(rng)));
  }
  return docs;
}

template <auto Fn>
void BM_CountTokens(benchmark::State& state) {
  const auto docs = random_documents(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(docs));
}

template <auto Fn>
void BM_Project(benchmark::State& state) {
  const RowMatrix m = random_matrix(static_cast<int>(state.range(0)), 100, 2);
  const RowMatrix axis = random_matrix(1, 100, 3);
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (auto _ : state) {
    Fn(m, std::span<const double>(axis.data(), 100), {}, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Fn>
void BM_PairLoss(benchmark::State& state) {
  const RowMatrix m = random_matrix(1000, 100, 4);
  const RowMatrix q = random_matrix(1, 100, 5);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> pick(0, 999);
  std::vector<IndexPair> pairs(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pairs) p = {pick(rng), pick(rng)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Fn(m, std::span<const double>(q.data(), 100), pairs, PairKind::Same));
  }
}

template <auto Fn>
void BM_Kendall(benchmark::State& state) {
  const RowMatrix xy = random_matrix(2, static_cast<int>(state.range(0)), 7);
  const auto n = static_cast<std::size_t>(xy.cols());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(std::span<const double>(xy.row(0).data(), n),
                                std::span<const double>(xy.row(1).data(), n)));
  }
}

BENCHMARK(BM_CountTokens<kernels::serial::count_tokens>)->Name("count_tokens/serial")->Arg(20000);
BENCHMARK(BM_CountTokens<kernels::omp::count_tokens>)->Name("count_tokens/omp")->Arg(20000);
BENCHMARK(BM_Project<kernels::serial::project>)->Name("project/serial")->Arg(50000);
BENCHMARK(BM_Project<kernels::omp::project>)->Name("project/omp")->Arg(50000);
BENCHMARK(BM_PairLoss<kernels::serial::pair_loss_sum>)->Name("pair_loss_sum/serial")->Arg(100000);
BENCHMARK(BM_PairLoss<kernels::omp::pair_loss_sum>)->Name("pair_loss_sum/omp")->Arg(100000);
BENCHMARK(BM_Kendall<kernels::serial::kendall_counts>)->Name("kendall_counts/serial")->Arg(4000);
BENCHMARK(BM_Kendall<kernels::omp::kendall_counts>)->Name("kendall_counts/omp")->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
