#include "densilex/sgns.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <unordered_map>

#include "densilex/util.hpp"

namespace densilex {

void SgnsConfig::validate() const {
  if (dim < 2) throw InvalidArgument("sgns: dim must be >= 2");
  if (window < 1) throw InvalidArgument("sgns: window must be positive");
  if (negatives < 1) throw InvalidArgument("sgns: negatives must be positive");
  if (min_count < 1) throw InvalidArgument("sgns: min_count must be positive");
  if (epochs < 1) throw InvalidArgument("sgns: epochs must be positive");
  if (!(initial_lr > 0.0)) throw InvalidArgument("sgns: initial_lr must be positive");
  if (!(min_lr >= 0.0)) throw InvalidArgument("sgns: min_lr must be non-negative");
  if (!(subsample >= 0.0)) throw InvalidArgument("sgns: subsample must be non-negative");
  if (workers < 1) throw InvalidArgument("sgns: workers must be positive");
}

namespace {

constexpr double kUnigramPower = 0.75;
constexpr double kMaxLogit = 20.0;

double sigmoid(double x) {
  x = std::clamp(x, -kMaxLogit, kMaxLogit);
  return 1.0 / (1.0 + std::exp(-x));
}

struct Vocabulary {
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  std::unordered_map<std::string, std::uint32_t> index;
};

Vocabulary build_vocabulary(const TokenizedCorpus& corpus, int min_count) {
  FrequencyTable freq = kernels::serial::count_tokens(corpus.documents());
  Vocabulary v;
  for (const auto& [w, c] : freq.sorted()) {
    if (c < static_cast<std::uint64_t>(min_count)) continue;
    v.index.emplace(w, static_cast<std::uint32_t>(v.words.size()));
    v.words.push_back(w);
    v.counts.push_back(c);
  }
  return v;
}

// Sampling from count^0.75 via inverse CDF.
class NegativeSampler {
 public:
  explicit NegativeSampler(const std::vector<std::uint64_t>& counts) {
    cdf_.reserve(counts.size());
    double acc = 0.0;
    for (auto c : counts) {
      acc += std::pow(static_cast<double>(c), kUnigramPower);
      cdf_.push_back(acc);
    }
  }

  template <class Rng>
  std::uint32_t operator()(Rng& rng) const {
    const double u = std::uniform_real_distribution<double>(0.0, cdf_.back())(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::uint32_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

// One positive (center, context) pair plus its negatives.
template <class Rng>
void train_pair(RowMatrix& input, RowMatrix& output, std::uint32_t center,
                std::uint32_t context, const NegativeSampler& sampler,
                int negatives, double lr, double* neu1e, Rng& rng) {
  const auto dim = input.cols();
  double* v = input.data() + static_cast<Eigen::Index>(center) * dim;
  std::fill(neu1e, neu1e + dim, 0.0);
  for (int k = 0; k <= negatives; ++k) {
    std::uint32_t target;
    double label;
    if (k == 0) {
      target = context;
      label = 1.0;
    } else {
      target = sampler(rng);
      if (target == context) continue;
      label = 0.0;
    }
    double* u = output.data() + static_cast<Eigen::Index>(target) * dim;
    double f = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) f += v[j] * u[j];
    const double g = lr * (label - sigmoid(f));
    for (Eigen::Index j = 0; j < dim; ++j) neu1e[j] += g * u[j];
    for (Eigen::Index j = 0; j < dim; ++j) u[j] += g * v[j];
  }
  for (Eigen::Index j = 0; j < dim; ++j) v[j] += neu1e[j];
}

template <class Rng>
std::vector<std::uint32_t> encode(const Document& doc, const Vocabulary& vocab,
                                  const std::vector<double>& keep_prob,
                                  Rng& rng) {
  std::vector<std::uint32_t> ids;
  ids.reserve(doc.size());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& t : doc) {
    auto it = vocab.index.find(t);
    if (it == vocab.index.end()) continue;
    if (!keep_prob.empty() && keep_prob[it->second] < coin(rng)) continue;
    ids.push_back(it->second);
  }
  return ids;
}

}  // namespace

EmbeddingTable train_sgns(const TokenizedCorpus& corpus, const SgnsConfig& cfg) {
  cfg.validate();
  Vocabulary vocab = build_vocabulary(corpus, cfg.min_count);
  if (vocab.words.size() < 2) {
    throw TrainingError("sgns: fewer than 2 words have count >= min_count (" +
                        std::to_string(cfg.min_count) + ")");
  }

  std::uint64_t train_tokens = 0;
  for (auto c : vocab.counts) train_tokens += c;

  std::vector<double> keep_prob;
  if (cfg.subsample > 0.0) {
    keep_prob.resize(vocab.counts.size());
    const double threshold = cfg.subsample * static_cast<double>(train_tokens);
    for (std::size_t i = 0; i < keep_prob.size(); ++i) {
      const double f = static_cast<double>(vocab.counts[i]);
      keep_prob[i] = (std::sqrt(f / threshold) + 1.0) * threshold / f;
    }
  }

  const auto n = static_cast<Eigen::Index>(vocab.words.size());
  const auto dim = static_cast<Eigen::Index>(cfg.dim);
  RowMatrix input(n, dim);
  RowMatrix output = RowMatrix::Zero(n, dim);
  {
    std::mt19937_64 init_rng(derive_seed(cfg.rng_seed, "sgns/init"));
    std::uniform_real_distribution<double> uni(-0.5 / cfg.dim, 0.5 / cfg.dim);
    for (Eigen::Index i = 0; i < input.size(); ++i) input.data()[i] = uni(init_rng);
  }

  const NegativeSampler sampler(vocab.counts);
  const double min_lr = std::min(cfg.min_lr, cfg.initial_lr);
  const double total_work = static_cast<double>(train_tokens) * cfg.epochs;
  const auto& docs = corpus.documents();
  std::atomic<std::uint64_t> processed{0};

  auto learning_rate = [&](std::uint64_t done) {
    const double progress = std::min(1.0, static_cast<double>(done) / total_work);
    return cfg.initial_lr - (cfg.initial_lr - min_lr) * progress;
  };

  auto train_document = [&](const Document& doc, std::mt19937_64& rng,
                            double* neu1e) {
    const auto ids = encode(doc, vocab, keep_prob, rng);
    const double lr = learning_rate(processed.load(std::memory_order_relaxed));
    const auto len = static_cast<std::ptrdiff_t>(ids.size());
    for (std::ptrdiff_t i = 0; i < len; ++i) {
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - cfg.window);
      const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(len - 1, i + cfg.window);
      for (std::ptrdiff_t j = lo; j <= hi; ++j) {
        if (j == i) continue;
        train_pair(input, output, ids[static_cast<std::size_t>(i)],
                   ids[static_cast<std::size_t>(j)], sampler, cfg.negatives,
                   lr, neu1e, rng);
      }
    }
    // Counts every occurrence, kept or subsampled, so the schedule ends on
    // min_lr regardless of subsampling.
    std::uint64_t seen = 0;
    for (const auto& t : doc) seen += vocab.index.contains(t);
    processed.fetch_add(seen, std::memory_order_relaxed);
  };

  if (cfg.workers == 1) {
    std::mt19937_64 rng(derive_seed(cfg.rng_seed, "sgns/train"));
    std::vector<double> neu1e(static_cast<std::size_t>(dim));
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
      for (const auto& doc : docs) train_document(doc, rng, neu1e.data());
    }
  } else {
    // Hogwild: workers race on shared rows without locks.
    const auto ndocs = static_cast<std::int64_t>(docs.size());
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
#pragma omp parallel num_threads(cfg.workers)
      {
        const int tid = omp_get_thread_num();
        std::mt19937_64 rng(derive_seed(
            cfg.rng_seed, "sgns/train/" + std::to_string(epoch) + "/" +
                              std::to_string(tid)));
        std::vector<double> neu1e(static_cast<std::size_t>(dim));
#pragma omp for schedule(static)
        for (std::int64_t d = 0; d < ndocs; ++d) {
          train_document(docs[static_cast<std::size_t>(d)], rng, neu1e.data());
        }
      }
    }
  }

  if (!input.allFinite()) {
    throw TrainingError("sgns: training diverged; lower the learning rate");
  }
  return EmbeddingTable(std::move(vocab.words), std::move(input));
}

}  // namespace densilex
