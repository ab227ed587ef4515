#pragma once

#include <cstdint>

#include "densilex/corpus.hpp"
#include "densilex/embedding.hpp"

namespace densilex {

struct SgnsConfig {
  int dim = 100;
  int window = 5;
  int negatives = 5;
  int min_count = 5;
  int epochs = 5;
  double initial_lr = 0.025;
  double min_lr = 1e-4;          // learning rate decays linearly to this
  double subsample = 0.0;        // frequent-word threshold t; 0 disables
  int workers = 1;               // >1 selects hogwild OpenMP training
  std::uint64_t rng_seed = 1;

  // Throws InvalidArgument when a field is out of range.
  void validate() const;
};

inline constexpr double kDefaultSubsampleThreshold = 1e-4;

// Skip-gram with negative sampling. Vocabulary keeps words with count >=
// min_count, ordered by count descending then bytewise. Every (center,
// context) pair within `window` positions is one SGD step on
//   log s(u_c . v_w) + sum_k log s(-u_{n_k} . v_w)
// with negatives drawn from the unigram^0.75 distribution. Returns the
// input vectors v. With workers == 1 the result is a pure function of
// (corpus, cfg); hogwild mode is only statistically reproducible.
// Throws TrainingError when fewer than 2 words survive min_count.
EmbeddingTable train_sgns(const TokenizedCorpus& corpus, const SgnsConfig& cfg);

}  // namespace densilex
