#pragma once

// Synthetic embedding tables and corpora with a known answer, shared by the
// unit and acceptance suites.

#include <cstdint>
#include <string>
#include <vector>

#include "densilex/corpus.hpp"
#include "densilex/densifier.hpp"
#include "densilex/embedding.hpp"
#include "densilex/lexicon.hpp"

namespace densilex::testing {

struct PlantedFixture {
  EmbeddingTable table;
  SeedLexicon seeds;     // training seeds
  LabelMap heldout;      // labeled words not used for training
  std::size_t sentiment_axis = 0;
  std::size_t distractor_axis = 1;  // only meaningful for the anisotropic one
};

struct PlantedSpec {
  std::size_t dim = 50;
  std::size_t seeds_per_polarity = 10;
  std::size_t heldout_per_polarity = 5;
  std::size_t fillers = 200;
  double offset = 5.0;  // +-offset on the sentiment axis
  double noise = 0.1;
  std::uint64_t seed = 11;
};

// Polar words at (+-offset, noise...), fillers at (noise...).
PlantedFixture planted_fixture(const PlantedSpec& spec = {});

// As planted_fixture, plus a distractor axis carrying Gaussian values for
// every word, rescaled so its variance over the vocabulary is
// `variance_ratio` times the variance of the sentiment axis.
PlantedFixture anisotropic_fixture(double variance_ratio = 10.0,
                                   const PlantedSpec& spec = {});

double column_variance(const EmbeddingTable& table, std::size_t column);

// Words x and y appear among the same context words A; z among disjoint
// context words B.
TokenizedCorpus synonym_corpus(std::size_t sentences_per_word = 600,
                               std::uint64_t seed = 3);

double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace densilex::testing
