#include "fixtures.hpp"

#include <cmath>
#include <random>

namespace densilex::testing {

namespace {

struct Builder {
  std::vector<std::string> words;
  std::vector<std::vector<double>> rows;

  void add(std::string word, std::vector<double> row) {
    words.push_back(std::move(word));
    rows.push_back(std::move(row));
  }

  EmbeddingTable build() const {
    RowMatrix m(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
      }
    }
    return EmbeddingTable(words, std::move(m));
  }
};

PlantedFixture assemble(const PlantedSpec& spec, std::mt19937_64& rng,
                        Builder& b) {
  std::normal_distribution<double> noise(0.0, spec.noise);
  auto vec = [&](double axis0) {
    std::vector<double> v(spec.dim);
    for (auto& x : v) x = noise(rng);
    v[0] = axis0;
    return v;
  };
  PlantedFixture f;
  for (std::size_t i = 0; i < spec.seeds_per_polarity; ++i) {
    b.add("pos" + std::to_string(i), vec(+spec.offset));
    f.seeds.positive.push_back("pos" + std::to_string(i));
  }
  for (std::size_t i = 0; i < spec.seeds_per_polarity; ++i) {
    b.add("neg" + std::to_string(i), vec(-spec.offset));
    f.seeds.negative.push_back("neg" + std::to_string(i));
  }
  for (std::size_t i = 0; i < spec.heldout_per_polarity; ++i) {
    b.add("hpos" + std::to_string(i), vec(+spec.offset));
    f.heldout["hpos" + std::to_string(i)] = Polarity::Positive;
    b.add("hneg" + std::to_string(i), vec(-spec.offset));
    f.heldout["hneg" + std::to_string(i)] = Polarity::Negative;
  }
  for (std::size_t i = 0; i < spec.fillers; ++i) {
    b.add("filler" + std::to_string(i), vec(noise(rng)));
  }
  return f;
}

}  // namespace

PlantedFixture planted_fixture(const PlantedSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Builder b;
  PlantedFixture f = assemble(spec, rng, b);
  f.table = b.build();
  return f;
}

double column_variance(const EmbeddingTable& table, std::size_t column) {
  const auto col = table.vectors().col(static_cast<Eigen::Index>(column));
  const double mean = col.mean();
  return (col.array() - mean).square().sum() / static_cast<double>(col.size() - 1);
}

PlantedFixture anisotropic_fixture(double variance_ratio, const PlantedSpec& spec) {
  std::mt19937_64 rng(spec.seed ^ 0xA5A5);
  Builder b;
  PlantedFixture f = assemble(spec, rng, b);
  f.distractor_axis = 1;

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& row : b.rows) row[1] = gauss(rng);
  EmbeddingTable raw = b.build();
  const double target = variance_ratio * column_variance(raw, 0);
  const double scale = std::sqrt(target / column_variance(raw, 1));
  for (auto& row : b.rows) row[1] *= scale;
  f.table = b.build();
  return f;
}

TokenizedCorpus synonym_corpus(std::size_t sentences_per_word, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 9);
  TokenizedCorpus corpus;
  auto ctx = [&](char group) { return std::string(1, group) + std::to_string(pick(rng)); };
  for (std::size_t i = 0; i < sentences_per_word; ++i) {
    for (const auto& [word, group] :
         {std::pair<std::string, char>{"x", 'a'}, {"y", 'a'}, {"z", 'b'}}) {
      corpus.add({ctx(group), ctx(group), word, ctx(group), ctx(group)});
    }
  }
  return corpus;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

}  // namespace densilex::testing
