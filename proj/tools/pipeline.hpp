#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "densilex/corpus.hpp"
#include "densilex/densifier.hpp"
#include "densilex/lexicon.hpp"
#include "densilex/sgns.hpp"

namespace densilex::cli {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path corpus;      // comment CSV
  fs::path seeds;       // word<TAB>pos|neg
  fs::path pos_seeds;   // alternative: one word per line
  fs::path neg_seeds;
  fs::path labels;      // evaluation labels, same format as seeds
  fs::path reference;   // optional lexicon TSV for kendall tau
  fs::path vectors;     // overrides <out>/embeddings.vec
  fs::path out_dir = "out";

  CsvSchema schema;
  TokenizerMode tokenizer = TokenizerMode::Pretokenized;
  std::size_t high_frequency_words = kDefaultHighFrequencyWords;

  SgnsConfig sgns;
  DensifierConfig densifier;
  double holdout_fraction = 0.0;

  LexiconSource method = LexiconSource::Densifier;
  std::size_t k = 5;
  std::vector<PlotKind> plot_kinds{PlotKind::ScatterJitter, PlotKind::ValueCurve,
                                   PlotKind::SortedCurve};
  std::vector<std::size_t> sizes{5, 10, 15};

  std::uint64_t rng_seed = 1;

  // Per-stage seeds fanned out from rng_seed.
  void derive_stage_seeds();
};

// Fixed artifact names inside out_dir.
struct Artifacts {
  fs::path dir;

  fs::path tokens() const { return dir / "tokens.txt"; }
  fs::path frequency() const { return dir / "frequency.tsv"; }
  fs::path corpus_stats() const { return dir / "corpus_stats.txt"; }
  fs::path embeddings() const { return dir / "embeddings.vec"; }
  fs::path transform() const { return dir / "densifier.q"; }
  fs::path loss() const { return dir / "loss.tsv"; }
  fs::path pca() const { return dir / "pca.axis"; }
  fs::path lexicon(LexiconSource s) const;
  fs::path report(LexiconSource s) const;
  fs::path report_summary(LexiconSource s) const;
  fs::path plot(LexiconSource s, PlotKind kind) const;
  fs::path experiment_dir() const { return dir / "experiment"; }
};

void cmd_ingest(const PipelineConfig& cfg);
void cmd_embed(const PipelineConfig& cfg);
void cmd_densify(const PipelineConfig& cfg);
void cmd_pca(const PipelineConfig& cfg);
void cmd_lexicon(const PipelineConfig& cfg);
void cmd_eval(const PipelineConfig& cfg);
void cmd_plot(const PipelineConfig& cfg);
void cmd_experiment(const PipelineConfig& cfg);

}  // namespace densilex::cli
