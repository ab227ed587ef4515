#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "densilex/densifier.hpp"
#include "densilex/pca.hpp"

namespace densilex {

enum class LexiconSource { Densifier, Pca };

std::string_view to_string(LexiconSource source);
std::optional<LexiconSource> parse_lexicon_source(std::string_view name);

// score(e) = axis . (e - offset). Both backends reduce to this form.
struct LinearScorer {
  Eigen::VectorXd axis;
  Eigen::VectorXd offset;  // empty for the densifier
  LexiconSource source = LexiconSource::Densifier;

  static LinearScorer from(const OrthogonalTransform& transform);
  static LinearScorer from(const PcaAxis& pca);
};

struct LexiconEntry {
  std::string word;
  double score = 0.0;
  std::size_t rank = 0;         // 1-based
  std::size_t vocab_index = 0;  // row in the embedding table
};

struct LexiconMetadata {
  std::optional<std::size_t> seed_size;
  std::optional<double> alpha;
  std::optional<std::uint64_t> rng_seed;
};

// Entries sorted by score descending, ties by word; ranks 1..n.
struct SentimentLexicon {
  std::vector<LexiconEntry> entries;
  LexiconSource source = LexiconSource::Densifier;
  LexiconMetadata metadata;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

// Scores every vocabulary word. Throws InvalidArgument on a dim mismatch.
SentimentLexicon build_lexicon(const LinearScorer& scorer,
                               const EmbeddingTable& table,
                               LexiconMetadata metadata = {});

// `rank<TAB>word<TAB>score` per line.
std::string format_lexicon_tsv(const SentimentLexicon& lex);
// vocab_index is recovered from `vocab` when given, else set to rank - 1.
SentimentLexicon parse_lexicon_tsv(std::string_view bytes,
                                   LexiconSource source,
                                   const EmbeddingTable* vocab = nullptr);

using LabelMap = std::map<std::string, Polarity>;

LabelMap labels_from_seeds(const SeedLexicon& seeds);

struct EvalReport {
  double max_score = 0.0;
  double min_score = 0.0;
  double span = 0.0;
  std::size_t labeled_positive = 0;  // labeled words found in the lexicon
  std::size_t labeled_negative = 0;
  std::optional<double> holdout_margin;  // min pos - max neg
  std::size_t k = 0;
  std::optional<double> precision_at_k_positive;
  std::optional<double> precision_at_k_negative;
  std::optional<double> kendall_tau;
};

// precision@k(pos): fraction positive among the first k labeled words met
// walking down from the top; precision@k(neg) walks up from the bottom.
// k == 0 skips precision. kendall_tau is tau-a against `reference`
// (best-first word list) over the words both share; ties count 0.
// Throws InvalidArgument when no labeled word is in the lexicon or when k
// exceeds the labeled words found for a polarity.
EvalReport evaluate(const SentimentLexicon& lex, const LabelMap& labels,
                    std::size_t k,
                    const std::vector<std::string>* reference = nullptr);

// tau-a over paired observations; ties contribute 0. Returns nullopt for
// fewer than 2 observations.
std::optional<double> kendall_tau_a(std::span<const double> x,
                                    std::span<const double> y);

// key=value lines, absent optionals omitted.
std::string format_report(const EvalReport& report);
std::string report_summary_header();
std::string report_summary_row(std::string_view name, const EvalReport& r);

struct ExperimentRun {
  std::size_t seed_size = 0;
  SentimentLexicon lexicon;
  EvalReport report;
  DensifierResult training;
};

// For each size s: truncate both training lists to their first s words,
// train a fresh densifier with the same config, build the lexicon and
// evaluate it against `labels` (the full seed set when null).
std::vector<ExperimentRun> seed_size_experiment(
    const EmbeddingTable& table, const SeedLexicon& full_seeds,
    const std::vector<std::size_t>& sizes, const DensifierConfig& cfg,
    const LabelMap* labels = nullptr, std::size_t k = 0);

std::string format_experiment_summary(const std::vector<ExperimentRun>& runs);

enum class PlotKind { ScatterJitter, ValueCurve, SortedCurve };

std::string_view to_string(PlotKind kind);
std::optional<PlotKind> parse_plot_kind(std::string_view name);

inline constexpr int kJitterBound = 100;

// TSV with a single '#' header line naming the columns and the config.
//   scatter-jitter: word, x = score, y = uniform integer in [-100, 100]
//   value-curve:    index (vocabulary order), score
//   sorted-curve:   rank, score
// Throws InvalidArgument on an empty lexicon.
std::string emit_plot_data(const SentimentLexicon& lex, PlotKind kind,
                           std::uint64_t rng_seed);

}  // namespace densilex
