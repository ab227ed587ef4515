#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "densilex/embedding.hpp"

namespace densilex {

enum class Polarity { Positive, Negative };

std::optional<Polarity> parse_polarity(std::string_view label);

// Labeled seed words. The last holdout_fraction of each list (rounded
// down) is held out from training.
struct SeedLexicon {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  double holdout_fraction = 0.0;

  // Throws InvalidArgument when a list is empty, the lists overlap, the
  // fraction is outside [0,1), or fewer than 2 words per polarity would
  // remain for training.
  void validate() const;

  SeedLexicon train_part() const;
  SeedLexicon holdout_part() const;

  // First n words of each training list; throws InvalidArgument when a
  // polarity has fewer than n.
  SeedLexicon truncated(std::size_t n) const;
};

// `word<TAB>label` lines with label pos|neg; '#' comments and blank lines
// are ignored.
SeedLexicon parse_seed_tsv(std::string_view bytes);
// One word per line in each file.
SeedLexicon parse_seed_lists(std::string_view positive_bytes,
                             std::string_view negative_bytes);

using WordPair = std::pair<std::string, std::string>;

struct SeedPairs {
  std::vector<WordPair> same;  // unordered pairs within each polarity
  std::vector<WordPair> diff;  // positive x negative
};

// Throws InvalidArgument with fewer than 2 words per polarity.
SeedPairs make_pairs(const SeedLexicon& train_seeds);

// s = q.(e_w - e_v); Same -> |s|, Different -> -|s|.
double pair_loss(std::span<const double> q, std::span<const double> e_w,
                 std::span<const double> e_v, PairKind kind);

// d pair_loss / dq, using sign(0) = 0.
Eigen::VectorXd pair_loss_subgradient(std::span<const double> q,
                                      std::span<const double> e_w,
                                      std::span<const double> e_v,
                                      PairKind kind);

struct LossValue {
  double loss = 0.0;
  double sloss = 0.0;
  double dloss = 0.0;
};

// SLoss and DLoss are means over their pair lists (an empty list gives
// 0); Loss = (1 - alpha) SLoss + alpha DLoss. Throws NotFoundError naming
// the first word missing from the table.
LossValue combined_loss(std::span<const double> q, const SeedPairs& pairs,
                        double alpha, const EmbeddingTable& table);

// Square matrix with orthonormal rows. Row 0 is the sentiment axis.
class OrthogonalTransform {
 public:
  OrthogonalTransform() = default;
  explicit OrthogonalTransform(Eigen::MatrixXd q) : q_(std::move(q)) {}

  const Eigen::MatrixXd& matrix() const { return q_; }
  std::size_t dim() const { return static_cast<std::size_t>(q_.rows()); }
  Eigen::VectorXd axis() const { return q_.row(0).transpose(); }

  // max |Q^T Q - I|
  double orthogonality_error() const;
  void flip_axis() { q_.row(0) *= -1.0; }

 private:
  Eigen::MatrixXd q_;
};

// Nearest orthogonal matrix in Frobenius norm: M = U S V^T -> U V^T.
// Throws InvalidArgument for non-square or rank-deficient input.
OrthogonalTransform orthogonalize(const Eigen::MatrixXd& m);

struct DensifierConfig {
  double alpha = 0.5;
  int epochs = 10;
  int batch_size = 1;
  double lr = 5e-3;
  double final_lr_fraction = 0.1;  // linear decay to lr * this
  int reorthogonalize_every = 1;   // batches
  std::uint64_t rng_seed = 1;

  void validate() const;
};

struct LossRecord {
  int epoch = 0;
  double sloss = 0.0;
  double dloss = 0.0;
  double loss = 0.0;
};

using LossTrace = std::vector<LossRecord>;

struct DensifierResult {
  OrthogonalTransform transform;
  LossRecord initial;  // epoch 0, before the first step
  LossTrace trace;     // one record per epoch, evaluated on all pairs
};

// Subgradient descent on combined_loss with respect to row 0 of Q over
// shuffled mini-batches of same/diff pairs, with Q projected back to the
// orthogonal group every reorthogonalize_every batches and at the end.
// The axis is finally oriented so train positives outscore train
// negatives on average. `initial` overrides the seeded random start.
// Throws NotFoundError listing missing seed words, TrainingError on
// identical seed embeddings or a non-finite loss.
DensifierResult train_densifier(
    const EmbeddingTable& table, const SeedLexicon& seeds,
    const DensifierConfig& cfg,
    const std::optional<Eigen::MatrixXd>& initial = std::nullopt);

// q . e_word. Throws NotFoundError.
double sentiment_score(const OrthogonalTransform& transform,
                       const EmbeddingTable& table, std::string_view word);

// "epoch\tsloss\tdloss\tloss" header plus one row per record.
std::string format_loss_trace(const LossTrace& trace);

}  // namespace densilex
