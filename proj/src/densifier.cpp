#include "densilex/densifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "densilex/util.hpp"

namespace densilex {

std::optional<Polarity> parse_polarity(std::string_view label) {
  label = trim(label);
  if (label == "pos" || label == "positive" || label == "+") return Polarity::Positive;
  if (label == "neg" || label == "negative" || label == "-") return Polarity::Negative;
  return std::nullopt;
}

namespace {

std::size_t holdout_count(std::size_t n, double fraction) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * fraction));
}

std::vector<std::string> head(const std::vector<std::string>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

std::vector<std::string> tail_from(const std::vector<std::string>& v, std::size_t n) {
  return {v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size())), v.end()};
}

}  // namespace

void SeedLexicon::validate() const {
  if (positive.empty() || negative.empty()) {
    throw InvalidArgument("seed lexicon needs positive and negative words");
  }
  if (!(holdout_fraction >= 0.0 && holdout_fraction < 1.0)) {
    throw InvalidArgument("holdout_fraction must be in [0, 1)");
  }
  std::set<std::string> pos(positive.begin(), positive.end());
  if (pos.size() != positive.size()) throw InvalidArgument("duplicate positive seed");
  std::set<std::string> neg(negative.begin(), negative.end());
  if (neg.size() != negative.size()) throw InvalidArgument("duplicate negative seed");
  for (const auto& w : negative) {
    if (pos.contains(w)) {
      throw InvalidArgument("seed word is both positive and negative: " + w);
    }
  }
  if (positive.size() - holdout_count(positive.size(), holdout_fraction) < 2 ||
      negative.size() - holdout_count(negative.size(), holdout_fraction) < 2) {
    throw InvalidArgument("need at least 2 training seeds per polarity");
  }
}

SeedLexicon SeedLexicon::train_part() const {
  SeedLexicon out;
  out.positive = head(positive, positive.size() - holdout_count(positive.size(), holdout_fraction));
  out.negative = head(negative, negative.size() - holdout_count(negative.size(), holdout_fraction));
  return out;
}

SeedLexicon SeedLexicon::holdout_part() const {
  SeedLexicon out;
  out.positive = tail_from(positive, positive.size() - holdout_count(positive.size(), holdout_fraction));
  out.negative = tail_from(negative, negative.size() - holdout_count(negative.size(), holdout_fraction));
  return out;
}

SeedLexicon SeedLexicon::truncated(std::size_t n) const {
  if (positive.size() < n || negative.size() < n) {
    throw InvalidArgument("seed size " + std::to_string(n) + " exceeds supply (" +
                          std::to_string(positive.size()) + " positive, " +
                          std::to_string(negative.size()) + " negative)");
  }
  SeedLexicon out;
  out.positive = head(positive, n);
  out.negative = head(negative, n);
  return out;
}

SeedLexicon parse_seed_tsv(std::string_view bytes) {
  SeedLexicon seeds;
  std::size_t line_no = 0;
  for (auto line : split(bytes, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError("expected 'word<TAB>label'", line_no);
    }
    auto word = trim(fields[0]);
    auto polarity = parse_polarity(fields[1]);
    if (word.empty() || !polarity) {
      throw ParseError("bad seed line, label must be pos or neg", line_no);
    }
    (*polarity == Polarity::Positive ? seeds.positive : seeds.negative)
        .emplace_back(word);
  }
  return seeds;
}

SeedLexicon parse_seed_lists(std::string_view positive_bytes,
                             std::string_view negative_bytes) {
  SeedLexicon seeds;
  for (auto w : split_whitespace(positive_bytes)) seeds.positive.emplace_back(w);
  for (auto w : split_whitespace(negative_bytes)) seeds.negative.emplace_back(w);
  return seeds;
}

SeedPairs make_pairs(const SeedLexicon& train_seeds) {
  const auto& pos = train_seeds.positive;
  const auto& neg = train_seeds.negative;
  if (pos.size() < 2 || neg.size() < 2) {
    throw InvalidArgument("make_pairs needs at least 2 words per polarity");
  }
  SeedPairs pairs;
  for (const auto* list : {&pos, &neg}) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      for (std::size_t j = i + 1; j < list->size(); ++j) {
        pairs.same.emplace_back((*list)[i], (*list)[j]);
      }
    }
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) pairs.diff.emplace_back(p, n);
  }
  return pairs;
}

namespace {

void check_dims(std::span<const double> q, std::span<const double> a,
                std::span<const double> b) {
  if (a.size() != q.size() || b.size() != q.size()) {
    throw InvalidArgument("pair_loss: dimension mismatch");
  }
}

double projected_difference(std::span<const double> q, std::span<const double> a,
                            std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) s += q[j] * (a[j] - b[j]);
  return s;
}

double sign(double x) { return static_cast<double>((x > 0) - (x < 0)); }

std::vector<IndexPair> resolve(const std::vector<WordPair>& pairs,
                               const EmbeddingTable& table) {
  std::vector<IndexPair> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.push_back({table.index(a), table.index(b)});
  return out;
}

LossValue loss_from_indices(std::span<const double> q,
                            const std::vector<IndexPair>& same,
                            const std::vector<IndexPair>& diff, double alpha,
                            const RowMatrix& vectors) {
  LossValue v;
  if (!same.empty()) {
    v.sloss = kernels::omp::pair_loss_sum(vectors, q, same, PairKind::Same) /
              static_cast<double>(same.size());
  }
  if (!diff.empty()) {
    v.dloss = kernels::omp::pair_loss_sum(vectors, q, diff, PairKind::Different) /
              static_cast<double>(diff.size());
  }
  v.loss = (1.0 - alpha) * v.sloss + alpha * v.dloss;
  return v;
}

}  // namespace

double pair_loss(std::span<const double> q, std::span<const double> e_w,
                 std::span<const double> e_v, PairKind kind) {
  check_dims(q, e_w, e_v);
  const double s = std::abs(projected_difference(q, e_w, e_v));
  return kind == PairKind::Same ? s : -s;
}

Eigen::VectorXd pair_loss_subgradient(std::span<const double> q,
                                      std::span<const double> e_w,
                                      std::span<const double> e_v,
                                      PairKind kind) {
  check_dims(q, e_w, e_v);
  const double sg = sign(projected_difference(q, e_w, e_v)) *
                    (kind == PairKind::Same ? 1.0 : -1.0);
  Eigen::VectorXd g(static_cast<Eigen::Index>(q.size()));
  for (std::size_t j = 0; j < q.size(); ++j) {
    g[static_cast<Eigen::Index>(j)] = sg * (e_w[j] - e_v[j]);
  }
  return g;
}

LossValue combined_loss(std::span<const double> q, const SeedPairs& pairs,
                        double alpha, const EmbeddingTable& table) {
  if (q.size() != table.dim()) throw InvalidArgument("combined_loss: dimension mismatch");
  return loss_from_indices(q, resolve(pairs.same, table), resolve(pairs.diff, table),
                           alpha, table.vectors());
}

double OrthogonalTransform::orthogonality_error() const {
  const auto n = q_.rows();
  return (q_.transpose() * q_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

OrthogonalTransform orthogonalize(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument("orthogonalize: matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw InvalidArgument("orthogonalize: non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = sv[0] * static_cast<double>(m.rows()) *
                     std::numeric_limits<double>::epsilon();
  if (sv[0] == 0.0 || sv[sv.size() - 1] <= tol) {
    throw InvalidArgument("orthogonalize: matrix is rank deficient");
  }
  return OrthogonalTransform(svd.matrixU() * svd.matrixV().transpose());
}

void DensifierConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("densifier: alpha must be in [0, 1]");
  if (epochs < 1) throw InvalidArgument("densifier: epochs must be positive");
  if (batch_size < 1) throw InvalidArgument("densifier: batch_size must be positive");
  if (!(lr > 0.0)) throw InvalidArgument("densifier: lr must be positive");
  if (!(final_lr_fraction > 0.0 && final_lr_fraction <= 1.0)) {
    throw InvalidArgument("densifier: final_lr_fraction must be in (0, 1]");
  }
  if (reorthogonalize_every < 1) {
    throw InvalidArgument("densifier: reorthogonalize_every must be positive");
  }
}

namespace {

struct TaggedPair {
  IndexPair pair;
  PairKind kind;
};

void require_finite(const LossValue& v, int epoch) {
  if (!std::isfinite(v.loss) || !std::isfinite(v.sloss) || !std::isfinite(v.dloss)) {
    throw TrainingError("densifier: loss became non-finite at epoch " +
                        std::to_string(epoch) + "; try a smaller lr");
  }
}

}  // namespace

DensifierResult train_densifier(const EmbeddingTable& table,
                                const SeedLexicon& seeds,
                                const DensifierConfig& cfg,
                                const std::optional<Eigen::MatrixXd>& initial) {
  cfg.validate();
  seeds.validate();
  const auto dim = static_cast<Eigen::Index>(table.dim());
  if (dim < 2) throw InvalidArgument("densifier: embedding dim must be >= 2");

  const SeedLexicon train = seeds.train_part();
  std::string missing;
  for (const auto* list : {&train.positive, &train.negative}) {
    for (const auto& w : *list) {
      if (!table.find(w)) missing += (missing.empty() ? "" : ", ") + w;
    }
  }
  if (!missing.empty()) {
    throw NotFoundError("seed words missing from vocabulary: " + missing);
  }

  const SeedPairs pairs = make_pairs(train);
  const auto same = resolve(pairs.same, table);
  const auto diff = resolve(pairs.diff, table);
  const RowMatrix& vectors = table.vectors();

  {
    const auto first = vectors.row(static_cast<Eigen::Index>(table.index(train.positive[0])));
    bool all_same = true;
    for (const auto* list : {&train.positive, &train.negative}) {
      for (const auto& w : *list) {
        all_same = all_same &&
                   vectors.row(static_cast<Eigen::Index>(table.index(w))) == first;
      }
    }
    if (all_same) {
      throw TrainingError("densifier: all seed embeddings are identical");
    }
  }

  OrthogonalTransform q;
  if (initial) {
    if (initial->rows() != dim || initial->cols() != dim) {
      throw InvalidArgument("densifier: initial transform has the wrong shape");
    }
    q = orthogonalize(*initial);
  } else {
    std::mt19937_64 init_rng(derive_seed(cfg.rng_seed, "densifier/init"));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gauss(init_rng);
    q = orthogonalize(m);
  }
  Eigen::MatrixXd work = q.matrix();

  Eigen::VectorXd row0;
  auto current_loss = [&] {
    row0 = work.row(0).transpose();
    return loss_from_indices({row0.data(), static_cast<std::size_t>(dim)}, same,
                             diff, cfg.alpha, vectors);
  };

  DensifierResult result;
  {
    LossValue v = current_loss();
    require_finite(v, 0);
    result.initial = {0, v.sloss, v.dloss, v.loss};
  }

  std::vector<TaggedPair> order;
  order.reserve(same.size() + diff.size());
  for (const auto& p : same) order.push_back({p, PairKind::Same});
  for (const auto& p : diff) order.push_back({p, PairKind::Different});

  const std::size_t batch = static_cast<std::size_t>(cfg.batch_size);
  const std::size_t batches_per_epoch = (order.size() + batch - 1) / batch;
  const std::size_t total_steps = batches_per_epoch * static_cast<std::size_t>(cfg.epochs);
  std::mt19937_64 shuffle_rng(derive_seed(cfg.rng_seed, "densifier/shuffle"));

  Eigen::VectorXd grad_same(dim);
  Eigen::VectorXd grad_diff(dim);
  std::size_t step = 0;
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    for (std::size_t b = 0; b < order.size(); b += batch, ++step) {
      const double progress =
          total_steps > 1 ? static_cast<double>(step) / static_cast<double>(total_steps - 1) : 0.0;
      const double lr = cfg.lr * (1.0 - (1.0 - cfg.final_lr_fraction) * progress);

      grad_same.setZero();
      grad_diff.setZero();
      std::size_t n_same = 0;
      std::size_t n_diff = 0;
      row0 = work.row(0).transpose();
      const std::span<const double> qspan(row0.data(), static_cast<std::size_t>(dim));
      for (std::size_t i = b; i < std::min(order.size(), b + batch); ++i) {
        const auto& tp = order[i];
        const auto e_w = table.row(tp.pair.first);
        const auto e_v = table.row(tp.pair.second);
        if (tp.kind == PairKind::Same) {
          grad_same += pair_loss_subgradient(qspan, e_w, e_v, PairKind::Same);
          ++n_same;
        } else {
          grad_diff += pair_loss_subgradient(qspan, e_w, e_v, PairKind::Different);
          ++n_diff;
        }
      }
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
      if (n_same) grad += (1.0 - cfg.alpha) / static_cast<double>(n_same) * grad_same;
      if (n_diff) grad += cfg.alpha / static_cast<double>(n_diff) * grad_diff;
      work.row(0) -= lr * grad.transpose();

      if ((step + 1) % static_cast<std::size_t>(cfg.reorthogonalize_every) == 0) {
        work = orthogonalize(work).matrix();
      }
    }
    LossValue v = current_loss();
    require_finite(v, epoch);
    result.trace.push_back({epoch, v.sloss, v.dloss, v.loss});
  }

  OrthogonalTransform final_q = orthogonalize(work);
  Eigen::VectorXd q_axis = final_q.axis();
  auto mean_score = [&](const std::vector<std::string>& words) {
    double s = 0.0;
    for (const auto& w : words) s += kernels::dot({q_axis.data(), static_cast<std::size_t>(q_axis.size())}, table.lookup(w));
    return s / static_cast<double>(words.size());
  };
  const double pos_mean = mean_score(train.positive);
  const double neg_mean = mean_score(train.negative);
  if (pos_mean == neg_mean) {
    throw TrainingError("densifier: trained axis does not separate the seed polarities");
  }
  if (pos_mean < neg_mean) final_q.flip_axis();
  result.transform = std::move(final_q);
  return result;
}

double sentiment_score(const OrthogonalTransform& transform,
                       const EmbeddingTable& table, std::string_view word) {
  if (transform.dim() != table.dim()) {
    throw InvalidArgument("sentiment_score: dimension mismatch");
  }
  const Eigen::VectorXd q = transform.axis();
  return kernels::dot({q.data(), static_cast<std::size_t>(q.size())}, table.lookup(word));
}

std::string format_loss_trace(const LossTrace& trace) {
  std::string out = "epoch\tsloss\tdloss\tloss\n";
  for (const auto& r : trace) {
    out += std::to_string(r.epoch) + "\t" + format_double(r.sloss) + "\t" +
           format_double(r.dloss) + "\t" + format_double(r.loss) + "\n";
  }
  return out;
}

}  // namespace densilex
