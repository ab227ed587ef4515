#include "densilex/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <unordered_map>

#include "densilex/util.hpp"

namespace densilex {

std::string_view to_string(LexiconSource source) {
  return source == LexiconSource::Densifier ? "densifier" : "pca";
}

std::optional<LexiconSource> parse_lexicon_source(std::string_view name) {
  if (name == "densifier") return LexiconSource::Densifier;
  if (name == "pca") return LexiconSource::Pca;
  return std::nullopt;
}

LinearScorer LinearScorer::from(const OrthogonalTransform& transform) {
  return {transform.axis(), Eigen::VectorXd(), LexiconSource::Densifier};
}

LinearScorer LinearScorer::from(const PcaAxis& pca) {
  return {pca.axis, pca.mean, LexiconSource::Pca};
}

namespace {

void sort_and_rank(std::vector<LexiconEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

}  // namespace

SentimentLexicon build_lexicon(const LinearScorer& scorer,
                               const EmbeddingTable& table,
                               LexiconMetadata metadata) {
  if (static_cast<std::size_t>(scorer.axis.size()) != table.dim()) {
    throw InvalidArgument("build_lexicon: scorer and table dimensions differ");
  }
  std::vector<double> scores(table.size());
  kernels::omp::project(
      table.vectors(),
      {scorer.axis.data(), static_cast<std::size_t>(scorer.axis.size())},
      {scorer.offset.data(), static_cast<std::size_t>(scorer.offset.size())},
      scores);

  SentimentLexicon lex;
  lex.source = scorer.source;
  lex.metadata = metadata;
  lex.entries.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    lex.entries.push_back({table.vocab()[i], scores[i], 0, i});
  }
  sort_and_rank(lex.entries);
  return lex;
}

std::string format_lexicon_tsv(const SentimentLexicon& lex) {
  std::string out;
  for (const auto& e : lex.entries) {
    out += std::to_string(e.rank) + "\t" + e.word + "\t" + format_double(e.score) + "\n";
  }
  return out;
}

SentimentLexicon parse_lexicon_tsv(std::string_view bytes, LexiconSource source,
                                   const EmbeddingTable* vocab) {
  SentimentLexicon lex;
  lex.source = source;
  std::size_t line_no = 0;
  for (auto line : split(bytes, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto f = split(line, '\t');
    if (f.size() != 3) throw ParseError("expected 'rank<TAB>word<TAB>score'", line_no);
    std::size_t rank = 0;
    auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), rank);
    if (ec != std::errc() || ptr != f[0].data() + f[0].size() ||
        rank != lex.entries.size() + 1) {
      throw ParseError("ranks must run 1..n in order", line_no);
    }
    LexiconEntry e;
    e.rank = rank;
    e.word = std::string(f[1]);
    e.score = parse_double(f[2], line_no);
    if (!lex.entries.empty() && e.score > lex.entries.back().score) {
      throw ParseError("scores must be non-increasing by rank", line_no);
    }
    e.vocab_index = vocab ? vocab->index(e.word) : rank - 1;
    lex.entries.push_back(std::move(e));
  }
  return lex;
}

LabelMap labels_from_seeds(const SeedLexicon& seeds) {
  LabelMap labels;
  for (const auto& w : seeds.positive) labels[w] = Polarity::Positive;
  for (const auto& w : seeds.negative) labels[w] = Polarity::Negative;
  return labels;
}

std::optional<double> kendall_tau_a(std::span<const double> x,
                                    std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("kendall_tau_a: length mismatch");
  if (x.size() < 2) return std::nullopt;
  const KendallCounts k = kernels::omp::kendall_counts(x, y);
  return static_cast<double>(k.concordant - k.discordant) / static_cast<double>(k.pairs);
}

EvalReport evaluate(const SentimentLexicon& lex, const LabelMap& labels,
                    std::size_t k, const std::vector<std::string>* reference) {
  if (labels.empty()) throw InvalidArgument("evaluate: no labels supplied");
  if (lex.empty()) throw InvalidArgument("evaluate: empty lexicon");

  EvalReport r;
  r.max_score = lex.entries.front().score;
  r.min_score = lex.entries.back().score;
  r.span = r.max_score - r.min_score;

  std::vector<Polarity> labeled;  // in rank order
  std::optional<double> min_pos;
  std::optional<double> max_neg;
  for (const auto& e : lex.entries) {
    auto it = labels.find(e.word);
    if (it == labels.end()) continue;
    labeled.push_back(it->second);
    if (it->second == Polarity::Positive) {
      ++r.labeled_positive;
      min_pos = e.score;  // entries descend, so the last one seen is the min
    } else {
      ++r.labeled_negative;
      if (!max_neg) max_neg = e.score;
    }
  }
  if (labeled.empty()) {
    throw InvalidArgument("evaluate: no labeled word appears in the lexicon");
  }
  if (min_pos && max_neg) r.holdout_margin = *min_pos - *max_neg;

  r.k = k;
  if (k > 0) {
    if (k > r.labeled_positive || k > r.labeled_negative) {
      throw InvalidArgument("evaluate: k=" + std::to_string(k) +
                            " exceeds labeled words found (" +
                            std::to_string(r.labeled_positive) + " positive, " +
                            std::to_string(r.labeled_negative) + " negative)");
    }
    auto hits = [&](auto first, Polarity want) {
      std::size_t n = 0;
      for (std::size_t i = 0; i < k; ++i, ++first) n += *first == want;
      return static_cast<double>(n) / static_cast<double>(k);
    };
    r.precision_at_k_positive = hits(labeled.begin(), Polarity::Positive);
    r.precision_at_k_negative = hits(labeled.rbegin(), Polarity::Negative);
  }

  if (reference) {
    std::unordered_map<std::string, double> ref_score;
    for (std::size_t i = 0; i < reference->size(); ++i) {
      ref_score.emplace((*reference)[i], -static_cast<double>(i));
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& e : lex.entries) {
      auto it = ref_score.find(e.word);
      if (it == ref_score.end()) continue;
      x.push_back(e.score);
      y.push_back(it->second);
    }
    r.kendall_tau = kendall_tau_a(x, y);
  }
  return r;
}

std::string format_report(const EvalReport& r) {
  std::string out;
  out += "# kendall_tau is tau-a; tied pairs contribute 0\n";
  out += "max_score=" + format_double(r.max_score) + "\n";
  out += "min_score=" + format_double(r.min_score) + "\n";
  out += "span=" + format_double(r.span) + "\n";
  out += "labeled_positive=" + std::to_string(r.labeled_positive) + "\n";
  out += "labeled_negative=" + std::to_string(r.labeled_negative) + "\n";
  if (r.holdout_margin) out += "holdout_margin=" + format_double(*r.holdout_margin) + "\n";
  if (r.k > 0) {
    out += "k=" + std::to_string(r.k) + "\n";
    out += "precision_at_k_positive=" + format_double(*r.precision_at_k_positive) + "\n";
    out += "precision_at_k_negative=" + format_double(*r.precision_at_k_negative) + "\n";
  }
  if (r.kendall_tau) out += "kendall_tau=" + format_double(*r.kendall_tau) + "\n";
  return out;
}

std::string report_summary_header() {
  return "name\tmax_score\tmin_score\tspan\tholdout_margin\tprecision_at_k_positive"
         "\tprecision_at_k_negative\tkendall_tau\n";
}

std::string report_summary_row(std::string_view name, const EvalReport& r) {
  return std::string(name) + "\t" + format_double(r.max_score) + "\t" +
         format_double(r.min_score) + "\t" + format_double(r.span) + "\t" +
         optional_field(r.holdout_margin) + "\t" +
         optional_field(r.precision_at_k_positive) + "\t" +
         optional_field(r.precision_at_k_negative) + "\t" +
         optional_field(r.kendall_tau) + "\n";
}

std::vector<ExperimentRun> seed_size_experiment(
    const EmbeddingTable& table, const SeedLexicon& full_seeds,
    const std::vector<std::size_t>& sizes, const DensifierConfig& cfg,
    const LabelMap* labels, std::size_t k) {
  std::vector<ExperimentRun> runs;
  if (sizes.empty()) return runs;
  full_seeds.validate();
  const SeedLexicon train = full_seeds.train_part();
  // Check every size before spending time on training.
  for (auto s : sizes) (void)train.truncated(s);

  const LabelMap default_labels = labels_from_seeds(full_seeds);
  const LabelMap& eval_labels = labels ? *labels : default_labels;
  for (auto s : sizes) {
    ExperimentRun run;
    run.seed_size = s;
    run.training = train_densifier(table, train.truncated(s), cfg);
    run.lexicon = build_lexicon(LinearScorer::from(run.training.transform), table,
                                {s, cfg.alpha, cfg.rng_seed});
    run.report = evaluate(run.lexicon, eval_labels, k);
    runs.push_back(std::move(run));
  }
  return runs;
}

std::string format_experiment_summary(const std::vector<ExperimentRun>& runs) {
  std::string out = "seed_size\t" + report_summary_header().substr(5);
  out.insert(out.find('\n'), "\tfinal_loss");
  for (const auto& run : runs) {
    std::string row = report_summary_row(std::to_string(run.seed_size), run.report);
    row.pop_back();
    row += "\t" + (run.training.trace.empty()
                       ? std::string("NA")
                       : format_double(run.training.trace.back().loss)) + "\n";
    out += row;
  }
  return out;
}

std::string_view to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::ScatterJitter: return "scatter-jitter";
    case PlotKind::ValueCurve: return "value-curve";
    case PlotKind::SortedCurve: return "sorted-curve";
  }
  return "unknown";
}

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  if (name == "scatter-jitter") return PlotKind::ScatterJitter;
  if (name == "value-curve") return PlotKind::ValueCurve;
  if (name == "sorted-curve") return PlotKind::SortedCurve;
  return std::nullopt;
}

std::string emit_plot_data(const SentimentLexicon& lex, PlotKind kind,
                           std::uint64_t rng_seed) {
  if (lex.empty()) throw InvalidArgument("emit_plot_data: empty lexicon");

  std::string config = "kind=" + std::string(to_string(kind)) +
                       " source=" + std::string(to_string(lex.source));
  if (lex.metadata.seed_size) config += " seed_size=" + std::to_string(*lex.metadata.seed_size);
  if (lex.metadata.alpha) config += " alpha=" + format_double(*lex.metadata.alpha);
  if (lex.metadata.rng_seed) config += " train_seed=" + std::to_string(*lex.metadata.rng_seed);

  std::string out;
  switch (kind) {
    case PlotKind::ScatterJitter: {
      out = "# word\tx\ty | x=score y=uniform integer jitter in [-100,100] " + config +
            " jitter_seed=" + std::to_string(rng_seed) + "\n";
      std::mt19937_64 rng(derive_seed(rng_seed, "plot/jitter"));
      std::uniform_int_distribution<int> jitter(-kJitterBound, kJitterBound);
      for (const auto& e : lex.entries) {
        out += e.word + "\t" + format_double(e.score) + "\t" +
               std::to_string(jitter(rng)) + "\n";
      }
      break;
    }
    case PlotKind::ValueCurve: {
      out = "# index\tscore | index=vocabulary position " + config + "\n";
      std::vector<const LexiconEntry*> by_index;
      by_index.reserve(lex.size());
      for (const auto& e : lex.entries) by_index.push_back(&e);
      std::sort(by_index.begin(), by_index.end(),
                [](auto* a, auto* b) { return a->vocab_index < b->vocab_index; });
      for (const auto* e : by_index) {
        out += std::to_string(e->vocab_index) + "\t" + format_double(e->score) + "\n";
      }
      break;
    }
    case PlotKind::SortedCurve: {
      out = "# rank\tscore | sorted descending " + config + "\n";
      for (const auto& e : lex.entries) {
        out += std::to_string(e.rank) + "\t" + format_double(e.score) + "\n";
      }
      break;
    }
  }
  return out;
}

}  // namespace densilex
