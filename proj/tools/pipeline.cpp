#include "pipeline.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>

#include "densilex/embedding.hpp"
#include "densilex/matrix_io.hpp"
#include "densilex/pca.hpp"
#include "densilex/util.hpp"

namespace densilex::cli {

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
  std::cerr << "wrote " << path.string() << "\n";
}

void require_input(const fs::path& path, const std::string& flag) {
  if (path.empty()) throw Error("missing required input: " + flag);
  if (!fs::exists(path)) throw Error(flag + " file does not exist: " + path.string());
}

// An artifact produced by an earlier subcommand.
void require_artifact(const fs::path& path, std::string_view producer) {
  if (!fs::exists(path)) {
    throw Error("missing " + path.string() + "; run `densilex " +
                std::string(producer) + "` first");
  }
}

EmbeddingTable load_vectors(const PipelineConfig& cfg) {
  fs::path path = cfg.vectors;
  if (path.empty()) {
    path = Artifacts{cfg.out_dir}.embeddings();
    require_artifact(path, "embed");
  } else {
    require_input(path, "--vectors");
  }
  return load_word2vec_text(read_file(path));
}

SeedLexicon load_seeds(const PipelineConfig& cfg) {
  SeedLexicon seeds;
  if (!cfg.seeds.empty()) {
    require_input(cfg.seeds, "--seeds");
    seeds = parse_seed_tsv(read_file(cfg.seeds));
  } else if (!cfg.pos_seeds.empty() || !cfg.neg_seeds.empty()) {
    require_input(cfg.pos_seeds, "--pos-seeds");
    require_input(cfg.neg_seeds, "--neg-seeds");
    seeds = parse_seed_lists(read_file(cfg.pos_seeds), read_file(cfg.neg_seeds));
  } else {
    throw Error("no seed words: pass --seeds or --pos-seeds/--neg-seeds");
  }
  seeds.holdout_fraction = cfg.holdout_fraction;
  seeds.validate();
  return seeds;
}

LabelMap load_labels(const PipelineConfig& cfg) {
  require_input(cfg.labels, "--labels");
  SeedLexicon labeled = parse_seed_tsv(read_file(cfg.labels));
  return labels_from_seeds(labeled);
}

SentimentLexicon load_lexicon(const PipelineConfig& cfg, const EmbeddingTable* vocab) {
  const fs::path path = Artifacts{cfg.out_dir}.lexicon(cfg.method);
  require_artifact(path, "lexicon --method " + std::string(to_string(cfg.method)));
  return parse_lexicon_tsv(read_file(path), cfg.method, vocab);
}

std::uint64_t plot_seed(const PipelineConfig& cfg) {
  return derive_seed(cfg.rng_seed, "plot");
}

void write_plots(const fs::path& dir, const std::string& prefix,
                 const SentimentLexicon& lex, const PipelineConfig& cfg) {
  for (auto kind : cfg.plot_kinds) {
    write_file(dir / (prefix + std::string(to_string(kind)) + ".tsv"),
               emit_plot_data(lex, kind, plot_seed(cfg)));
  }
}

}  // namespace

void PipelineConfig::derive_stage_seeds() {
  sgns.rng_seed = derive_seed(rng_seed, "embed");
  densifier.rng_seed = derive_seed(rng_seed, "densify");
}

fs::path Artifacts::lexicon(LexiconSource s) const {
  return dir / ("lexicon." + std::string(to_string(s)) + ".tsv");
}
fs::path Artifacts::report(LexiconSource s) const {
  return dir / ("report." + std::string(to_string(s)) + ".txt");
}
fs::path Artifacts::report_summary(LexiconSource s) const {
  return dir / ("report." + std::string(to_string(s)) + ".tsv");
}
fs::path Artifacts::plot(LexiconSource s, PlotKind kind) const {
  return dir / ("plot." + std::string(to_string(s)) + "." +
                std::string(to_string(kind)) + ".tsv");
}

void cmd_ingest(const PipelineConfig& cfg) {
  require_input(cfg.corpus, "--corpus");
  const Artifacts a{cfg.out_dir};
  const auto records = parse_comments(read_file(cfg.corpus), cfg.schema);
  const TokenizedCorpus corpus = tokenize_comments(records, cfg.tokenizer);

  std::string stats = "records=" + std::to_string(records.size()) + "\n" +
                      "documents=" + std::to_string(corpus.size()) + "\n" +
                      "tokens=" + std::to_string(corpus.token_count()) + "\n";
  std::string freq_tsv;
  if (!corpus.empty()) {
    const FrequencyTable freq = build_frequency_table(corpus);
    freq_tsv = format_frequency_tsv(freq);
    const auto top = freq.top(cfg.high_frequency_words);
    const std::set<std::string> hi(top.begin(), top.end());
    stats += "vocabulary=" + std::to_string(freq.size()) + "\n";
    stats += "max_count=" + std::to_string(freq.max_count()) + "\n";
    stats += "high_frequency_words=" + std::to_string(hi.size()) + "\n";
    stats += "cooccurrence_pair_rate=" +
             format_double(cooccurrence_pair_rate(corpus, hi)) + "\n";
  } else {
    stats += "vocabulary=0\n";
  }
  write_file(a.tokens(), format_token_file(corpus));
  write_file(a.frequency(), freq_tsv);
  write_file(a.corpus_stats(), stats);
}

void cmd_embed(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  require_artifact(a.tokens(), "ingest");
  const TokenizedCorpus corpus = parse_token_file(read_file(a.tokens()));
  const EmbeddingTable table = train_sgns(corpus, cfg.sgns);
  write_file(a.embeddings(), format_word2vec_text(table));
}

void cmd_densify(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const EmbeddingTable table = load_vectors(cfg);
  const SeedLexicon seeds = load_seeds(cfg);
  const DensifierResult result = train_densifier(table, seeds, cfg.densifier);
  write_file(a.transform(), format_transform(result.transform));
  write_file(a.loss(), format_loss_trace(result.trace));
}

void cmd_pca(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const EmbeddingTable table = load_vectors(cfg);
  write_file(a.pca(), format_pca_axis(fit_pca1(table)));
}

void cmd_lexicon(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const EmbeddingTable table = load_vectors(cfg);
  LinearScorer scorer;
  LexiconMetadata meta;
  if (cfg.method == LexiconSource::Densifier) {
    require_artifact(a.transform(), "densify");
    scorer = LinearScorer::from(parse_transform(read_file(a.transform())));
    meta.alpha = cfg.densifier.alpha;
    meta.rng_seed = cfg.densifier.rng_seed;
  } else {
    require_artifact(a.pca(), "pca");
    scorer = LinearScorer::from(parse_pca_axis(read_file(a.pca())));
  }
  write_file(a.lexicon(cfg.method), format_lexicon_tsv(build_lexicon(scorer, table, meta)));
}

void cmd_eval(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const LabelMap labels = load_labels(cfg);
  const SentimentLexicon lex = load_lexicon(cfg, nullptr);
  std::vector<std::string> reference;
  if (!cfg.reference.empty()) {
    require_input(cfg.reference, "--reference");
    for (const auto& e : parse_lexicon_tsv(read_file(cfg.reference), cfg.method).entries) {
      reference.push_back(e.word);
    }
  }
  const EvalReport report =
      evaluate(lex, labels, cfg.k, cfg.reference.empty() ? nullptr : &reference);
  write_file(a.report(cfg.method), format_report(report));
  write_file(a.report_summary(cfg.method),
             report_summary_header() + report_summary_row(to_string(cfg.method), report));
}

void cmd_plot(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const EmbeddingTable table = load_vectors(cfg);
  SentimentLexicon lex = load_lexicon(cfg, &table);
  if (cfg.method == LexiconSource::Densifier) {
    lex.metadata.alpha = cfg.densifier.alpha;
    lex.metadata.rng_seed = cfg.densifier.rng_seed;
  }
  for (auto kind : cfg.plot_kinds) {
    write_file(a.plot(cfg.method, kind), emit_plot_data(lex, kind, plot_seed(cfg)));
  }
}

void cmd_experiment(const PipelineConfig& cfg) {
  const Artifacts a{cfg.out_dir};
  const EmbeddingTable table = load_vectors(cfg);
  const SeedLexicon seeds = load_seeds(cfg);
  LabelMap labels;
  if (!cfg.labels.empty()) labels = load_labels(cfg);
  const std::size_t k = cfg.labels.empty() ? 0 : cfg.k;

  const auto runs = seed_size_experiment(table, seeds, cfg.sizes, cfg.densifier,
                                         cfg.labels.empty() ? nullptr : &labels, k);
  const fs::path root = a.experiment_dir();
  for (const auto& run : runs) {
    const fs::path dir = root / ("seeds_" + std::to_string(run.seed_size));
    write_file(dir / "lexicon.tsv", format_lexicon_tsv(run.lexicon));
    write_file(dir / "report.txt", format_report(run.report));
    write_file(dir / "loss.tsv", format_loss_trace(run.training.trace));
    write_file(dir / "densifier.q", format_transform(run.training.transform));
    write_plots(dir, "plot.", run.lexicon, cfg);
  }
  write_file(root / "summary.tsv", format_experiment_summary(runs));
}

}  // namespace densilex::cli
