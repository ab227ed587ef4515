// densilex: sentiment lexicon induction from word embeddings.
//
//   densilex ingest     --corpus comments.csv --out run/
//   densilex embed      --out run/
//   densilex densify    --seeds seeds.tsv --out run/
//   densilex pca        --out run/
//   densilex lexicon    --method densifier|pca --out run/
//   densilex eval       --labels labels.tsv --method ... --out run/
//   densilex plot       --method ... --out run/
//   densilex experiment --seeds seeds.tsv --sizes 5 10 15 --out run/
//
// Every flag can also be given in a key=value file passed with --config;
// flags on the command line win.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "densilex/util.hpp"
#include "pipeline.hpp"

using densilex::cli::PipelineConfig;

int main(int argc, char** argv) {
  CLI::App app{"Induce a 1-D sentiment lexicon from word embeddings"};
  app.set_config("--config", "", "key=value config file");
  app.require_subcommand(1, 1);
  app.fallthrough();

  PipelineConfig cfg;
  std::string corpus, seeds, pos_seeds, neg_seeds, labels, reference, vectors;
  std::string out_dir = cfg.out_dir.string();
  std::string tokenizer = "pretokenized";
  std::string method = "densifier";
  std::vector<std::string> plot_kinds{"scatter-jitter", "value-curve", "sorted-curve"};
  bool subsample = false;

  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", cfg.rng_seed, "Root random seed")->capture_default_str();

  auto* g_in = "Inputs";
  app.add_option("--corpus", corpus, "Comment CSV (ingest)")->group(g_in);
  app.add_option("--seeds", seeds, "Seed TSV: word<TAB>pos|neg")->group(g_in);
  app.add_option("--pos-seeds", pos_seeds, "Positive seeds, one per line")->group(g_in);
  app.add_option("--neg-seeds", neg_seeds, "Negative seeds, one per line")->group(g_in);
  app.add_option("--labels", labels, "Evaluation labels TSV")->group(g_in);
  app.add_option("--reference", reference, "Reference lexicon TSV for kendall tau")->group(g_in);
  app.add_option("--vectors", vectors, "Use this .vec instead of <out>/embeddings.vec")->group(g_in);

  auto* g_corpus = "Corpus";
  app.add_option("--col-nickname", cfg.schema.nickname)->group(g_corpus)->capture_default_str();
  app.add_option("--col-age", cfg.schema.age)->group(g_corpus)->capture_default_str();
  app.add_option("--col-gender", cfg.schema.gender)->group(g_corpus)->capture_default_str();
  app.add_option("--col-likes", cfg.schema.likes)->group(g_corpus)->capture_default_str();
  app.add_option("--col-text", cfg.schema.text)->group(g_corpus)->capture_default_str();
  app.add_option("--tokenizer", tokenizer)
      ->check(CLI::IsMember({"pretokenized", "cjk-chars"}))
      ->group(g_corpus)->capture_default_str();
  app.add_option("--top-words", cfg.high_frequency_words,
                 "High-frequency set size for the co-occurrence rate")
      ->group(g_corpus)->capture_default_str();

  auto* g_sgns = "Embedding";
  app.add_option("--dim", cfg.sgns.dim)->group(g_sgns)->capture_default_str();
  app.add_option("--window", cfg.sgns.window)->group(g_sgns)->capture_default_str();
  app.add_option("--negatives", cfg.sgns.negatives)->group(g_sgns)->capture_default_str();
  app.add_option("--min-count", cfg.sgns.min_count)->group(g_sgns)->capture_default_str();
  app.add_option("--sgns-epochs", cfg.sgns.epochs)->group(g_sgns)->capture_default_str();
  app.add_option("--sgns-lr", cfg.sgns.initial_lr)->group(g_sgns)->capture_default_str();
  app.add_flag("--subsample", subsample, "Subsample frequent words (t=1e-4)")->group(g_sgns);
  app.add_option("--workers", cfg.sgns.workers, "Hogwild threads; 1 is deterministic")
      ->group(g_sgns)->capture_default_str();

  auto* g_dens = "Densifier";
  app.add_option("--alpha", cfg.densifier.alpha, "Weight of DLoss")->group(g_dens)->capture_default_str();
  app.add_option("--densifier-epochs", cfg.densifier.epochs)->group(g_dens)->capture_default_str();
  app.add_option("--batch-size", cfg.densifier.batch_size)->group(g_dens)->capture_default_str();
  app.add_option("--densifier-lr", cfg.densifier.lr)->group(g_dens)->capture_default_str();
  app.add_option("--reorth-every", cfg.densifier.reorthogonalize_every)->group(g_dens)->capture_default_str();
  app.add_option("--holdout-fraction", cfg.holdout_fraction)->group(g_dens)->capture_default_str();

  auto* g_eval = "Lexicon";
  app.add_option("--method", method)->check(CLI::IsMember({"densifier", "pca"}))
      ->group(g_eval)->capture_default_str();
  app.add_option("--k", cfg.k, "precision@k; 0 disables")->group(g_eval)->capture_default_str();
  app.add_option("--plot-kinds", plot_kinds)
      ->check(CLI::IsMember({"scatter-jitter", "value-curve", "sorted-curve"}))
      ->group(g_eval)->capture_default_str();
  app.add_option("--sizes", cfg.sizes, "Seed sizes for experiment")->group(g_eval)->capture_default_str();

  using Command = void (*)(const PipelineConfig&);
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"ingest", {"Parse comments, write tokens and frequency table", densilex::cli::cmd_ingest}},
      {"embed", {"Train skip-gram embeddings, write embeddings.vec", densilex::cli::cmd_embed}},
      {"densify", {"Train the orthogonal sentiment transform", densilex::cli::cmd_densify}},
      {"pca", {"Fit the first principal component baseline", densilex::cli::cmd_pca}},
      {"lexicon", {"Score and sort the vocabulary", densilex::cli::cmd_lexicon}},
      {"eval", {"Evaluate a lexicon against labels", densilex::cli::cmd_eval}},
      {"plot", {"Emit plot-ready TSV data", densilex::cli::cmd_plot}},
      {"experiment", {"Seed-size study over --sizes", densilex::cli::cmd_experiment}},
  };
  for (const auto& [name, entry] : commands) app.add_subcommand(name, entry.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.corpus = corpus;
  cfg.seeds = seeds;
  cfg.pos_seeds = pos_seeds;
  cfg.neg_seeds = neg_seeds;
  cfg.labels = labels;
  cfg.reference = reference;
  cfg.vectors = vectors;
  cfg.out_dir = out_dir;
  cfg.tokenizer = *densilex::parse_tokenizer_mode(tokenizer);
  cfg.method = *densilex::parse_lexicon_source(method);
  cfg.plot_kinds.clear();
  for (const auto& k : plot_kinds) cfg.plot_kinds.push_back(*densilex::parse_plot_kind(k));
  if (subsample) cfg.sgns.subsample = densilex::kDefaultSubsampleThreshold;
  cfg.derive_stage_seeds();

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    commands.at(name).second(cfg);
  } catch (const std::exception& e) {
    std::cerr << "densilex " << name << ": error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
