#include "scamtext_cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scamtext/corpus.hpp"
#include "scamtext/error.hpp"
#include "scamtext/experiment_config.hpp"
#include "scamtext/features.hpp"
#include "scamtext/metrics.hpp"
#include "scamtext/protocol.hpp"
#include "scamtext/results_io.hpp"
#include "scamtext/synthgen.hpp"
#include "scamtext/tables.hpp"

namespace scamtext::cli {

namespace fs = std::filesystem;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_out(const char* fallback) {
  const char* env = std::getenv(kOutEnv);
  return (env && *env) ? std::string(env) : std::string(fallback);
}

std::size_t default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace

struct Cli::State {
  State(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  CLI::App app{"Scam text classification experiments: synthetic corpora, NB/SVM/kNN protocol runs, tables.",
               "scamtext"};

  CLI::App* synth = nullptr;
  CLI::App* run = nullptr;
  CLI::App* eval = nullptr;
  CLI::App* compare = nullptr;
  CLI::App* report = nullptr;
  CLI::App* featurize = nullptr;

  // Shared between subcommands; each subcommand binds its own subset.
  std::string config_path;
  std::string corpus_path;
  std::string corpus_format = "auto";
  std::string out_dir;
  std::string results_dir;
  std::string table_format = "md";
  std::optional<std::uint64_t> seed;
  bool strict = false;
  std::size_t jobs = default_jobs();

  // synth
  std::optional<double> cue_fraction;
  std::optional<std::size_t> en_scam, en_not_scam, pcm_scam, pcm_not_scam;
  std::optional<std::size_t> english_vocab, pidgin_vocab;
  std::vector<std::size_t> english_length, pidgin_length;
  std::optional<double> english_zipf, pidgin_zipf;
  std::optional<std::size_t> opener_length, opener_ranks;

  // eval
  std::string train_path;
  std::string test_path;
  std::string classifier = "svm";
  int ngram = 1;
  std::string curves_dir;

  // compare
  std::string metric = "all";
  std::optional<std::string> samples;
  std::optional<std::string> test_variant;
  std::optional<double> alpha;

  // featurize
  std::string subdataset = "all";
  std::optional<int> ngram_override;
  std::optional<std::size_t> min_df;
  bool no_lowercase = false;
  std::string vocab_dir;
  std::string vectors_dir;

  void build();
  int dispatch();

  int cmd_synth();
  int cmd_run();
  int cmd_eval();
  int cmd_compare();
  int cmd_report();
  int cmd_featurize();

  ExperimentConfig load_config() const;
  LabeledCorpus load(const std::string& path) const;
  void print_tables(const ReportSet& set, const std::string& prefix, bool markdown) const;
};

void Cli::State::build() {
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  auto add_seed = [this](CLI::App* sub, const char* what) {
    sub->add_option("--seed", seed, what);
  };
  auto add_corpus = [this](CLI::App* sub) {
    sub->add_option("--corpus", corpus_path, "Corpus file (JSONL or CSV with id,text,label,lang)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", corpus_format, "Corpus format; auto picks csv for .csv files, jsonl otherwise")
        ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
        ->capture_default_str();
  };
  auto add_config = [this](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment config JSON (defaults apply to missing keys)");
  };
  auto add_table_format = [this](CLI::App* sub) {
    sub->add_option("--format", table_format, "Table rendering: md or csv")
        ->check(CLI::IsMember({"md", "csv"}))
        ->capture_default_str();
  };

  synth = app.add_subcommand("synth", "Generate a synthetic bilingual scam corpus");
  synth->add_option("--config", config_path, "Generator config JSON; flags below override its values");
  synth->add_option("--out", out_dir,
                    std::string("Output directory for corpus.jsonl and corpus.meta.json (default $") + kOutEnv +
                        " or ./synth)");
  add_seed(synth, "Generator seed");
  synth->add_option("--cue-fraction", cue_fraction, "Share of each class's vocabulary exclusive to that class, in [0,1]");
  synth->add_option("--en-scam", en_scam, "English scam documents");
  synth->add_option("--en-not-scam", en_not_scam, "English not_scam documents");
  synth->add_option("--pcm-scam", pcm_scam, "Pidgin scam documents");
  synth->add_option("--pcm-not-scam", pcm_not_scam, "Pidgin not_scam documents");
  synth->add_option("--english-vocab", english_vocab, "English vocabulary size");
  synth->add_option("--pidgin-vocab", pidgin_vocab, "Pidgin vocabulary size");
  synth->add_option("--english-length", english_length, "English document length range in tokens: MIN MAX")
      ->expected(2);
  synth->add_option("--pidgin-length", pidgin_length, "Pidgin document length range in tokens: MIN MAX")
      ->expected(2);
  synth->add_option("--english-zipf", english_zipf, "English offset q in the rank weights 1/(rank+q)");
  synth->add_option("--pidgin-zipf", pidgin_zipf, "Pidgin offset q in the rank weights 1/(rank+q)");
  synth->add_option("--opener-length", opener_length, "Leading tokens drawn from the head words only");
  synth->add_option("--opener-ranks", opener_ranks, "Head words per vocabulary part used for openers");

  run = app.add_subcommand("run", "Run the full repeated hold-out + k-fold protocol and write a results directory");
  add_corpus(run);
  add_config(run);
  run->add_option("--out", out_dir,
                  std::string("Results directory (default $") + kOutEnv + " or ./results)");
  add_seed(run, "Master seed, overrides the config value");
  run->add_flag("--strict", strict, "Exit 4 when any table cell is n/a because a cell failed or a metric is undefined");
  run->add_option("--jobs", jobs, "Worker threads; results do not depend on this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  eval = app.add_subcommand("eval", "Train one classifier on a corpus and evaluate it on another");
  eval->add_option("--train", train_path, "Training corpus file")->required()->check(CLI::ExistingFile);
  eval->add_option("--test", test_path, "Test corpus file")->required()->check(CLI::ExistingFile);
  eval->add_option("--format", corpus_format, "Corpus format for both files: auto, jsonl or csv")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
      ->capture_default_str();
  add_config(eval);
  eval->add_option("--classifier", classifier, "nb, svm or knn")
      ->check(CLI::IsMember({"nb", "svm", "knn"}))
      ->capture_default_str();
  eval->add_option("--ngram", ngram, "N-gram order: 1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  eval->add_option("--curves", curves_dir, "Directory to write roc.csv and pr.csv");

  compare = app.add_subcommand("compare", "Recompute SVM comparison tables from a results directory");
  compare->add_option("--results", results_dir, "Results directory written by run")->required();
  compare->add_option("--metric", metric, "f1, roc_area, pr_area or all")
      ->check(CLI::IsMember({"all", "f1", "roc_area", "pr_area"}))
      ->capture_default_str();
  compare->add_option("--samples", samples, "Significance samples: per-fold or per-run (default: as run)")
      ->check(CLI::IsMember({"per-fold", "per-run"}));
  compare->add_option("--test", test_variant, "t-test variant: paired or corrected (default: as run)")
      ->check(CLI::IsMember({"paired", "corrected"}));
  compare->add_option("--alpha", alpha, "Significance level in (0,1) (default: as run)");
  add_table_format(compare);

  report = app.add_subcommand("report", "Render all tables from a results directory");
  report->add_option("--results", results_dir, "Results directory written by run")->required();
  add_table_format(report);
  report->add_flag("--strict", strict, "Exit 4 when any table cell is n/a");

  featurize = app.add_subcommand("featurize", "Report vocabulary sizes per sub-dataset; optionally dump vocabularies and vectors");
  add_corpus(featurize);
  featurize->add_option("--subdataset", subdataset, "A, B, C, D or all")
      ->check(CLI::IsMember({"all", "A", "B", "C", "D"}))
      ->capture_default_str();
  featurize->add_option("--ngram", ngram_override, "Force n-gram order 1 or 2 instead of the sub-dataset's own")
      ->check(CLI::IsMember({1, 2}));
  featurize->add_option("--min-df", min_df, "Minimum document frequency for a term (default 1)")
      ->check(CLI::PositiveNumber);
  featurize->add_flag("--no-lowercase", no_lowercase, "Keep letter case when preprocessing");
  featurize->add_option("--vocab-dir", vocab_dir, "Write vocab-<SD>.csv (term,index,df) here");
  featurize->add_option("--vectors-dir", vectors_dir, "Write vectors-<SD>.txt (id label index:tfidf ...) here");
}

ExperimentConfig Cli::State::load_config() const {
  ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : experiment_config_from_json(read_text(config_path));
  if (seed) config.seed = *seed;
  config.validate();
  return config;
}

LabeledCorpus Cli::State::load(const std::string& path) const {
  const CorpusFormat fmt = corpus_format == "auto"  ? format_for_path(path)
                           : corpus_format == "csv" ? CorpusFormat::csv
                                                    : CorpusFormat::jsonl;
  auto loaded = load_corpus(path, fmt);
  for (const auto& w : loaded.warnings) err << "warning: " << path << ": " << w << "\n";
  return std::move(loaded.corpus);
}

void Cli::State::print_tables(const ReportSet& set, const std::string& prefix, bool markdown) const {
  bool first = true;
  for (const auto& t : set.tables) {
    if (t.name.rfind(prefix, 0) != 0) continue;
    if (!first) out << "\n";
    first = false;
    if (markdown) {
      out << t.markdown;
    } else {
      out << "# " << t.name << "\n" << t.csv;
    }
  }
}

int Cli::State::cmd_synth() {
  GeneratorConfig config = config_path.empty() ? GeneratorConfig{} : generator_config_from_json(read_text(config_path));
  if (seed) config.seed = *seed;
  if (cue_fraction) config.cue_fraction = *cue_fraction;
  if (en_scam) config.en_scam = *en_scam;
  if (en_not_scam) config.en_not_scam = *en_not_scam;
  if (pcm_scam) config.pcm_scam = *pcm_scam;
  if (pcm_not_scam) config.pcm_not_scam = *pcm_not_scam;
  if (english_vocab) config.english_vocab_size = *english_vocab;
  if (pidgin_vocab) config.pidgin_vocab_size = *pidgin_vocab;
  if (!english_length.empty()) config.english_length = {english_length[0], english_length[1]};
  if (!pidgin_length.empty()) config.pidgin_length = {pidgin_length[0], pidgin_length[1]};
  if (english_zipf) config.english_zipf_offset = *english_zipf;
  if (pidgin_zipf) config.pidgin_zipf_offset = *pidgin_zipf;
  if (opener_length) config.opener_length = *opener_length;
  if (opener_ranks) config.opener_ranks = *opener_ranks;
  config.validate();

  const fs::path dir = out_dir.empty() ? default_out("synth") : out_dir;
  const auto corpus = generate(config);
  write_generated(dir, config, corpus);
  out << "wrote " << corpus.size() << " documents (" << corpus.count(Lang::en) << " en, " << corpus.count(Lang::pcm)
      << " pcm; " << corpus.count(Label::scam) << " scam, " << corpus.count(Label::not_scam) << " not_scam) to "
      << (dir / "corpus.jsonl").string() << "\n";
  return kOk;
}

int Cli::State::cmd_run() {
  const auto config = load_config();
  const auto corpus = load(corpus_path);
  const auto result = run_experiment(config, corpus, jobs);
  const auto tables = emit_tables(result);
  const fs::path dir = out_dir.empty() ? default_out("results") : out_dir;
  write_results(dir, result, tables);

  for (const auto& e : result.events) err << "note: " << e << "\n";
  bool first = true;
  for (const auto& t : tables.tables) {
    if (t.name.find("-scam-class") != std::string::npos) continue;
    if (!first) out << "\n";
    first = false;
    out << t.markdown;
  }
  if (strict && !tables.complete()) {
    err << "error: " << tables.missing.size() << " table cells are n/a (first: "
        << (tables.missing.empty() ? std::string("no tables") : tables.missing.front()) << ")\n";
    return kCellFailure;
  }
  return kOk;
}

int Cli::State::cmd_eval() {
  const auto config = load_config();
  const auto train = load(train_path);
  const auto test = load(test_path);
  const ClassifierKind kind = classifier == "nb" ? ClassifierKind::naive_bayes
                              : classifier == "knn" ? ClassifierKind::knn
                                                    : ClassifierKind::svm;
  const NgramOrder order = ngram == 2 ? NgramOrder::bigram : NgramOrder::unigram;
  ScoredSet scored;
  const auto r = train_and_evaluate(train, test, order, config.features, config.classifier(kind), &scored);

  out << display_name(kind) << ", " << (order == NgramOrder::unigram ? "unigram" : "bigram") << ", "
      << train.size() << " training / " << test.size() << " test documents\n\n";
  out << "| | predicted scam | predicted not_scam |\n|---|---|---|\n";
  out << "| scam | " << r.confusion.s_s << " | " << r.confusion.s_ns << " |\n";
  out << "| not_scam | " << r.confusion.ns_s << " | " << r.confusion.ns_ns << " |\n\n";
  out << "| Class | Precision | Recall | F-Measure | Support |\n|---|---|---|---|---|\n";
  for (const auto& [name, m] : {std::pair<const char*, const ClassMetrics&>{"scam", r.scam}, {"not_scam", r.not_scam}}) {
    out << "| " << name << " | " << format_metric(m.precision, 3) << " | " << format_metric(m.recall, 3) << " | "
        << format_metric(m.f1, 3) << " | " << m.support << " |\n";
  }
  out << "| weighted | " << format_metric(r.weighted.precision, 3) << " | " << format_metric(r.weighted.recall, 3)
      << " | " << format_metric(r.weighted.f1, 3) << " | " << r.confusion.total() << " |\n\n";
  out << "ROC area " << format_metric(r.roc_area, 3) << ", PR area " << format_metric(r.pr_area, 3) << "\n";

  if (!curves_dir.empty()) {
    fs::create_directories(curves_dir);
    std::ofstream roc(fs::path(curves_dir) / "roc.csv", std::ios::binary);
    std::ofstream pr(fs::path(curves_dir) / "pr.csv", std::ios::binary);
    if (!roc || !pr) throw ConfigError("cannot write curves to " + curves_dir);
    write_roc_csv(roc, roc_points(scored.scores, scored.truth));
    write_pr_csv(pr, pr_points(scored.scores, scored.truth));
  }
  return kOk;
}

int Cli::State::cmd_compare() {
  auto result = read_results(results_dir);
  if (samples) result.config.samples = *samples == "per-run" ? SampleMode::per_run : SampleMode::per_fold;
  if (test_variant) result.config.test = *test_variant == "corrected" ? TestVariant::corrected : TestVariant::paired;
  if (alpha) result.config.alpha = *alpha;
  result.config.validate();
  const auto set = emit_tables(result);
  print_tables(set, metric == "all" ? "compare-" : "compare-" + metric, table_format == "md");
  return kOk;
}

int Cli::State::cmd_report() {
  const auto result = read_results(results_dir);
  const auto set = emit_tables(result);
  print_tables(set, "", table_format == "md");
  if (strict && !set.complete()) {
    err << "error: " << set.missing.size() << " table cells are n/a\n";
    return kCellFailure;
  }
  return kOk;
}

int Cli::State::cmd_featurize() {
  const auto corpus = load(corpus_path);
  std::vector<SubDataset> which;
  if (subdataset == "all") {
    which = {SubDataset::A, SubDataset::B, SubDataset::C, SubDataset::D};
  } else {
    which = {*parse_subdataset(subdataset)};
  }
  out << "| Sub-dataset | Language | N-gram | Documents | Words |\n|---|---|---|---|---|\n";
  for (SubDataset sd : which) {
    const auto sel = select_subdataset(corpus, sd);
    const NgramOrder order =
        ngram_override ? (*ngram_override == 2 ? NgramOrder::bigram : NgramOrder::unigram) : sel.order;
    std::vector<std::string> cleaned;
    cleaned.reserve(sel.corpus.size());
    for (const auto& d : sel.corpus) cleaned.push_back(preprocess(d.text, !no_lowercase));
    const auto vocab = build_vocabulary(cleaned, order, min_df.value_or(1));
    const bool mixed = sd == SubDataset::C || sd == SubDataset::D;
    out << "| " << to_string(sd) << " | " << (mixed ? "English & Pidgin" : "English") << " | "
        << (order == NgramOrder::unigram ? "Unigram" : "Bigram") << " | " << sel.corpus.size() << " | "
        << vocab.size() << " |\n";

    const std::string sdname(to_string(sd));
    if (!vocab_dir.empty()) {
      fs::create_directories(vocab_dir);
      std::ofstream f(fs::path(vocab_dir) / ("vocab-" + sdname + ".csv"), std::ios::binary);
      if (!f) throw ConfigError("cannot write to " + vocab_dir);
      vocab.write_csv(f);
    }
    if (!vectors_dir.empty()) {
      fs::create_directories(vectors_dir);
      std::ofstream f(fs::path(vectors_dir) / ("vectors-" + sdname + ".txt"), std::ios::binary);
      if (!f) throw ConfigError("cannot write to " + vectors_dir);
      char buf[64];
      for (std::size_t i = 0; i < cleaned.size(); ++i) {
        f << sel.corpus[i].id << ' ' << to_string(sel.corpus[i].label);
        for (const auto& e : vectorize(cleaned[i], vocab).entries()) {
          std::snprintf(buf, sizeof buf, " %u:%.17g", e.index, e.weight);
          f << buf;
        }
        f << '\n';
      }
    }
  }
  return kOk;
}

int Cli::State::dispatch() {
  if (synth->parsed()) return cmd_synth();
  if (run->parsed()) return cmd_run();
  if (eval->parsed()) return cmd_eval();
  if (compare->parsed()) return cmd_compare();
  if (report->parsed()) return cmd_report();
  if (featurize->parsed()) return cmd_featurize();
  return kBadConfig;
}

Cli::Cli(std::ostream& out, std::ostream& err) : state_(std::make_unique<State>(out, err)) { state_->build(); }

Cli::~Cli() = default;

CLI::App& Cli::app() { return state_->app; }

int Cli::run(int argc, const char* const* argv) {
  auto& s = *state_;
  try {
    s.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = s.app.exit(e, s.out, s.err);
    return code == 0 ? kOk : kBadConfig;
  }
  try {
    return s.dispatch();
  } catch (const Error& e) {
    s.err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::config: return kBadConfig;
      case ErrorKind::corpus: return kBadCorpus;
      case ErrorKind::cell: return kCellFailure;
    }
    return kInternal;
  } catch (const fs::filesystem_error& e) {
    s.err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    s.err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace scamtext::cli
