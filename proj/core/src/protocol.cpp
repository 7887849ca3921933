#include "scamtext/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "scamtext/error.hpp"
#include "scamtext/features.hpp"
#include "scamtext/rng.hpp"
#include "scamtext/stats.hpp"

namespace scamtext {

std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t k, std::uint64_t seed,
                                                    std::span<const Label> stratify_labels) {
  if (k < 2) throw ConfigError("k-fold needs k >= 2");
  if (k > n) throw ConfigError("k-fold needs k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  if (!stratify_labels.empty() && stratify_labels.size() != n)
    throw std::invalid_argument("kfold_indices: label count differs from n");

  SplitMix64 rng(seed);
  // Dealing order: each class shuffled separately and laid end to end, so
  // position p goes to fold p mod k and every class is spread evenly.
  std::vector<std::size_t> order;
  order.reserve(n);
  if (stratify_labels.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(std::span<std::size_t>(order), rng);
  } else {
    for (Label cls : {Label::scam, Label::not_scam}) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (stratify_labels[i] == cls) members.push_back(i);
      shuffle(std::span<std::size_t>(members), rng);
      order.insert(order.end(), members.begin(), members.end());
    }
  }
  std::vector<std::vector<std::size_t>> folds(k);
  for (std::size_t p = 0; p < order.size(); ++p) folds[p % k].push_back(order[p]);
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

std::string_view to_string(MetricId metric) noexcept {
  switch (metric) {
    case MetricId::f1: return "f1";
    case MetricId::roc_area: return "roc_area";
    case MetricId::pr_area: return "pr_area";
  }
  return "?";
}

Metric headline(const EvalReport& report, MetricId metric) noexcept {
  switch (metric) {
    case MetricId::f1: return report.weighted.f1;
    case MetricId::roc_area: return report.roc_area;
    case MetricId::pr_area: return report.pr_area;
  }
  return std::nullopt;
}

namespace {

struct Features {
  std::vector<SparseVector> train_tfidf;
  std::vector<SparseVector> test_tfidf;
  std::vector<SparseVector> train_counts;
  std::vector<SparseVector> test_counts;
  std::vector<Label> train_y;
  std::vector<Label> test_y;
};

Features featurize(std::span<const std::string> cleaned, std::span<const Label> labels,
                   std::span<const std::size_t> train_idx, std::span<const std::size_t> test_idx, NgramOrder order,
                   const FeatureOptions& opts, bool need_counts) {
  std::vector<std::string> train_text;
  train_text.reserve(train_idx.size());
  for (auto i : train_idx) train_text.push_back(cleaned[i]);
  const Vocabulary vocab = build_vocabulary(train_text, order, opts.min_df);

  Features f;
  auto fill = [&](std::span<const std::size_t> idx, std::vector<SparseVector>& tfidf,
                  std::vector<SparseVector>& counts, std::vector<Label>& y) {
    for (auto i : idx) {
      auto v = vectorize(cleaned[i], vocab);
      tfidf.push_back(opts.l2_normalize ? v.l2_normalized() : std::move(v));
      if (need_counts) counts.push_back(count_vectorize(cleaned[i], vocab));
      y.push_back(labels[i]);
    }
  };
  fill(train_idx, f.train_tfidf, f.train_counts, f.train_y);
  fill(test_idx, f.test_tfidf, f.test_counts, f.test_y);
  return f;
}

bool wants_counts(const ClassifierConfig& c) {
  const auto* nb = std::get_if<NaiveBayesParams>(&c);
  return nb != nullptr && !nb->tfidf_input;
}

EvalReport fit_and_score(const ClassifierConfig& config, const Features& f, ScoredSet* scored) {
  const bool counts = wants_counts(config);
  const auto& Xtr = counts ? f.train_counts : f.train_tfidf;
  const auto& Xte = counts ? f.test_counts : f.test_tfidf;
  TrainedModel model;
  try {
    if (const auto* svm = std::get_if<SvmParams>(&config)) {
      auto trained = train_svm(Xtr, f.train_y, *svm);
      if (!trained.model.converged())
        throw CellFailure("SVM did not converge within " + std::to_string(trained.iterations) +
                          " iterations (max violation " + std::to_string(trained.max_violation) + ")");
      model = std::move(trained.model);
    } else {
      model = train(config, Xtr, f.train_y);
    }
  } catch (const std::invalid_argument& e) {
    throw CellFailure(std::string("training failed: ") + e.what());
  }
  const ClassifierKind kind = kind_of(config);
  ScoredSet local;
  ScoredSet& out = scored ? *scored : local;
  out = ScoredSet{};
  for (std::size_t i = 0; i < Xte.size(); ++i) {
    const double s = score(model, Xte[i]);
    out.scores.push_back(s);
    out.predicted.push_back(label_for(kind, s));
    out.truth.push_back(f.test_y[i]);
  }
  return evaluate(out.scores, out.predicted, out.truth);
}

std::vector<std::string> clean_all(const LabeledCorpus& corpus, bool lowercase) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (const auto& d : corpus) out.push_back(preprocess(d.text, lowercase));
  return out;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> excluded_sorted) {
  std::vector<std::size_t> out;
  out.reserve(n - excluded_sorted.size());
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (e < excluded_sorted.size() && excluded_sorted[e] == i) {
      ++e;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace

EvalReport train_and_evaluate(const LabeledCorpus& train, const LabeledCorpus& test, NgramOrder order,
                              const FeatureOptions& features, const ClassifierConfig& classifier, ScoredSet* scored) {
  auto cleaned = clean_all(train, features.lowercase);
  auto test_clean = clean_all(test, features.lowercase);
  std::vector<Label> labels = train.labels();
  const auto test_labels = test.labels();
  std::vector<std::size_t> train_idx(train.size());
  std::iota(train_idx.begin(), train_idx.end(), std::size_t{0});
  std::vector<std::size_t> test_idx(test.size());
  std::iota(test_idx.begin(), test_idx.end(), train.size());
  cleaned.insert(cleaned.end(), std::make_move_iterator(test_clean.begin()), std::make_move_iterator(test_clean.end()));
  labels.insert(labels.end(), test_labels.begin(), test_labels.end());
  const auto f = featurize(cleaned, labels, train_idx, test_idx, order, features, wants_counts(classifier));
  return fit_and_score(classifier, f, scored);
}

std::vector<EvalReport> cross_validate(const LabeledCorpus& corpus, NgramOrder order, const FeatureOptions& features,
                                       const ClassifierConfig& classifier, std::size_t k, std::uint64_t seed,
                                       bool stratified) {
  const auto cleaned = clean_all(corpus, features.lowercase);
  const auto labels = corpus.labels();
  const auto folds = kfold_indices(corpus.size(), k, seed, stratified ? std::span<const Label>(labels) : std::span<const Label>());
  std::vector<EvalReport> reports;
  reports.reserve(k);
  for (const auto& test_idx : folds) {
    const auto train_idx = complement(corpus.size(), test_idx);
    const auto f = featurize(cleaned, labels, train_idx, test_idx, order, features, wants_counts(classifier));
    reports.push_back(fit_and_score(classifier, f, nullptr));
  }
  return reports;
}

std::uint64_t run_seed(std::uint64_t master, std::size_t run) noexcept { return derive_seed(master, run); }

std::uint64_t split_seed(std::uint64_t master, std::size_t run, SubDataset sd) noexcept {
  return derive_seed(run_seed(master, run), 0x5D00 + static_cast<std::uint64_t>(sd));
}

std::uint64_t fold_seed(std::uint64_t split, std::size_t attempt) noexcept { return derive_seed(split, 0xF000 + attempt); }

namespace {

struct PreparedSubDataset {
  SubDataset id;
  NgramOrder order;
  std::vector<std::string> cleaned;
  std::vector<Label> labels;
};

struct CellOutput {
  RunRecord record;
  std::vector<std::string> events;
};

std::string cell_name(SubDataset sd, std::size_t run, ClassifierKind kind) {
  return "SD " + std::string(to_string(sd)) + ", run " + std::to_string(run) + ", " + std::string(display_name(kind));
}

CellOutput run_cell(const ExperimentConfig& config, const PreparedSubDataset& sd, std::size_t run) {
  CellOutput out;
  RunRecord& rec = out.record;
  rec.run = run;
  rec.split_seed = split_seed(config.seed, run, sd.id);

  const auto split = split_indices(sd.labels, config.test_fraction, rec.split_seed, config.stratified);
  std::vector<Label> train_labels;
  for (auto i : split.train) train_labels.push_back(sd.labels[i]);

  for (std::size_t attempt = 0;; ++attempt) {
    rec.fold_seed = fold_seed(rec.split_seed, attempt);
    rec.fold_attempts = attempt + 1;
    for (auto& c : rec.cells) {
      c.folds.clear();
      c.failure.reset();
    }
    const auto folds = kfold_indices(split.train.size(), config.folds, rec.fold_seed,
                                     config.stratified ? std::span<const Label>(train_labels) : std::span<const Label>());
    for (std::size_t f = 0; f < folds.size(); ++f) {
      // Fold positions refer to the training portion; map back to sub-dataset rows.
      std::vector<std::size_t> test_idx;
      for (auto p : folds[f]) test_idx.push_back(split.train[p]);
      std::vector<std::size_t> train_idx;
      for (auto p : complement(split.train.size(), folds[f])) train_idx.push_back(split.train[p]);
      const auto features =
          featurize(sd.cleaned, sd.labels, train_idx, test_idx, sd.order, config.features, !config.nb.tfidf_input);
      for (ClassifierKind kind : kAllClassifiers) {
        auto& cell = rec.cell(kind);
        if (cell.failure) continue;
        try {
          cell.folds.push_back(fit_and_score(config.classifier(kind), features, nullptr));
        } catch (const CellFailure& e) {
          cell.failure = "fold " + std::to_string(f + 1) + ": " + e.what();
          cell.folds.clear();
        }
      }
    }
    std::vector<std::string> undefined;
    for (ClassifierKind kind : kAllClassifiers) {
      const auto& cell = rec.cell(kind);
      if (cell.failure) continue;
      for (std::size_t f = 0; f < cell.folds.size(); ++f) {
        for (MetricId m : kComparedMetrics) {
          if (!headline(cell.folds[f], m)) {
            undefined.push_back(std::string(display_name(kind)) + " fold " + std::to_string(f + 1) + " " +
                                std::string(to_string(m)));
          }
        }
      }
    }
    if (undefined.empty()) break;
    std::string what;
    for (const auto& u : undefined) what += (what.empty() ? "" : "; ") + u;
    if (attempt >= config.max_fold_reseeds) {
      for (ClassifierKind kind : kAllClassifiers) {
        auto& cell = rec.cell(kind);
        if (cell.failure) continue;
        for (const auto& r : cell.folds) {
          if (!headline(r, MetricId::f1) || !r.roc_area || !r.pr_area) {
            cell.failure = "undefined headline metric after " + std::to_string(attempt + 1) + " fold draws";
            break;
          }
        }
      }
      out.events.push_back("SD " + std::string(to_string(sd.id)) + ", run " + std::to_string(run) +
                           ": undefined metrics persisted after " + std::to_string(attempt + 1) +
                           " fold draws (" + what + ")");
      break;
    }
    out.events.push_back("SD " + std::string(to_string(sd.id)) + ", run " + std::to_string(run) +
                         ": undefined metrics (" + what + "); re-drawing folds with seed attempt " +
                         std::to_string(attempt + 1));
  }

  const auto holdout = featurize(sd.cleaned, sd.labels, split.train, split.test, sd.order, config.features,
                                 !config.nb.tfidf_input);
  for (ClassifierKind kind : kAllClassifiers) {
    auto& cell = rec.cell(kind);
    try {
      cell.holdout = fit_and_score(config.classifier(kind), holdout, &cell.holdout_scores);
    } catch (const CellFailure& e) {
      if (!cell.failure) cell.failure = std::string("hold-out: ") + e.what();
    }
  }
  for (ClassifierKind kind : kAllClassifiers) {
    if (const auto& f = rec.cell(kind).failure) out.events.push_back(cell_name(sd.id, run, kind) + " failed: " + *f);
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, const LabeledCorpus& corpus, std::size_t jobs) {
  config.validate();
  ExperimentResult result;
  result.config = config;
  result.corpus_provenance = corpus.provenance();
  result.corpus_size = corpus.size();

  std::vector<PreparedSubDataset> prepared;
  for (SubDataset id : config.subdatasets) {
    auto sel = select_subdataset(corpus, id);
    PreparedSubDataset p{id, sel.order, clean_all(sel.corpus, config.features.lowercase), sel.corpus.labels()};
    SubDatasetResult r;
    r.id = id;
    r.order = sel.order;
    r.n_docs = sel.corpus.size();
    const auto probe = split_indices(p.labels, config.test_fraction, 0, config.stratified);
    r.n_train = probe.train.size();
    r.n_test = probe.test.size();
    if (r.n_train < config.folds)
      throw CorpusError("sub-dataset " + std::string(to_string(id)) + " has " + std::to_string(r.n_train) +
                        " training documents, fewer than " + std::to_string(config.folds) + " folds");
    r.runs.resize(config.runs);
    result.subdatasets.push_back(std::move(r));
    prepared.push_back(std::move(p));
  }

  const std::size_t n_tasks = prepared.size() * config.runs;
  std::vector<CellOutput> outputs(n_tasks);
  std::vector<std::exception_ptr> errors(n_tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < n_tasks; t = next++) {
      try {
        outputs[t] = run_cell(config, prepared[t / config.runs], t % config.runs + 1);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n_tasks, 1));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t t = 0; t < n_tasks; ++t) {
    result.subdatasets[t / config.runs].runs[t % config.runs] = std::move(outputs[t].record);
    for (auto& e : outputs[t].events) result.events.push_back(std::move(e));
  }
  return result;
}

std::optional<std::vector<double>> significance_samples(const SubDatasetResult& sd, ClassifierKind kind,
                                                        MetricId metric, SampleMode mode) {
  std::vector<double> out;
  for (const auto& run : sd.runs) {
    const auto& cell = run.cell(kind);
    if (cell.failure || cell.folds.empty()) return std::nullopt;
    std::vector<double> values;
    for (const auto& r : cell.folds) {
      const auto v = headline(r, metric);
      if (!v) return std::nullopt;
      values.push_back(*v);
    }
    if (mode == SampleMode::per_fold) {
      out.insert(out.end(), values.begin(), values.end());
    } else {
      out.push_back(mean(values));
    }
  }
  return out;
}

Verdict verdict(double svm_mean, double other_mean, double p, double alpha) noexcept {
  if (p < alpha && svm_mean > other_mean) return Verdict::accept;
  if (p < alpha && svm_mean < other_mean) return Verdict::reject;
  return Verdict::not_reject;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::accept: return "Accept";
    case Verdict::reject: return "Reject";
    case Verdict::not_reject: return "Not Reject";
  }
  return "?";
}

std::optional<ComparisonResult> compare_with_svm(const SubDatasetResult& sd, MetricId metric, ClassifierKind other,
                                                 const ExperimentConfig& config) {
  const auto a = significance_samples(sd, ClassifierKind::svm, metric, config.samples);
  const auto b = significance_samples(sd, other, metric, config.samples);
  if (!a || !b || a->size() != b->size() || a->size() < 2) return std::nullopt;
  ComparisonResult c;
  c.subdataset = sd.id;
  c.metric = metric;
  c.other = other;
  c.n = a->size();
  c.svm_mean = mean(*a);
  c.svm_std = sample_sd(*a);
  c.other_mean = mean(*b);
  c.other_std = sample_sd(*b);
  const auto t = config.test == TestVariant::paired
                     ? paired_t_test(*a, *b)
                     : corrected_paired_t_test(*a, *b, 1.0 / static_cast<double>(config.folds - 1));
  c.t = t.t;
  c.p = t.p;
  c.verdict = verdict(c.svm_mean, c.other_mean, c.p, config.alpha);
  return c;
}

}  // namespace scamtext
