// One line per acceptance criterion: PASS or FAIL, what was measured, and
// how long it took. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scamtext/metrics.hpp"
#include "scamtext/naive_bayes.hpp"
#include "scamtext/protocol.hpp"
#include "scamtext/rng.hpp"
#include "scamtext/stats.hpp"
#include "scamtext/svm.hpp"
#include "scamtext/synthgen.hpp"
#include "scamtext/tables.hpp"
#include "scamtext_cli/app.hpp"

namespace fs = std::filesystem;
using namespace scamtext;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scamtext");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  scamtext::cli::Cli app(out, err);
  const int code = app.run(static_cast<int>(argv.size()), argv.data());
  return {code, out.str(), err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr Label S = Label::scam;
constexpr Label N = Label::not_scam;

// 1 -------------------------------------------------------------------------

Outcome metric_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(101);
  double worst = 0.0;
  int mismatched_definedness = 0;
  for (int i = 0; i < 1000; ++i) {
    // Small counts on a quarter of the draws so zero denominators occur.
    const std::uint64_t cap = i % 4 == 0 ? 3 : 1000;
    const ConfusionMatrix m{rng.uniform_below(cap), rng.uniform_below(cap), rng.uniform_below(cap),
                            rng.uniform_below(cap)};
    const double tp = double(m.s_s), fn = double(m.s_ns), fp = double(m.ns_s);
    const std::optional<double> r = tp + fn > 0 ? std::optional(tp / (tp + fn)) : std::nullopt;
    const std::optional<double> p = tp + fp > 0 ? std::optional(tp / (tp + fp)) : std::nullopt;
    std::optional<double> f;
    if (r && p && *r + *p > 0) f = 2 * *p * *r / (*p + *r);
    for (auto [got, want] : {std::pair{recall(m), r}, std::pair{precision(m), p}, std::pair{f1(m), f}}) {
      if (got.has_value() != want.has_value()) {
        ++mismatched_definedness;
      } else if (got) {
        worst = std::max(worst, std::abs(*got - *want));
      }
    }
  }
  const ConfusionMatrix ex{8, 2, 1, 0};
  const std::string worked =
      format_metric(recall(ex), 4) + "/" + format_metric(precision(ex), 4) + "/" + format_metric(f1(ex), 4);
  const double dt = seconds_since(t0);
  const bool pass = worst <= 1e-12 && mismatched_definedness == 0 && worked == "0.8000/0.8889/0.8421" && dt < 1.0;
  return {pass, fmt("1000 fuzzed matrices, max |err| %.1e, definedness mismatches %d; (8,2,1) -> %s; %.3f s "
                    "(limit 1 s)",
                    worst, mismatched_definedness, worked.c_str(), dt)};
}

// 2 -------------------------------------------------------------------------

struct CurveTally {
  std::size_t cases = 0;
  std::size_t roc_mismatch = 0;
  double ap_worst = 0.0;
  std::size_t definedness = 0;

  void check(const std::vector<double>& scores, const std::vector<Label>& truth) {
    ++cases;
    const auto roc = roc_area(scores, truth);
    const auto roc_ref = oracle::roc_pairs(scores, truth);
    if (roc != roc_ref) ++roc_mismatch;
    const auto ap = pr_area(scores, truth);
    const auto ap_ref = oracle::ap_sweep(scores, truth);
    if (ap.has_value() != ap_ref.has_value()) {
      ++definedness;
    } else if (ap) {
      ap_worst = std::max(ap_worst, std::abs(*ap - *ap_ref));
    }
  }
};

Outcome curve_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  CurveTally tally;
  // Exhaustive: every labelling and every score vector over {0..n-1}, which
  // realises every ranking with ties of n items.
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t score_codes = 1;
    for (std::size_t i = 0; i < n; ++i) score_codes *= n;
    std::vector<double> scores(n);
    std::vector<Label> truth(n);
    for (std::size_t code = 0; code < score_codes; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= n) scores[i] = double(c % n);
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) truth[i] = (mask >> i) & 1 ? S : N;
        tally.check(scores, truth);
      }
    }
  }
  const std::size_t exhaustive = tally.cases;
  SplitMix64 rng(202);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.uniform_below(8);
    std::vector<double> scores(n);
    std::vector<Label> truth(n);
    const bool coarse = trial % 2 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = coarse ? double(rng.uniform_below(3)) : rng.uniform01() * 2 - 1;
      truth[i] = Label(rng.uniform_below(2));
    }
    tally.check(scores, truth);
  }
  const double dt = seconds_since(t0);
  const bool pass = tally.roc_mismatch == 0 && tally.definedness == 0 && tally.ap_worst <= 1e-12 && dt < 10.0;
  return {pass, fmt("%zu exhaustive + %zu fuzzed sets (n <= 8): ROC exact mismatches %zu, AP max |err| %.1e, "
                    "definedness mismatches %zu; %.2f s (limit 10 s)",
                    exhaustive, tally.cases - exhaustive, tally.roc_mismatch, tally.ap_worst, tally.definedness, dt)};
}

// 3 -------------------------------------------------------------------------

// All multisets of `size` items drawn from `options` (indices, non-decreasing).
void multisets(std::size_t options, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == size) {
    visit(cur);
    return;
  }
  for (std::size_t o = start; o < options; ++o) {
    cur.push_back(o);
    multisets(options, size, o, cur, visit);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> count_vectors(std::size_t V, unsigned max_count) {
  std::vector<std::vector<unsigned>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < V; ++i) total *= max_count + 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<unsigned> v(V);
    std::size_t c = code;
    for (std::size_t i = 0; i < V; ++i, c /= max_count + 1) v[i] = static_cast<unsigned>(c % (max_count + 1));
    out.push_back(v);
  }
  return out;
}

SparseVector to_sparse(const std::vector<unsigned>& counts) {
  std::vector<double> v(counts.begin(), counts.end());
  return fixtures::dense(v);
}

Outcome nb_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t models = 0, queries = 0;
  double worst = 0.0;
  for (std::size_t V = 1; V <= 3; ++V) {
    // Per-document count range shrinks as the vocabulary grows to keep the
    // grid enumerable; queries always cover counts 0..2 of every term.
    const auto doc_options = count_vectors(V, V == 1 ? 3 : V == 2 ? 2 : 1);
    const auto query_options = count_vectors(V, 2);
    std::vector<SparseVector> query_vecs;
    for (const auto& q : query_options) query_vecs.push_back(to_sparse(q));
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t n_scam = 1; n_scam < n; ++n_scam) {
        std::vector<std::size_t> cur;
        multisets(doc_options.size(), n_scam, 0, cur, [&](const std::vector<std::size_t>& scam_docs) {
          std::vector<std::size_t> cur2;
          multisets(doc_options.size(), n - n_scam, 0, cur2, [&](const std::vector<std::size_t>& other_docs) {
            std::vector<std::vector<unsigned>> docs;
            std::vector<Label> labels;
            for (auto o : scam_docs) docs.push_back(doc_options[o]), labels.push_back(S);
            for (auto o : other_docs) docs.push_back(doc_options[o]), labels.push_back(N);
            std::vector<SparseVector> X;
            for (const auto& d : docs) X.push_back(to_sparse(d));
            for (double alpha : {1.0, 0.5}) {
              const auto model = train_naive_bayes(X, labels, alpha);
              ++models;
              for (std::size_t q = 0; q < query_options.size(); ++q) {
                const double got = model.score(query_vecs[q]);
                const double want = oracle::nb_log_odds(docs, labels, alpha, query_options[q]);
                worst = std::max(worst, std::abs(got - want));
                ++queries;
              }
            }
          });
        });
      }
    }
  }
  // Worked model: scam "money money", not_scam "hello", alpha 1, V = 2.
  const std::vector<SparseVector> X{fixtures::dense({2, 0}), fixtures::dense({0, 1})};
  const std::vector<Label> y{S, N};
  const auto m = train_naive_bayes(X, y, 1.0);
  const bool worked = m.log_likelihood(S)[0] == std::log(3.0 / 4.0) && m.log_likelihood(S)[1] == std::log(1.0 / 4.0) &&
                      m.log_likelihood(N)[0] == std::log(1.0 / 3.0) && m.log_likelihood(N)[1] == std::log(2.0 / 3.0) &&
                      m.log_prior(S) == std::log(0.5) && m.log_prior(N) == std::log(0.5) &&
                      std::abs(m.score(fixtures::dense({1, 0})) - 0.8109) < 5e-5 &&
                      std::abs(m.score(fixtures::dense({0, 1})) + 0.9808) < 5e-5;
  const double dt = seconds_since(t0);
  return {worst <= 1e-9 && worked,
          fmt("%zu models, %zu queries vs enumeration, max |err| %.1e (limit 1e-9); money/hello P(money|scam)=%.17g "
              "%s; %.2f s",
              models, queries, worst, std::exp(m.log_likelihood(S)[0]), worked ? "exact" : "WRONG", dt)};
}

// 4 -------------------------------------------------------------------------

Outcome svm_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SparseVector> X1{fixtures::dense({-1}), fixtures::dense({1})};
  const std::vector<Label> y1{N, S};
  SvmParams p1;
  p1.C = 10;
  const auto r1 = train_svm(X1, y1, p1);
  const double analytic_err = std::max({std::abs(r1.alphas[0] - 0.5), std::abs(r1.alphas[1] - 0.5),
                                        std::abs(r1.model.bias())});

  SplitMix64 rng(404);
  double worst_kkt_excess = -1e300, worst_eq = 0.0, worst_drop = 0.0;
  std::size_t not_converged = 0, traces = 0, steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool separable = trial % 2 == 0;
    const std::size_t dim = 2 + rng.uniform_below(6), n = 10 + rng.uniform_below(50);
    std::vector<SparseVector> X;
    std::vector<Label> y;
    for (std::size_t i = 0; i < n; ++i) {
      const Label label = i < 2 ? Label(i) : Label(rng.uniform_below(2));
      std::vector<double> v(dim);
      for (auto& w : v) w = rng.uniform_below(4) == 0 ? 0.0 : rng.uniform01() * 2 - 1;
      if (separable) v[0] = (label == S ? 1.0 : -1.0) * (0.3 + rng.uniform01());
      X.push_back(fixtures::dense(v));
      y.push_back(label);
    }
    SvmParams params;
    params.C = separable ? 100.0 : 0.1 + 5 * rng.uniform01();
    if (trial % 5 == 4) params.kernel = KernelType::rbf;
    params.record_trace = true;
    params.max_passes = 100000;
    const auto r = train_svm(X, y, params);
    if (!r.model.converged()) ++not_converged;
    worst_kkt_excess = std::max(worst_kkt_excess, oracle::svm_kkt_residual(X, y, r.alphas, r.model) - params.tol);
    worst_eq = std::max(worst_eq, oracle::svm_equality_residual(y, r.alphas));
    ++traces;
    steps += r.dual_objective.size();
    for (std::size_t i = 1; i < r.dual_objective.size(); ++i) {
      worst_drop = std::max(worst_drop, r.dual_objective[i - 1] - r.dual_objective[i]);
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = analytic_err <= 1e-6 && not_converged == 0 && worst_kkt_excess <= 0.0 && worst_eq <= 1e-9 &&
                    worst_drop <= 0.0;
  return {pass, fmt("1-D problem max |err| %.1e (limit 1e-6); 100 fuzzed problems: unconverged %zu, max KKT residual "
                    "minus tol %.2e, |sum alpha y| %.1e; %zu traces / %zu steps, max dual decrease %.1e; %.2f s",
                    analytic_err, not_converged, worst_kkt_excess, worst_eq, traces, steps, worst_drop, dt)};
}

// 5 -------------------------------------------------------------------------

Outcome ttest_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> d{1, -1, 2, 0, 1}, zero(5, 0.0);
  const auto r = paired_t_test(d, zero);
  const double t_ref = oracle::paired_t(d, zero);
  const double p_ref = oracle::t_two_tailed_p(t_ref, 4);
  const bool worked = std::abs(r.t - 1.1767) <= 1e-4 && std::abs(r.p - 0.3045) <= 5e-4 &&
                      std::abs(t_ref - 1.1767) <= 1e-4 && std::abs(p_ref - 0.3045) <= 5e-4 &&
                      std::abs(r.p - p_ref) <= 1e-10;

  SplitMix64 rng(505);
  std::size_t antisym_fail = 0, degenerate_fail = 0, oracle_fail = 0, degenerate_cases = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(49);
    std::vector<double> a(n), b(n);
    const int kind = trial % 4;  // 0: zero diffs, 1: constant nonzero diffs, else random
    const double shift = (rng.uniform01() - 0.5) * 0.25;
    for (std::size_t i = 0; i < n; ++i) {
      // Dyadic grid values and power-of-two shifts keep constant differences exact.
      b[i] = double(rng.uniform_below(1u << 20)) / double(1u << 20);
      a[i] = kind == 0 ? b[i] : kind == 1 ? b[i] + (shift < 0 ? -0.125 : 0.0625) : b[i] + shift + rng.uniform01() - 0.5;
    }
    const auto ab = paired_t_test(a, b);
    const auto ba = paired_t_test(b, a);
    if (!(ab.t == -ba.t && ab.p == ba.p)) ++antisym_fail;
    if (kind < 2) {
      ++degenerate_cases;
      const bool ok = kind == 0 ? (ab.t == 0.0 && ab.p == 1.0) : (std::isinf(ab.t) && ab.p == 0.0);
      if (!ok) ++degenerate_fail;
    } else if (std::abs(ab.p - oracle::t_two_tailed_p(ab.t, double(n - 1))) > 1e-10) {
      ++oracle_fail;
    }
  }
  const double dt = seconds_since(t0);
  return {worked && antisym_fail == 0 && degenerate_fail == 0 && oracle_fail == 0,
          fmt("diffs [1,-1,2,0,1]: t=%.4f p=%.4f (oracle t=%.4f p=%.4f); 10^4 fuzzed pairs: antisymmetry failures %zu, "
              "degenerate-sd failures %zu of %zu, oracle p mismatches %zu; %.2f s",
              r.t, r.p, t_ref, p_ref, antisym_fail, degenerate_fail, degenerate_cases, oracle_fail, dt)};
}

// 6 -------------------------------------------------------------------------

// Two classifiers whose fold scores come from one distribution, pushed
// through the same sample collection and comparison path as real results.
Outcome type1_calibration() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg;
  const std::size_t fold_size = 40;
  SplitMix64 rng(606);
  std::map<MetricId, int> significant;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    SubDatasetResult sd;
    for (std::size_t run = 1; run <= cfg.runs; ++run) {
      RunRecord rec;
      rec.run = run;
      for (std::size_t f = 0; f < cfg.folds; ++f) {
        std::vector<Label> truth(fold_size);
        for (std::size_t i = 0; i < fold_size; ++i) truth[i] = i % 2 ? S : N;
        for (ClassifierKind kind : {ClassifierKind::svm, ClassifierKind::naive_bayes}) {
          std::vector<double> scores(fold_size);
          std::vector<Label> pred(fold_size);
          for (std::size_t i = 0; i < fold_size; ++i) {
            scores[i] = rng.uniform01() - 0.5;
            pred[i] = label_for(kind, scores[i]);
          }
          rec.cell(kind).folds.push_back(evaluate(scores, pred, truth));
        }
      }
      sd.runs.push_back(std::move(rec));
    }
    for (MetricId metric : kComparedMetrics) {
      const auto c = compare_with_svm(sd, metric, ClassifierKind::naive_bayes, cfg);
      if (c && c->verdict != Verdict::not_reject) ++significant[metric];
    }
  }
  const double dt = seconds_since(t0);
  bool pass = dt < 120.0;
  std::string rates;
  for (MetricId metric : kComparedMetrics) {
    const double rate = double(significant[metric]) / trials;
    pass = pass && rate >= 0.01 && rate <= 0.10;
    rates += fmt("%s %.3f ", std::string(to_string(metric)).c_str(), rate);
  }
  return {pass, fmt("200 null experiments of 5x10 folds at alpha 0.05, significant-verdict rate: %s(band "
                    "[0.01, 0.10]); %.2f s (limit 120 s)",
                    rates.c_str(), dt)};
}

// 7 -------------------------------------------------------------------------

Outcome end_to_end() {
  const auto t0 = std::chrono::steady_clock::now();
  GeneratorConfig g;
  g.cue_fraction = 1.0;
  const auto corpus = generate(g);
  const ExperimentConfig cfg;
  const auto result = run_experiment(cfg, corpus, 1);
  const auto tables = emit_tables(result);
  const double dt = seconds_since(t0);

  std::size_t metric_tables = 0, compare_tables = 0;
  for (const auto& t : tables.tables) {
    if (std::regex_match(t.name, std::regex("metrics-[ABCD]"))) ++metric_tables;
    if (std::regex_match(t.name, std::regex("compare-(roc_area|pr_area|f1)"))) ++compare_tables;
  }
  std::size_t f1_cells = 0, f1_perfect = 0, fold_reports = 0, verdicts = 0, not_reject = 0;
  for (const auto& sd : result.subdatasets) {
    for (ClassifierKind kind : kAllClassifiers) {
      ++f1_cells;
      if (format_metric(holdout_summary(sd, kind)[2], 3) == "1.000") ++f1_perfect;
      for (const auto& run : sd.runs) fold_reports += run.cell(kind).folds.size();
    }
    for (MetricId metric : kComparedMetrics) {
      for (ClassifierKind other : {ClassifierKind::naive_bayes, ClassifierKind::knn}) {
        const auto c = compare_with_svm(sd, metric, other, result.config);
        ++verdicts;
        if (c && c->verdict == Verdict::not_reject) ++not_reject;
      }
    }
  }
  const bool pass = corpus.size() == 1000 && result.subdatasets.size() == 4 && fold_reports == 4 * 3 * 5 * 10 &&
                    metric_tables == 4 && compare_tables == 3 && tables.complete() && f1_perfect == f1_cells &&
                    not_reject == verdicts && dt < 300.0;
  return {pass, fmt("%zu docs, cue_fraction 1.0: %zu fold reports (4 SD x 3 clf x 5 runs x 10 folds), %zu metric + "
                    "%zu comparison tables, F1 1.000 in %zu/%zu cells, Not Reject in %zu/%zu verdicts; %.1f s "
                    "(limit 300 s)",
                    corpus.size(), fold_reports, metric_tables, compare_tables, f1_perfect, f1_cells, not_reject,
                    verdicts, dt)};
}

// 8 -------------------------------------------------------------------------

Outcome vocabulary_sizes(const fs::path& work) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto synth = cli({"synth", "--out", (work / "default-corpus").string()});
  if (synth.code != 0) return {false, "synth failed: " + synth.err};
  const auto r = cli({"featurize", "--corpus", (work / "default-corpus" / "corpus.jsonl").string()});
  if (r.code != 0) return {false, "featurize failed: " + r.err};
  std::map<std::string, double> words;
  const std::regex row(R"(\| ([ABCD]) \| [^|]+ \| (?:Unigram|Bigram) \| \d+ \| (\d+) \|)");
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), row), end; it != end; ++it) {
    words[(*it)[1].str()] = std::stod((*it)[2].str());
  }
  if (words.size() != 4) return {false, "could not parse featurize output:\n" + r.out};
  const std::map<std::string, double> target{{"A", 2081}, {"B", 12070}, {"C", 1875}, {"D", 3057}};
  bool within = true;
  std::string detail;
  for (const auto& [sd, t] : target) {
    const double dev = words[sd] / t - 1.0;
    within = within && std::abs(dev) <= 0.25;
    detail += fmt("%s %.0f (target %.0f, %+.1f%%) ", sd.c_str(), words[sd], t, 100 * dev);
  }
  const bool ordered = words["C"] < words["A"] && words["D"] < words["B"];
  const double dt = seconds_since(t0);
  return {within && ordered, fmt("default corpus vocabularies: %sC<A %s, D<B %s; %.2f s", detail.c_str(),
                                 words["C"] < words["A"] ? "yes" : "NO", words["D"] < words["B"] ? "yes" : "NO", dt)};
}

// 9 -------------------------------------------------------------------------

Outcome determinism(const fs::path& work) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string corpus = (work / "default-corpus" / "corpus.jsonl").string();
  if (!fs::exists(corpus)) {
    const auto synth = cli({"synth", "--out", (work / "default-corpus").string()});
    if (synth.code != 0) return {false, "synth failed: " + synth.err};
  }
  const auto a = cli({"run", "--corpus", corpus, "--seed", "42", "--jobs", "1", "--out", (work / "run-a").string()});
  const auto b = cli({"run", "--corpus", corpus, "--seed", "42", "--jobs", "4", "--out", (work / "run-b").string()});
  if (a.code != 0 || b.code != 0) return {false, "run failed: " + a.err + b.err};
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(work / "run-a")) files += e.is_regular_file();
  const std::string diff = fixtures::diff_trees(work / "run-a", work / "run-b");
  const double dt = seconds_since(t0);
  return {diff.empty() && a.out == b.out && files > 0,
          fmt("two full runs, seed 42 (1 and 4 worker threads): %zu files, %s, stdout %s; %.1f s", files,
              diff.empty() ? "byte-identical" : diff.c_str(), a.out == b.out ? "identical" : "DIFFERS", dt)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one PASS/FAIL line per criterion"};
  std::string workdir = (fs::temp_directory_path() / "scamtext-acceptance").string();
  std::vector<int> only;
  app.add_option("--workdir", workdir, "Scratch directory for generated corpora and results");
  app.add_option("--only", only, "Run only these criteria (1-9)");
  CLI11_PARSE(app, argc, argv);

  const fs::path work(workdir);
  // Only the entries this program creates are cleared.
  for (const char* sub : {"default-corpus", "run-a", "run-b"}) fs::remove_all(work / sub);
  fs::create_directories(work);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"metric oracles", metric_oracles},
      {"ROC/PR oracles", curve_oracles},
      {"NB enumeration oracle", nb_oracle},
      {"SVM correctness", svm_correctness},
      {"t-test oracle", ttest_oracle},
      {"type-I calibration", type1_calibration},
      {"end-to-end protocol", end_to_end},
      {"vocabulary sizes", [&] { return vocabulary_sizes(work); }},
      {"determinism", [&] { return determinism(work); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
