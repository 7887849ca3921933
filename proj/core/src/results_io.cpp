#include "scamtext/results_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_support.hpp"
#include "scamtext/error.hpp"

namespace scamtext {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kResultsSchemaVersion = 1;

const char* const kConventions[] = {
    "significance samples come from k-fold cross-validation on the training portion; summary tables come from the "
    "hold-out portion, averaged over runs",
    "ROC and PR areas are computed per fold and averaged",
    "F-measure comparisons use the support-weighted F1",
    "a fold with an undefined headline metric triggers a re-draw of all folds for that run under the next fold seed",
    "equal scores at the decision threshold resolve to not_scam",
    "run_seed = derive_seed(seed, run); split_seed = derive_seed(run_seed, 0x5D00 + subdataset); fold_seed = "
    "derive_seed(split_seed, 0xF000 + attempt); derive_seed(p, t) = mix64(p + 0x9E3779B97F4A7C15 * (t + 1)) with "
    "the SplitMix64 finalizer",
    "vocabulary and idf are fitted on the training side of every split",
    "text preprocessing is applied after sub-dataset selection, at featurization time",
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
  if (!out) throw ConfigError("write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_file(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

void write_results(const fs::path& dir, const ExperimentResult& result, const ReportSet& tables) {
  std::error_code ec;
  for (const char* sub : {"tables", "curves", "runs"}) {
    fs::create_directories(dir / sub, ec);
    if (ec) throw ConfigError("cannot create " + (dir / sub).string() + ": " + ec.message());
  }

  for (const auto& t : tables.tables) {
    write_file(dir / "tables" / (t.name + ".csv"), t.csv);
    write_file(dir / "tables" / (t.name + ".md"), t.markdown);
  }

  const std::size_t runs = result.config.runs;
  for (std::size_t r = 0; r < runs; ++r) {
    json doc;
    doc["schema_version"] = kResultsSchemaVersion;
    doc["run"] = r + 1;
    json sds = json::array();
    for (const auto& sd : result.subdatasets) {
      const RunRecord& rec = sd.runs.at(r);
      json s;
      s["id"] = std::string(to_string(sd.id));
      s["split_seed"] = rec.split_seed;
      s["fold_seed"] = rec.fold_seed;
      s["fold_attempts"] = rec.fold_attempts;
      json classifiers = json::object();
      for (ClassifierKind kind : kAllClassifiers) {
        const auto& cell = rec.cell(kind);
        json c;
        c["failure"] = cell.failure ? json(*cell.failure) : json(nullptr);
        json folds = json::array();
        for (const auto& f : cell.folds) folds.push_back(detail::report_to_json(f));
        c["folds"] = std::move(folds);
        c["holdout"] = cell.holdout ? detail::report_to_json(*cell.holdout) : json(nullptr);
        classifiers[std::string(slug(kind))] = std::move(c);

        if (!cell.holdout_scores.scores.empty()) {
          const std::string stem = std::string(to_string(sd.id)) + "-" + std::string(slug(kind)) + "-run" +
                                   std::to_string(r + 1);
          const auto& hs = cell.holdout_scores;
          std::ostringstream roc;
          write_roc_csv(roc, roc_points(hs.scores, hs.truth));
          write_file(dir / "curves" / (stem + "-roc.csv"), roc.str());
          std::ostringstream pr;
          write_pr_csv(pr, pr_points(hs.scores, hs.truth));
          write_file(dir / "curves" / (stem + "-pr.csv"), pr.str());
        }
      }
      s["classifiers"] = std::move(classifiers);
      sds.push_back(std::move(s));
    }
    doc["subdatasets"] = std::move(sds);
    write_file(dir / "runs" / ("run-" + std::to_string(r + 1) + ".json"), dump(doc));
  }

  json meta;
  meta["schema_version"] = kResultsSchemaVersion;
  meta["config"] = detail::config_to_json(result.config);
  meta["corpus"] = {{"provenance", result.corpus_provenance}, {"size", result.corpus_size}};
  json seeds;
  seeds["master"] = result.config.seed;
  json run_seeds = json::array();
  for (std::size_t r = 0; r < runs; ++r) {
    json rs;
    rs["run"] = r + 1;
    rs["run_seed"] = run_seed(result.config.seed, r + 1);
    json split = json::object();
    json fold = json::object();
    for (const auto& sd : result.subdatasets) {
      split[std::string(to_string(sd.id))] = sd.runs.at(r).split_seed;
      fold[std::string(to_string(sd.id))] = sd.runs.at(r).fold_seed;
    }
    rs["split_seeds"] = std::move(split);
    rs["fold_seeds"] = std::move(fold);
    run_seeds.push_back(std::move(rs));
  }
  seeds["runs"] = std::move(run_seeds);
  meta["seeds"] = std::move(seeds);
  json sds = json::array();
  for (const auto& sd : result.subdatasets) {
    sds.push_back({{"id", std::string(to_string(sd.id))},
                   {"ngram", as_int(sd.order)},
                   {"n_docs", sd.n_docs},
                   {"n_train", sd.n_train},
                   {"n_test", sd.n_test}});
  }
  meta["subdatasets"] = std::move(sds);
  meta["conventions"] = json(std::vector<std::string>(std::begin(kConventions), std::end(kConventions)));
  meta["events"] = result.events;
  json failures = json::array();
  for (const auto& sd : result.subdatasets)
    for (const auto& rec : sd.runs)
      for (ClassifierKind kind : kAllClassifiers)
        if (const auto& f = rec.cell(kind).failure)
          failures.push_back({{"subdataset", std::string(to_string(sd.id))},
                              {"run", rec.run},
                              {"classifier", std::string(slug(kind))},
                              {"diagnostic", *f}});
  meta["failures"] = std::move(failures);
  meta["incomplete_cells"] = tables.missing;
  write_file(dir / "meta.json", dump(meta));
}

ExperimentResult read_results(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ConfigError("results directory not found: " + dir.string());
  const json meta = parse_file(dir / "meta.json");
  ExperimentResult result;
  try {
    if (meta.at("schema_version").get<int>() != kResultsSchemaVersion)
      throw ConfigError("unsupported results schema_version in " + (dir / "meta.json").string());
    result.config = detail::config_from_json(meta.at("config"));
    result.corpus_provenance = meta.at("corpus").at("provenance").get<std::string>();
    result.corpus_size = meta.at("corpus").at("size").get<std::size_t>();
    result.events = meta.at("events").get<std::vector<std::string>>();
    for (const auto& s : meta.at("subdatasets")) {
      SubDatasetResult sd;
      const auto id = parse_subdataset(s.at("id").get<std::string>());
      if (!id) throw ConfigError("bad sub-dataset id in meta.json");
      sd.id = *id;
      sd.order = s.at("ngram").get<int>() == 2 ? NgramOrder::bigram : NgramOrder::unigram;
      sd.n_docs = s.at("n_docs").get<std::size_t>();
      sd.n_train = s.at("n_train").get<std::size_t>();
      sd.n_test = s.at("n_test").get<std::size_t>();
      sd.runs.resize(result.config.runs);
      result.subdatasets.push_back(std::move(sd));
    }
    for (std::size_t r = 0; r < result.config.runs; ++r) {
      const json doc = parse_file(dir / "runs" / ("run-" + std::to_string(r + 1) + ".json"));
      const auto& sds = doc.at("subdatasets");
      if (sds.size() != result.subdatasets.size()) throw ConfigError("run file does not match meta.json");
      for (std::size_t i = 0; i < sds.size(); ++i) {
        const auto& s = sds[i];
        RunRecord& rec = result.subdatasets[i].runs[r];
        rec.run = r + 1;
        rec.split_seed = s.at("split_seed").get<std::uint64_t>();
        rec.fold_seed = s.at("fold_seed").get<std::uint64_t>();
        rec.fold_attempts = s.at("fold_attempts").get<std::size_t>();
        for (ClassifierKind kind : kAllClassifiers) {
          const auto& c = s.at("classifiers").at(std::string(slug(kind)));
          auto& cell = rec.cell(kind);
          if (!c.at("failure").is_null()) cell.failure = c.at("failure").get<std::string>();
          for (const auto& f : c.at("folds")) cell.folds.push_back(detail::report_from_json(f));
          if (!c.at("holdout").is_null()) cell.holdout = detail::report_from_json(c.at("holdout"));
        }
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError("malformed results in " + dir.string() + ": " + e.what());
  }
  return result;
}

}  // namespace scamtext
