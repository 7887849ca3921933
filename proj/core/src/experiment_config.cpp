#include "scamtext/experiment_config.hpp"

#include <set>

#include "json_support.hpp"
#include "scamtext/error.hpp"

namespace scamtext {

using nlohmann::json;

std::string_view to_string(SampleMode mode) noexcept { return mode == SampleMode::per_fold ? "per_fold" : "per_run"; }

std::string_view to_string(TestVariant variant) noexcept {
  return variant == TestVariant::paired ? "paired" : "corrected";
}

void ExperimentConfig::validate() const {
  if (runs < 2)
    throw ConfigError("runs must be >= 2: the paired t-test needs at least two runs to estimate variance");
  if (folds < 2) throw ConfigError("folds must be >= 2");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw ConfigError("test_fraction must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (subdatasets.empty()) throw ConfigError("at least one sub-dataset is required");
  if (std::set<SubDataset>(subdatasets.begin(), subdatasets.end()).size() != subdatasets.size())
    throw ConfigError("sub-datasets must not repeat");
  if (features.min_df < 1) throw ConfigError("min_df must be >= 1");
  if (!(nb.alpha > 0.0)) throw ConfigError("nb.alpha must be > 0");
  if (!(svm.C > 0.0)) throw ConfigError("svm.C must be > 0");
  if (!(svm.tol > 0.0)) throw ConfigError("svm.tol must be > 0");
  if (svm.max_passes < 1) throw ConfigError("svm.max_passes must be >= 1");
  if (svm.gamma && !(*svm.gamma > 0.0)) throw ConfigError("svm.gamma must be > 0");
  if (knn.k < 1) throw ConfigError("knn.k must be >= 1");
}

ClassifierConfig ExperimentConfig::classifier(ClassifierKind kind) const {
  switch (kind) {
    case ClassifierKind::naive_bayes: return nb;
    case ClassifierKind::svm: return svm;
    case ClassifierKind::knn: return knn;
  }
  return nb;
}

namespace detail {

json config_to_json(const ExperimentConfig& c) {
  json sds = json::array();
  for (auto sd : c.subdatasets) sds.push_back(std::string(to_string(sd)));
  json svm{{"C", c.svm.C},
           {"kernel", c.svm.kernel == KernelType::linear ? "linear" : "rbf"},
           {"tol", c.svm.tol},
           {"max_passes", c.svm.max_passes}};
  svm["gamma"] = c.svm.gamma ? json(*c.svm.gamma) : json(nullptr);
  return json{
      {"schema_version", kExperimentConfigSchemaVersion},
      {"runs", c.runs},
      {"folds", c.folds},
      {"test_fraction", c.test_fraction},
      {"alpha", c.alpha},
      {"seed", c.seed},
      {"stratified", c.stratified},
      {"subdatasets", std::move(sds)},
      {"features",
       {{"lowercase", c.features.lowercase}, {"min_df", c.features.min_df}, {"l2_normalize", c.features.l2_normalize}}},
      {"nb", {{"alpha", c.nb.alpha}, {"input", c.nb.tfidf_input ? "tfidf" : "counts"}}},
      {"svm", std::move(svm)},
      {"knn", {{"k", c.knn.k}, {"distance", c.knn.distance == Distance::euclidean ? "euclidean" : "cosine"}}},
      {"significance", {{"samples", to_string(c.samples)}, {"test", to_string(c.test)}}},
      {"max_fold_reseeds", c.max_fold_reseeds},
  };
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown key \"" + key + "\" in " + where);
  }
}

template <class T>
void read(const json& obj, const char* key, T& out) {
  if (auto it = obj.find(key); it != obj.end()) out = it->get<T>();
}

std::size_t read_count(const json& obj, const char* key, std::size_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0)
    throw ConfigError(std::string("\"") + key + "\" must be a nonnegative integer");
  return it->get<std::size_t>();
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  reject_unknown(doc,
                 {"schema_version", "runs", "folds", "test_fraction", "alpha", "seed", "stratified", "subdatasets",
                  "features", "nb", "svm", "knn", "significance", "max_fold_reseeds"},
                 "config");
  if (auto it = doc.find("schema_version"); it != doc.end() && it->get<int>() != kExperimentConfigSchemaVersion)
    throw ConfigError("unsupported config schema_version " + it->dump());
  ExperimentConfig c;
  c.runs = read_count(doc, "runs", c.runs);
  c.folds = read_count(doc, "folds", c.folds);
  read(doc, "test_fraction", c.test_fraction);
  read(doc, "alpha", c.alpha);
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_integer()) throw ConfigError("\"seed\" must be an integer");
    c.seed = it->get<std::uint64_t>();
  }
  read(doc, "stratified", c.stratified);
  c.max_fold_reseeds = read_count(doc, "max_fold_reseeds", c.max_fold_reseeds);
  if (auto it = doc.find("subdatasets"); it != doc.end()) {
    c.subdatasets.clear();
    for (const auto& s : *it) {
      auto sd = parse_subdataset(s.get<std::string>());
      if (!sd) throw ConfigError("unknown sub-dataset " + s.dump());
      c.subdatasets.push_back(*sd);
    }
  }
  if (auto it = doc.find("features"); it != doc.end()) {
    reject_unknown(*it, {"lowercase", "min_df", "l2_normalize"}, "features");
    read(*it, "lowercase", c.features.lowercase);
    c.features.min_df = read_count(*it, "min_df", c.features.min_df);
    read(*it, "l2_normalize", c.features.l2_normalize);
  }
  if (auto it = doc.find("nb"); it != doc.end()) {
    reject_unknown(*it, {"alpha", "input"}, "nb");
    read(*it, "alpha", c.nb.alpha);
    if (auto in = it->find("input"); in != it->end()) {
      const auto v = in->get<std::string>();
      if (v != "counts" && v != "tfidf") throw ConfigError("nb.input must be \"counts\" or \"tfidf\"");
      c.nb.tfidf_input = v == "tfidf";
    }
  }
  if (auto it = doc.find("svm"); it != doc.end()) {
    reject_unknown(*it, {"C", "kernel", "gamma", "tol", "max_passes"}, "svm");
    read(*it, "C", c.svm.C);
    read(*it, "tol", c.svm.tol);
    c.svm.max_passes = read_count(*it, "max_passes", c.svm.max_passes);
    if (auto k = it->find("kernel"); k != it->end()) {
      const auto v = k->get<std::string>();
      if (v != "linear" && v != "rbf") throw ConfigError("svm.kernel must be \"linear\" or \"rbf\"");
      c.svm.kernel = v == "linear" ? KernelType::linear : KernelType::rbf;
    }
    if (auto g = it->find("gamma"); g != it->end() && !g->is_null()) c.svm.gamma = g->get<double>();
  }
  if (auto it = doc.find("knn"); it != doc.end()) {
    reject_unknown(*it, {"k", "distance"}, "knn");
    c.knn.k = read_count(*it, "k", c.knn.k);
    if (auto d = it->find("distance"); d != it->end()) {
      const auto v = d->get<std::string>();
      if (v != "euclidean" && v != "cosine") throw ConfigError("knn.distance must be \"euclidean\" or \"cosine\"");
      c.knn.distance = v == "euclidean" ? Distance::euclidean : Distance::cosine;
    }
  }
  if (auto it = doc.find("significance"); it != doc.end()) {
    reject_unknown(*it, {"samples", "test"}, "significance");
    if (auto s = it->find("samples"); s != it->end()) {
      const auto v = s->get<std::string>();
      if (v != "per_fold" && v != "per_run") throw ConfigError("significance.samples must be per_fold or per_run");
      c.samples = v == "per_fold" ? SampleMode::per_fold : SampleMode::per_run;
    }
    if (auto t = it->find("test"); t != it->end()) {
      const auto v = t->get<std::string>();
      if (v != "paired" && v != "corrected") throw ConfigError("significance.test must be paired or corrected");
      c.test = v == "paired" ? TestVariant::paired : TestVariant::corrected;
    }
  }
  c.validate();
  return c;
}

json metric_to_json(Metric m) { return m ? json(*m) : json(nullptr); }

Metric metric_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json report_to_json(const EvalReport& r) {
  auto cls = [](const ClassMetrics& c) {
    return json{{"precision", metric_to_json(c.precision)},
                {"recall", metric_to_json(c.recall)},
                {"f1", metric_to_json(c.f1)},
                {"support", c.support}};
  };
  return json{
      {"confusion", {{"s_s", r.confusion.s_s}, {"s_ns", r.confusion.s_ns}, {"ns_s", r.confusion.ns_s}, {"ns_ns", r.confusion.ns_ns}}},
      {"scam", cls(r.scam)},
      {"not_scam", cls(r.not_scam)},
      {"weighted",
       {{"precision", metric_to_json(r.weighted.precision)},
        {"recall", metric_to_json(r.weighted.recall)},
        {"f1", metric_to_json(r.weighted.f1)}}},
      {"roc_area", metric_to_json(r.roc_area)},
      {"pr_area", metric_to_json(r.pr_area)},
  };
}

EvalReport report_from_json(const json& j) {
  // Threshold metrics are recomputed from the confusion matrix; curve areas
  // need the scores, so they are read back as stored.
  EvalReport r;
  const auto& c = j.at("confusion");
  r.confusion = {c.at("s_s").get<std::uint64_t>(), c.at("s_ns").get<std::uint64_t>(),
                 c.at("ns_s").get<std::uint64_t>(), c.at("ns_ns").get<std::uint64_t>()};
  r.scam = class_metrics(r.confusion, Label::scam);
  r.not_scam = class_metrics(r.confusion, Label::not_scam);
  const ClassMetrics both[] = {r.scam, r.not_scam};
  r.weighted = weighted_report(both);
  r.roc_area = metric_from_json(j.at("roc_area"));
  r.pr_area = metric_from_json(j.at("pr_area"));
  return r;
}

}  // namespace detail

ExperimentConfig experiment_config_from_json(std::string_view text) {
  try {
    return detail::config_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed experiment config: ") + e.what());
  }
}

std::string experiment_config_to_json(const ExperimentConfig& config, int indent) {
  return detail::config_to_json(config).dump(indent);
}

}  // namespace scamtext
