#include "scamtext/model.hpp"

#include <json.hpp>

#include "scamtext/error.hpp"

namespace scamtext {

using nlohmann::json;

namespace {

constexpr int kModelSchemaVersion = 1;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json sparse_to_json(const SparseVector& v) {
  json pairs = json::array();
  for (const auto& e : v.entries()) pairs.push_back(json::array({e.index, e.weight}));
  return json{{"dim", v.dim()}, {"entries", std::move(pairs)}};
}

SparseVector sparse_from_json(const json& j) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& p : j.at("entries")) entries.push_back({p.at(0).get<std::uint32_t>(), p.at(1).get<double>()});
  return SparseVector::from_entries(j.at("dim").get<std::size_t>(), std::move(entries));
}

}  // namespace

ClassifierKind kind_of(const ClassifierConfig& config) noexcept {
  return static_cast<ClassifierKind>(config.index());
}

ClassifierKind kind_of(const TrainedModel& model) noexcept { return static_cast<ClassifierKind>(model.index()); }

std::string_view display_name(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::naive_bayes: return "NB";
    case ClassifierKind::svm: return "SVM";
    case ClassifierKind::knn: return "kNN";
  }
  return "?";
}

std::string_view slug(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::naive_bayes: return "nb";
    case ClassifierKind::svm: return "svm";
    case ClassifierKind::knn: return "knn";
  }
  return "?";
}

double decision_threshold(ClassifierKind kind) noexcept { return kind == ClassifierKind::knn ? 0.5 : 0.0; }

TrainedModel train(const ClassifierConfig& config, std::span<const SparseVector> X, std::span<const Label> y) {
  return std::visit(overloaded{
                        [&](const NaiveBayesParams& p) -> TrainedModel { return train_naive_bayes(X, y, p.alpha); },
                        [&](const SvmParams& p) -> TrainedModel { return train_svm(X, y, p).model; },
                        [&](const KnnParams& p) -> TrainedModel { return train_knn(X, y, p); },
                    },
                    config);
}

double score(const TrainedModel& model, const SparseVector& x) {
  return std::visit(overloaded{
                        [&](const NaiveBayesModel& m) { return m.score(x); },
                        [&](const SvmModel& m) { return m.decision(x); },
                        [&](const KnnModel& m) { return m.score(x); },
                    },
                    model);
}

Label predict(const TrainedModel& model, const SparseVector& x) { return label_for(kind_of(model), score(model, x)); }

std::string model_to_json(const TrainedModel& model) {
  json doc{{"schema_version", kModelSchemaVersion}, {"classifier", slug(kind_of(model))}};
  std::visit(overloaded{
                 [&](const NaiveBayesModel& m) {
                   doc["alpha"] = m.alpha();
                   doc["vocab_size"] = m.vocab_size();
                   for (Label c : {Label::not_scam, Label::scam}) {
                     const std::string key(to_string(c));
                     doc["log_prior"][key] = m.log_prior(c);
                     auto ll = m.log_likelihood(c);
                     doc["log_likelihood"][key] = std::vector<double>(ll.begin(), ll.end());
                   }
                 },
                 [&](const SvmModel& m) {
                   doc["C"] = m.C();
                   doc["bias"] = m.bias();
                   doc["converged"] = m.converged();
                   doc["kernel"] = m.kernel().type == KernelType::linear ? "linear" : "rbf";
                   doc["gamma"] = m.kernel().gamma;
                   json svs = json::array();
                   for (const auto& sv : m.support_vectors())
                     svs.push_back({{"y", sv.y}, {"alpha", sv.alpha}, {"x", sparse_to_json(sv.x)}});
                   doc["support_vectors"] = std::move(svs);
                 },
                 [&](const KnnModel& m) {
                   doc["k"] = m.params().k;
                   doc["distance"] = m.params().distance == Distance::euclidean ? "euclidean" : "cosine";
                   json train = json::array();
                   auto X = m.training_vectors();
                   auto y = m.training_labels();
                   for (std::size_t i = 0; i < X.size(); ++i)
                     train.push_back({{"label", to_string(y[i])}, {"x", sparse_to_json(X[i])}});
                   doc["training_set"] = std::move(train);
                 },
             },
             model);
  return doc.dump();
}

TrainedModel model_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kModelSchemaVersion)
      throw ConfigError("unsupported model schema version");
    const auto kind = doc.at("classifier").get<std::string>();
    if (kind == "nb") {
      std::array<double, 2> prior{};
      std::array<std::vector<double>, 2> ll;
      for (Label c : {Label::not_scam, Label::scam}) {
        const std::string key(to_string(c));
        prior[static_cast<std::size_t>(c)] = doc.at("log_prior").at(key).get<double>();
        ll[static_cast<std::size_t>(c)] = doc.at("log_likelihood").at(key).get<std::vector<double>>();
      }
      return NaiveBayesModel(doc.at("alpha").get<double>(), prior, std::move(ll));
    }
    if (kind == "svm") {
      Kernel kernel;
      const auto kname = doc.at("kernel").get<std::string>();
      if (kname != "linear" && kname != "rbf") throw ConfigError("unknown kernel " + kname);
      kernel.type = kname == "linear" ? KernelType::linear : KernelType::rbf;
      kernel.gamma = doc.at("gamma").get<double>();
      std::vector<SupportVector> svs;
      for (const auto& s : doc.at("support_vectors"))
        svs.push_back({sparse_from_json(s.at("x")), s.at("y").get<double>(), s.at("alpha").get<double>()});
      return SvmModel(std::move(svs), doc.at("bias").get<double>(), kernel, doc.at("C").get<double>(),
                      doc.at("converged").get<bool>());
    }
    if (kind == "knn") {
      KnnParams params;
      params.k = doc.at("k").get<std::size_t>();
      const auto dname = doc.at("distance").get<std::string>();
      if (dname != "euclidean" && dname != "cosine") throw ConfigError("unknown distance " + dname);
      params.distance = dname == "euclidean" ? Distance::euclidean : Distance::cosine;
      std::vector<SparseVector> X;
      std::vector<Label> y;
      for (const auto& t : doc.at("training_set")) {
        auto label = parse_label(t.at("label").get<std::string>());
        if (!label) throw ConfigError("bad label in kNN training set");
        y.push_back(*label);
        X.push_back(sparse_from_json(t.at("x")));
      }
      return KnnModel(std::move(X), std::move(y), params);
    }
    throw ConfigError("unknown classifier \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed model document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid model document: ") + e.what());
  }
}

}  // namespace scamtext
