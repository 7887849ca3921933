#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"
#include "scamtext/error.hpp"
#include "scamtext/model.hpp"
#include "scamtext/rng.hpp"

using namespace scamtext;

namespace {

struct Data {
  std::vector<SparseVector> X;
  std::vector<Label> y;
};

Data fuzz_data(SplitMix64& rng, std::size_t n, std::size_t dim) {
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    for (auto& w : v) w = rng.uniform_below(3) == 0 ? rng.uniform01() : 0.0;
    d.X.push_back(fixtures::dense(v));
    d.y.push_back(i < 2 ? Label(i) : Label(rng.uniform_below(2)));
  }
  return d;
}

std::vector<ClassifierConfig> configs() {
  SvmParams rbf;
  rbf.kernel = KernelType::rbf;
  return {NaiveBayesParams{}, NaiveBayesParams{0.3, true}, SvmParams{}, rbf,
          KnnParams{1, Distance::euclidean}, KnnParams{3, Distance::cosine}};
}

}  // namespace

TEST(Model, NamesAndThresholds) {
  EXPECT_EQ(display_name(ClassifierKind::naive_bayes), "NB");
  EXPECT_EQ(display_name(ClassifierKind::svm), "SVM");
  EXPECT_EQ(display_name(ClassifierKind::knn), "kNN");
  EXPECT_EQ(slug(ClassifierKind::knn), "knn");
  EXPECT_EQ(decision_threshold(ClassifierKind::naive_bayes), 0.0);
  EXPECT_EQ(decision_threshold(ClassifierKind::svm), 0.0);
  EXPECT_EQ(decision_threshold(ClassifierKind::knn), 0.5);
}

TEST(Model, PropertyLabelRuleMatchesScore) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = fuzz_data(rng, 25, 6);
    for (const auto& cfg : configs()) {
      const auto m = train(cfg, d.X, d.y);
      for (int q = 0; q < 20; ++q) {
        const auto x = fuzz_data(rng, 1, 6).X[0];
        const double s = score(m, x);
        EXPECT_EQ(predict(m, x), s > decision_threshold(kind_of(m)) ? Label::scam : Label::not_scam);
        EXPECT_EQ(score(m, x), s);
      }
    }
  }
}

TEST(Model, PropertyJsonRoundTripScoresBitIdentically) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = fuzz_data(rng, 30, 8);
    for (const auto& cfg : configs()) {
      const auto m = train(cfg, d.X, d.y);
      const auto text = model_to_json(m);
      const auto back = model_from_json(text);
      EXPECT_EQ(kind_of(back), kind_of(m));
      EXPECT_EQ(model_to_json(back), text);
      for (int q = 0; q < 10; ++q) {
        const auto x = fuzz_data(rng, 1, 8).X[0];
        EXPECT_EQ(score(back, x), score(m, x));
      }
    }
  }
}

TEST(Model, MalformedJson) {
  EXPECT_THROW(model_from_json("nope"), ConfigError);
  EXPECT_THROW(model_from_json(R"({"schema_version":1,"classifier":"tree"})"), ConfigError);
  EXPECT_THROW(model_from_json(R"({"schema_version":99,"classifier":"nb"})"), ConfigError);
}
