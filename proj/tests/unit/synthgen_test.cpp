#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "scamtext/error.hpp"
#include "scamtext/features.hpp"
#include "scamtext/protocol.hpp"
#include "scamtext/synthgen.hpp"

using namespace scamtext;

namespace {

std::string jsonl(const LabeledCorpus& c) {
  std::ostringstream out;
  write_jsonl(out, c);
  return out.str();
}

std::size_t vocab_size(const LabeledCorpus& corpus, SubDataset sd) {
  const auto sel = select_subdataset(corpus, sd);
  std::vector<std::string> cleaned;
  for (const auto& d : sel.corpus) cleaned.push_back(preprocess(d.text));
  return build_vocabulary(cleaned, sel.order).size();
}

double mean_cv_f1(double cue, ClassifierKind kind) {
  GeneratorConfig g;
  g.seed = 5;
  g.cue_fraction = cue;
  g.en_scam = g.en_not_scam = 100;
  g.pcm_scam = g.pcm_not_scam = 0;
  const auto corpus = generate(g);
  ExperimentConfig cfg;
  const auto folds = cross_validate(corpus, NgramOrder::unigram, cfg.features, cfg.classifier(kind), 5, 11);
  double s = 0;
  for (const auto& r : folds) s += r.weighted.f1.value_or(0.0);
  return s / double(folds.size());
}

}  // namespace

TEST(Synthgen, DefaultCorpusShape) {
  const GeneratorConfig g;
  EXPECT_LT(g.pidgin_vocab_size, g.english_vocab_size);
  const auto c = generate(g);
  EXPECT_EQ(c.size(), 1000u);
  EXPECT_EQ(c.count(Lang::en), g.en_scam + g.en_not_scam);
  EXPECT_EQ(c.count(Label::scam), g.en_scam + g.pcm_scam);
  EXPECT_EQ(c.provenance(), "synthetic:seed=42");
}

TEST(Synthgen, PropertyDeterministic) {
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    GeneratorConfig g;
    g.seed = seed;
    EXPECT_EQ(jsonl(generate(g)), jsonl(generate(g)));
  }
  GeneratorConfig a, b;
  b.seed = 43;
  EXPECT_NE(jsonl(generate(a)), jsonl(generate(b)));
}

TEST(Synthgen, FullCueGivesDisjointClassVocabularies) {
  GeneratorConfig g;
  g.cue_fraction = 1.0;
  const auto c = generate(g);
  std::set<std::string> scam, not_scam;
  for (const auto& d : c) {
    const auto cleaned = preprocess(d.text);
    for (auto t : tokenize(cleaned)) (d.label == Label::scam ? scam : not_scam).emplace(t);
  }
  for (const auto& t : scam) EXPECT_EQ(not_scam.count(t), 0u) << t;
}

TEST(Synthgen, ZeroCueIsNearChance) {
  GeneratorConfig g;
  g.cue_fraction = 0.0;
  g.en_scam = g.en_not_scam = 100;
  g.pcm_scam = g.pcm_not_scam = 0;
  const auto c = generate(g);
  ExperimentConfig cfg;
  const auto folds = cross_validate(c, NgramOrder::unigram, cfg.features, cfg.classifier(ClassifierKind::svm), 10, 3);
  double s = 0;
  for (const auto& r : folds) s += *r.roc_area;
  EXPECT_NEAR(s / double(folds.size()), 0.5, 0.15);
}

TEST(Synthgen, PropertyCueMonotoneOnThreeGridPoints) {
  for (ClassifierKind kind : kAllClassifiers) {
    const double lo = mean_cv_f1(0.0, kind), mid = mean_cv_f1(0.3, kind), hi = mean_cv_f1(0.8, kind);
    EXPECT_LE(lo, mid) << display_name(kind);
    EXPECT_LE(mid, hi) << display_name(kind);
  }
}

TEST(Synthgen, PropertyMixedVocabulariesSmallerThanEnglish) {
  // Default cell layout with any Pidgin vocabulary below the English one.
  for (std::uint64_t seed : {1ull, 42ull}) {
    for (std::size_t pidgin : {200u, 1000u, 2400u, 2690u}) {
      GeneratorConfig g;
      g.seed = seed;
      g.pidgin_vocab_size = pidgin;
      const auto c = generate(g);
      EXPECT_LT(vocab_size(c, SubDataset::C), vocab_size(c, SubDataset::A)) << seed << " " << pidgin;
      EXPECT_LT(vocab_size(c, SubDataset::D), vocab_size(c, SubDataset::B)) << seed << " " << pidgin;
    }
  }
}

TEST(Synthgen, Lexicons) {
  std::set<std::string> en, pcm;
  double en_len = 0, pcm_len = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    en.insert(english_word(i));
    pcm.insert(pidgin_word(i));
    en_len += english_word(i).size();
    pcm_len += pidgin_word(i).size();
  }
  EXPECT_EQ(en.size(), 2000u);
  EXPECT_EQ(pcm.size(), 2000u);
  for (const auto& w : pcm) EXPECT_EQ(en.count(w), 0u);
  EXPECT_LT(pcm_len, en_len);
}

TEST(Synthgen, ValidationAndJson) {
  auto bad = [](auto mutate) {
    GeneratorConfig g;
    mutate(g);
    EXPECT_THROW(g.validate(), ConfigError);
  };
  bad([](GeneratorConfig& g) { g.cue_fraction = 1.5; });
  bad([](GeneratorConfig& g) { g.cue_fraction = -0.1; });
  bad([](GeneratorConfig& g) { g.english_vocab_size = 9; });
  bad([](GeneratorConfig& g) { g.pidgin_vocab_size = kMaxPidginVocab + 1; });
  bad([](GeneratorConfig& g) { g.english_length = {0, 4}; });
  bad([](GeneratorConfig& g) { g.pidgin_length = {5, 4}; });
  bad([](GeneratorConfig& g) { g.en_scam = g.en_not_scam = g.pcm_scam = g.pcm_not_scam = 0; });

  GeneratorConfig g;
  g.seed = 9;
  g.cue_fraction = 0.55;
  g.pidgin_length = {3, 9};
  const auto text = generator_config_to_json(g);
  const auto back = generator_config_from_json(text);
  EXPECT_EQ(generator_config_to_json(back), text);
  EXPECT_THROW(generator_config_from_json(R"({"seeed":1})"), ConfigError);
  EXPECT_THROW(generator_config_from_json(R"({"cue_fraction":2})"), ConfigError);
}

TEST(Synthgen, WritesCorpusAndMeta) {
  fixtures::TempDir dir("synth");
  GeneratorConfig g;
  g.en_scam = g.en_not_scam = g.pcm_scam = g.pcm_not_scam = 3;
  const auto c = generate(g);
  write_generated(dir.path(), g, c);
  const auto loaded = load_corpus(dir / "corpus.jsonl", CorpusFormat::jsonl);
  EXPECT_EQ(loaded.corpus.size(), 12u);
  const auto meta = fixtures::read_file(dir / "corpus.meta.json");
  EXPECT_NE(meta.find("\"cue_fraction\""), std::string::npos);
}
