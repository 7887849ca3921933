#include "scamtext/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "scamtext/error.hpp"
#include "scamtext/rng.hpp"

namespace scamtext {

using nlohmann::json;

void GeneratorConfig::validate() const {
  if (english_vocab_size < 10) throw ConfigError("english_vocab_size must be >= 10");
  if (english_vocab_size > kMaxEnglishVocab)
    throw ConfigError("english_vocab_size must be <= " + std::to_string(kMaxEnglishVocab));
  if (pidgin_vocab_size < 10) throw ConfigError("pidgin_vocab_size must be >= 10");
  if (pidgin_vocab_size > kMaxPidginVocab)
    throw ConfigError("pidgin_vocab_size must be <= " + std::to_string(kMaxPidginVocab));
  if (!(cue_fraction >= 0.0 && cue_fraction <= 1.0)) throw ConfigError("cue_fraction must lie in [0, 1]");
  for (const auto* r : {&english_length, &pidgin_length}) {
    if (r->min < 1) throw ConfigError("document length minimum must be >= 1");
    if (r->max < r->min) throw ConfigError("document length maximum is below the minimum");
  }
  for (double q : {english_zipf_offset, pidgin_zipf_offset}) {
    if (!(q > 0.0) || !std::isfinite(q)) throw ConfigError("zipf offsets must be positive and finite");
  }
  if (opener_ranks < 1) throw ConfigError("opener_ranks must be >= 1");
  if (total_docs() == 0) throw ConfigError("generator would produce no documents");
}

namespace {

const std::vector<std::string> kKeys{"schema_version", "seed",           "cells",         "english_vocab_size",
                                     "pidgin_vocab_size", "cue_fraction", "english_length", "pidgin_length",
                                     "english_zipf_offset", "pidgin_zipf_offset",
                                     "opener_length", "opener_ranks"};

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("generator config: bad value for '") + key + "'");
  }
}

LengthRange range_from(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(std::string("generator config: '") + key + "' must be [min, max]");
  return {get_as<std::size_t>(j[0], key), get_as<std::size_t>(j[1], key)};
}

}  // namespace

GeneratorConfig generator_config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("generator config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("generator config must be a JSON object");
  for (const auto& [k, v] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), k) == kKeys.end())
      throw ConfigError("generator config: unknown key '" + k + "'");
  }
  GeneratorConfig c;
  if (doc.contains("schema_version") && get_as<int>(doc["schema_version"], "schema_version") != kGeneratorConfigSchemaVersion)
    throw ConfigError("generator config: unsupported schema_version");
  if (doc.contains("seed")) c.seed = get_as<std::uint64_t>(doc["seed"], "seed");
  if (doc.contains("cells")) {
    const auto& cells = doc["cells"];
    if (!cells.is_object()) throw ConfigError("generator config: 'cells' must be an object");
    for (const auto& [k, v] : cells.items()) {
      if (k == "en_scam") c.en_scam = get_as<std::size_t>(v, "cells.en_scam");
      else if (k == "en_not_scam") c.en_not_scam = get_as<std::size_t>(v, "cells.en_not_scam");
      else if (k == "pcm_scam") c.pcm_scam = get_as<std::size_t>(v, "cells.pcm_scam");
      else if (k == "pcm_not_scam") c.pcm_not_scam = get_as<std::size_t>(v, "cells.pcm_not_scam");
      else throw ConfigError("generator config: unknown cell '" + k + "'");
    }
  }
  if (doc.contains("english_vocab_size")) c.english_vocab_size = get_as<std::size_t>(doc["english_vocab_size"], "english_vocab_size");
  if (doc.contains("pidgin_vocab_size")) c.pidgin_vocab_size = get_as<std::size_t>(doc["pidgin_vocab_size"], "pidgin_vocab_size");
  if (doc.contains("cue_fraction")) c.cue_fraction = get_as<double>(doc["cue_fraction"], "cue_fraction");
  if (doc.contains("english_length")) c.english_length = range_from(doc["english_length"], "english_length");
  if (doc.contains("pidgin_length")) c.pidgin_length = range_from(doc["pidgin_length"], "pidgin_length");
  if (doc.contains("english_zipf_offset"))
    c.english_zipf_offset = get_as<double>(doc["english_zipf_offset"], "english_zipf_offset");
  if (doc.contains("pidgin_zipf_offset"))
    c.pidgin_zipf_offset = get_as<double>(doc["pidgin_zipf_offset"], "pidgin_zipf_offset");
  if (doc.contains("opener_length")) c.opener_length = get_as<std::size_t>(doc["opener_length"], "opener_length");
  if (doc.contains("opener_ranks")) c.opener_ranks = get_as<std::size_t>(doc["opener_ranks"], "opener_ranks");
  c.validate();
  return c;
}

std::string generator_config_to_json(const GeneratorConfig& c, int indent) {
  json doc;
  doc["schema_version"] = kGeneratorConfigSchemaVersion;
  doc["seed"] = c.seed;
  doc["cells"] = {{"en_scam", c.en_scam}, {"en_not_scam", c.en_not_scam}, {"pcm_scam", c.pcm_scam},
                  {"pcm_not_scam", c.pcm_not_scam}};
  doc["english_vocab_size"] = c.english_vocab_size;
  doc["pidgin_vocab_size"] = c.pidgin_vocab_size;
  doc["cue_fraction"] = c.cue_fraction;
  doc["english_length"] = {c.english_length.min, c.english_length.max};
  doc["pidgin_length"] = {c.pidgin_length.min, c.pidgin_length.max};
  doc["english_zipf_offset"] = c.english_zipf_offset;
  doc["pidgin_zipf_offset"] = c.pidgin_zipf_offset;
  doc["opener_length"] = c.opener_length;
  doc["opener_ranks"] = c.opener_ranks;
  return doc.dump(indent);
}

namespace {

constexpr char kConsonants[] = "bcdfghjklmnprstvwxyz";  // 20
constexpr char kVowels[] = "aeiou";                     // 5

void append_syllable(std::string& out, std::size_t s) {
  out += kConsonants[s / 5];
  out += kVowels[s % 5];
}

}  // namespace

namespace {
// Multiplying by a unit modulo the code space scatters consecutive indices
// across it without collisions.
constexpr std::size_t kEnglishCodes = kMaxEnglishVocab;
constexpr std::size_t kScatter = 7919;
}  // namespace

std::string english_word(std::size_t index) {
  if (index >= kEnglishCodes) throw std::out_of_range("english_word: index out of range");
  // Codes start at 100^2 so every word spells at least three syllables.
  std::size_t v = 10000 + index * kScatter % kEnglishCodes;
  std::string rev;
  while (v > 0) {
    std::string syl;
    append_syllable(syl, v % 100);
    rev.insert(0, syl);
    v /= 100;
  }
  return rev;
}

std::string pidgin_word(std::size_t index) {
  if (index >= kMaxPidginVocab) throw std::out_of_range("pidgin_word: index out of range");
  const std::size_t code = index * kScatter % kMaxPidginVocab;
  std::string out;
  append_syllable(out, code / 100);
  append_syllable(out, code % 100);
  return out;
}

namespace {

/// Cumulative token distributions for one (language, class): the full
/// mixture and its restriction to the head ranks of each part.
class TokenSampler {
 public:
  TokenSampler(std::size_t vocab, double cue_fraction, double zipf_offset, std::size_t head_ranks, Label cls) {
    const auto excl = static_cast<std::size_t>(
        std::llround(static_cast<double>(vocab) * cue_fraction / (1.0 + cue_fraction)));
    const std::size_t shared = vocab - 2 * excl;
    // Layout: [shared | exclusive to scam | exclusive to not_scam].
    const std::size_t own_begin = shared + (cls == Label::scam ? 0 : excl);
    std::vector<double> weight(vocab, 0.0);
    std::vector<double> head(vocab, 0.0);
    auto fill = [&](std::size_t begin, std::size_t n, double mass) {
      if (n == 0 || mass == 0.0) return;
      double z = 0.0;
      for (std::size_t r = 0; r < n; ++r) z += 1.0 / (static_cast<double>(r) + zipf_offset);
      for (std::size_t r = 0; r < n; ++r) {
        weight[begin + r] = mass / (static_cast<double>(r) + zipf_offset) / z;
        if (r < head_ranks) head[begin + r] = weight[begin + r];
      }
    };
    fill(0, shared, 1.0 - cue_fraction);
    fill(own_begin, excl, cue_fraction);
    all_ = cumulate(weight);
    head_ = cumulate(head);
  }

  std::size_t draw(SplitMix64& rng) const { return pick(all_, rng); }
  std::size_t draw_head(SplitMix64& rng) const { return pick(head_, rng); }

 private:
  static std::vector<double> cumulate(const std::vector<double>& w) {
    std::vector<double> c(w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) c[i] = acc += w[i];
    return c;
  }

  static std::size_t pick(const std::vector<double>& cumulative, SplitMix64& rng) {
    const double x = rng.uniform01() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    return static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cumulative.begin(), static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
  }

  std::vector<double> all_;
  std::vector<double> head_;
};

struct Cell {
  Lang lang;
  Label label;
  std::size_t count;
};

}  // namespace

LabeledCorpus generate(const GeneratorConfig& config) {
  config.validate();
  const Cell cells[] = {{Lang::en, Label::scam, config.en_scam},
                        {Lang::en, Label::not_scam, config.en_not_scam},
                        {Lang::pcm, Label::scam, config.pcm_scam},
                        {Lang::pcm, Label::not_scam, config.pcm_not_scam}};

  struct Draft {
    std::string text;
    Label label;
    Lang lang;
  };
  std::vector<Draft> drafts;
  drafts.reserve(config.total_docs());
  for (std::size_t c = 0; c < 4; ++c) {
    const Cell& cell = cells[c];
    const bool en = cell.lang == Lang::en;
    const TokenSampler sampler(en ? config.english_vocab_size : config.pidgin_vocab_size, config.cue_fraction,
                               en ? config.english_zipf_offset : config.pidgin_zipf_offset, config.opener_ranks,
                               cell.label);
    const LengthRange len = en ? config.english_length : config.pidgin_length;
    SplitMix64 rng(derive_seed(config.seed, c));
    for (std::size_t d = 0; d < cell.count; ++d) {
      const std::size_t n = len.min + static_cast<std::size_t>(rng.uniform_below(len.max - len.min + 1));
      std::string text;
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t w = t < config.opener_length ? sampler.draw_head(rng) : sampler.draw(rng);
        if (t) text += ' ';
        text += en ? english_word(w) : pidgin_word(w);
      }
      text[0] = static_cast<char>(text[0] - 'a' + 'A');
      text += '.';
      drafts.push_back({std::move(text), cell.label, cell.lang});
    }
  }

  std::vector<std::size_t> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SplitMix64 mixer(derive_seed(config.seed, 0x5A11));
  shuffle(std::span<std::size_t>(order), mixer);

  LabeledCorpus corpus("synthetic:seed=" + std::to_string(config.seed));
  const int width = static_cast<int>(std::to_string(drafts.size()).size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& d = drafts[order[i]];
    char id[32];
    std::snprintf(id, sizeof id, "syn-%0*zu", width, i + 1);
    corpus.add(Document{id, std::move(d.text), d.label, d.lang});
  }
  return corpus;
}

void write_generated(const std::filesystem::path& dir, const GeneratorConfig& config, const LabeledCorpus& corpus) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir.string() + ": " + ec.message());
  {
    std::ofstream out(dir / "corpus.jsonl", std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir / "corpus.jsonl").string());
    write_jsonl(out, corpus);
  }
  json meta;
  meta["generator"] = "scamtext synth";
  meta["rng"] = "SplitMix64; cell c uses derive_seed(seed, c), document order uses derive_seed(seed, 0x5A11)";
  meta["config"] = json::parse(generator_config_to_json(config));
  meta["documents"] = corpus.size();
  meta["counts"] = {{"en", corpus.count(Lang::en)},
                    {"pcm", corpus.count(Lang::pcm)},
                    {"scam", corpus.count(Label::scam)},
                    {"not_scam", corpus.count(Label::not_scam)}};
  std::ofstream out(dir / "corpus.meta.json", std::ios::binary);
  if (!out) throw ConfigError("cannot write " + (dir / "corpus.meta.json").string());
  out << meta.dump(2) << "\n";
}

}  // namespace scamtext
