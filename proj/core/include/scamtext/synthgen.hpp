#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "scamtext/corpus.hpp"

namespace scamtext {

struct LengthRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

/// Knobs of the synthetic bilingual corpus. Each language has its own
/// vocabulary split into a shared part and two class-exclusive parts; a
/// document of class c draws each token from
///   (1 - cue_fraction) * Zipf(shared) + cue_fraction * Zipf(exclusive_c),
/// with exclusive parts sized so that cue_fraction is the share of each
/// class's vocabulary that the other class never uses.
struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t en_scam = 450;
  std::size_t en_not_scam = 450;
  std::size_t pcm_scam = 50;
  std::size_t pcm_not_scam = 50;
  std::size_t english_vocab_size = 2700;
  std::size_t pidgin_vocab_size = 2400;
  double cue_fraction = 0.3;
  LengthRange english_length{10, 24};
  LengthRange pidgin_length{12, 26};
  /// Rank weights are 1 / (rank + offset); larger offsets flatten the head.
  double english_zipf_offset = 6.0;
  double pidgin_zipf_offset = 50.0;
  /// The first opener_length tokens of every document (a formulaic greeting)
  /// come from the same mixture restricted to the opener_ranks most frequent
  /// words of each part, so documents share common phrases.
  std::size_t opener_length = 2;
  std::size_t opener_ranks = 2;

  /// Throws ConfigError on the first violated constraint.
  void validate() const;
  std::size_t total_docs() const noexcept { return en_scam + en_not_scam + pcm_scam + pcm_not_scam; }
};

inline constexpr int kGeneratorConfigSchemaVersion = 1;
inline constexpr std::size_t kMaxPidginVocab = 10000;
inline constexpr std::size_t kMaxEnglishVocab = 990000;

/// Missing keys keep defaults; unknown keys throw ConfigError.
GeneratorConfig generator_config_from_json(std::string_view text);
std::string generator_config_to_json(const GeneratorConfig& config, int indent = 2);

/// Token strings. English words are three or more consonant-vowel
/// syllables; Pidgin words are exactly two, so the lexicons never collide.
std::string english_word(std::size_t index);
std::string pidgin_word(std::size_t index);

/// Deterministic for a given config on every platform. Documents of the four
/// (language, label) cells are shuffled together, so any prefix is mixed.
LabeledCorpus generate(const GeneratorConfig& config);

/// Writes <dir>/corpus.jsonl and <dir>/corpus.meta.json (config echo and
/// cell counts).
void write_generated(const std::filesystem::path& dir, const GeneratorConfig& config, const LabeledCorpus& corpus);

}  // namespace scamtext
