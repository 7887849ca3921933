#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scamtext/types.hpp"

namespace scamtext {

struct Document {
  std::string id;
  std::string text;
  Label label = Label::not_scam;
  Lang lang = Lang::en;
};

/// Ordered, id-unique collection of documents. Iteration order is insertion
/// order, which is what every seeded shuffle downstream is defined against.
class LabeledCorpus {
 public:
  LabeledCorpus() = default;
  explicit LabeledCorpus(std::string provenance) : provenance_(std::move(provenance)) {}

  /// Throws CorpusError on a duplicate id or on text that is blank after trimming.
  void add(Document doc);

  std::span<const Document> docs() const noexcept { return docs_; }
  std::size_t size() const noexcept { return docs_.size(); }
  bool empty() const noexcept { return docs_.empty(); }
  const Document& operator[](std::size_t i) const { return docs_[i]; }
  auto begin() const noexcept { return docs_.begin(); }
  auto end() const noexcept { return docs_.end(); }

  std::size_t count(Label label) const noexcept;
  std::size_t count(Lang lang) const noexcept;
  std::vector<Label> labels() const;

  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// Corpus made of the documents at `indices`, in the order given.
  LabeledCorpus subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Document> docs_;
  std::unordered_set<std::string> ids_;
  std::string provenance_;
};

enum class CorpusFormat { jsonl, csv };

struct LoadResult {
  LabeledCorpus corpus;
  std::vector<std::string> warnings;
};

/// Reads a corpus file. Errors are CorpusError carrying the 1-based line
/// number of the offending record.
LoadResult load_corpus(const std::filesystem::path& path, CorpusFormat format);
LoadResult parse_corpus(std::istream& in, CorpusFormat format, std::string provenance = {});

/// Guesses the format from the extension (.csv, anything else is JSONL).
CorpusFormat format_for_path(const std::filesystem::path& path) noexcept;

void write_jsonl(std::ostream& out, const LabeledCorpus& corpus);

/// Keeps ASCII letters, digits and apostrophes. Every run of other bytes
/// (whitespace, punctuation, symbols, non-ASCII) becomes one space; the result
/// is trimmed. No stemming.
std::string preprocess(std::string_view text, bool lowercase = true);

struct TrainTestSplit {
  LabeledCorpus train;
  LabeledCorpus test;
};

/// Index form of the split: both lists hold positions into the corpus in
/// ascending order.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// The test side receives round(test_fraction * n) documents, per class when
/// stratified. Under stratification each class keeps at least one document on
/// each side. Deterministic for a given seed.
SplitIndices split_indices(std::span<const Label> labels, double test_fraction, std::uint64_t seed,
                           bool stratified = true);
TrainTestSplit split_train_test(const LabeledCorpus& corpus, double test_fraction, std::uint64_t seed,
                                bool stratified = true);

struct SubDatasetSelection {
  LabeledCorpus corpus;
  NgramOrder order;
};

/// A/B: English documents only. C/D: equal numbers of English and Pidgin
/// documents, keeping the first min(#en, #pcm) of each language in corpus
/// order. A and C are unigram models, B and D bigram.
SubDatasetSelection select_subdataset(const LabeledCorpus& corpus, SubDataset which);

constexpr NgramOrder ngram_order_of(SubDataset sd) noexcept {
  return (sd == SubDataset::A || sd == SubDataset::C) ? NgramOrder::unigram : NgramOrder::bigram;
}

}  // namespace scamtext
