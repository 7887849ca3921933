#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scamtext/sparse_vector.hpp"
#include "scamtext/types.hpp"

namespace scamtext {

/// Maximal non-empty runs between spaces of already-preprocessed text.
std::vector<std::string_view> tokenize(std::string_view cleaned);

/// n = 1: the tokens themselves; n = 2: adjacent pairs joined by one space.
std::vector<std::string> ngrams(std::span<const std::string_view> tokens, NgramOrder n);

/// N-gram to dense index map with per-term document frequencies. Immutable
/// once built.
class Vocabulary {
 public:
  NgramOrder order() const noexcept { return order_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t n_docs() const noexcept { return n_docs_; }

  std::optional<std::uint32_t> index_of(const std::string& term) const;
  const std::string& term(std::uint32_t index) const { return terms_.at(index); }
  std::uint32_t df(std::uint32_t index) const { return df_.at(index); }
  std::span<const std::string> terms() const noexcept { return terms_; }

  /// ln(n_docs / df); zero for a term present in every training document.
  double idf(std::uint32_t index) const;

  /// Debug dump: `term,index,df` rows sorted by index.
  void write_csv(std::ostream& out) const;

 private:
  friend Vocabulary build_vocabulary(std::span<const std::string>, NgramOrder, std::size_t);

  NgramOrder order_ = NgramOrder::unigram;
  std::size_t n_docs_ = 0;
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> df_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Terms occurring in at least `min_df` of the given cleaned documents,
/// indexed in order of first appearance. Throws ConfigError when no term
/// survives (or no documents are given).
Vocabulary build_vocabulary(std::span<const std::string> cleaned_docs, NgramOrder order,
                            std::size_t min_df = 1);

/// tf-idf weights: raw count times ln(n_docs / df). Out-of-vocabulary n-grams
/// are ignored; terms with df == n_docs get weight zero and are omitted.
SparseVector vectorize(std::string_view cleaned, const Vocabulary& vocab);

/// Raw n-gram counts over the vocabulary.
SparseVector count_vectorize(std::string_view cleaned, const Vocabulary& vocab);

}  // namespace scamtext
