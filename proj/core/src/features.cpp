#include "scamtext/features.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "scamtext/error.hpp"

namespace scamtext {

SparseVector SparseVector::from_entries(std::size_t dim, std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.index >= dim) throw std::invalid_argument("sparse index out of range");
    if (!std::isfinite(e.weight)) throw std::invalid_argument("sparse weights must be finite");
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector v(dim);
  for (const auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().weight += e.weight;
    } else {
      v.entries_.push_back(e);
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.weight == 0.0; });
  return v;
}

double SparseVector::weight(std::uint32_t index) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->weight : 0.0;
}

double SparseVector::dot(const SparseVector& other) const noexcept {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      sum += a->weight * b->weight;
      ++a;
      ++b;
    }
  }
  return sum;
}

double SparseVector::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.weight * e.weight;
  return sum;
}

double SparseVector::squared_distance(const SparseVector& other) const noexcept {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    double diff;
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      diff = a->weight;
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      diff = b->weight;
      ++b;
    } else {
      diff = a->weight - b->weight;
      ++a;
      ++b;
    }
    sum += diff * diff;
  }
  return sum;
}

SparseVector SparseVector::l2_normalized() const {
  SparseVector out(*this);
  const double norm = std::sqrt(squared_norm());
  if (norm > 0.0) {
    for (auto& e : out.entries_) e.weight /= norm;
  }
  std::erase_if(out.entries_, [](const Entry& e) { return e.weight == 0.0; });
  return out;
}

std::vector<std::string_view> tokenize(std::string_view cleaned) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    const std::size_t start = cleaned.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    std::size_t end = cleaned.find(' ', start);
    if (end == std::string_view::npos) end = cleaned.size();
    tokens.push_back(cleaned.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::vector<std::string> ngrams(std::span<const std::string_view> tokens, NgramOrder n) {
  std::vector<std::string> out;
  if (n == NgramOrder::unigram) {
    out.reserve(tokens.size());
    for (auto t : tokens) out.emplace_back(t);
    return out;
  }
  if (tokens.size() < 2) return out;
  out.reserve(tokens.size() - 1);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string g;
    g.reserve(tokens[i].size() + tokens[i + 1].size() + 1);
    g.append(tokens[i]).push_back(' ');
    g.append(tokens[i + 1]);
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<std::uint32_t> Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Vocabulary::idf(std::uint32_t index) const {
  return std::log(static_cast<double>(n_docs_) / static_cast<double>(df(index)));
}

void Vocabulary::write_csv(std::ostream& out) const {
  out << "term,index,df\n";
  for (std::uint32_t i = 0; i < terms_.size(); ++i) {
    // Cleaned terms hold only [A-Za-z0-9' ], so no quoting is ever needed.
    out << terms_[i] << ',' << i << ',' << df_[i] << '\n';
  }
}

Vocabulary build_vocabulary(std::span<const std::string> cleaned_docs, NgramOrder order,
                            std::size_t min_df) {
  if (cleaned_docs.empty()) throw ConfigError("cannot build a vocabulary from zero documents");
  if (min_df < 1) throw ConfigError("min_df must be at least 1");

  // First pass: document frequency for every term, remembering first appearance.
  std::unordered_map<std::string, std::uint32_t> first_seen;
  std::vector<std::string> seen_terms;
  std::vector<std::uint32_t> seen_df;
  std::vector<std::uint32_t> last_doc;
  for (std::uint32_t d = 0; d < cleaned_docs.size(); ++d) {
    const auto tokens = tokenize(cleaned_docs[d]);
    for (auto& g : ngrams(tokens, order)) {
      auto [it, inserted] = first_seen.try_emplace(g, static_cast<std::uint32_t>(seen_terms.size()));
      if (inserted) {
        seen_terms.push_back(std::move(g));
        seen_df.push_back(1);
        last_doc.push_back(d);
      } else if (last_doc[it->second] != d) {
        ++seen_df[it->second];
        last_doc[it->second] = d;
      }
    }
  }

  Vocabulary vocab;
  vocab.order_ = order;
  vocab.n_docs_ = cleaned_docs.size();
  for (std::size_t i = 0; i < seen_terms.size(); ++i) {
    if (seen_df[i] < min_df) continue;
    vocab.index_.emplace(seen_terms[i], static_cast<std::uint32_t>(vocab.terms_.size()));
    vocab.terms_.push_back(std::move(seen_terms[i]));
    vocab.df_.push_back(seen_df[i]);
  }
  if (vocab.terms_.empty()) throw ConfigError("vocabulary is empty (min_df too high or no n-grams)");
  return vocab;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> term_counts(std::string_view cleaned,
                                                                 const Vocabulary& vocab) {
  const auto tokens = tokenize(cleaned);
  std::vector<std::uint32_t> hits;
  for (const auto& g : ngrams(tokens, vocab.order())) {
    if (auto idx = vocab.index_of(g)) hits.push_back(*idx);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
  for (std::uint32_t h : hits) {
    if (!counts.empty() && counts.back().first == h) {
      ++counts.back().second;
    } else {
      counts.emplace_back(h, 1);
    }
  }
  return counts;
}

}  // namespace

SparseVector vectorize(std::string_view cleaned, const Vocabulary& vocab) {
  std::vector<SparseVector::Entry> entries;
  for (auto [idx, tf] : term_counts(cleaned, vocab)) {
    const double w = static_cast<double>(tf) * vocab.idf(idx);
    if (w > 0.0) entries.push_back({idx, w});
  }
  return SparseVector::from_entries(vocab.size(), std::move(entries));
}

SparseVector count_vectorize(std::string_view cleaned, const Vocabulary& vocab) {
  std::vector<SparseVector::Entry> entries;
  for (auto [idx, tf] : term_counts(cleaned, vocab)) entries.push_back({idx, static_cast<double>(tf)});
  return SparseVector::from_entries(vocab.size(), std::move(entries));
}

}  // namespace scamtext
