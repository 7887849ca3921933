#pragma once

#include <string>
#include <vector>

#include "scamtext/corpus.hpp"
#include "scamtext/features.hpp"
#include "scamtext/synthgen.hpp"

namespace bench {

// Cleaned English documents of a synthetic corpus with `per_class` documents
// per class, plus labels.
struct Cleaned {
  std::vector<std::string> docs;
  std::vector<scamtext::Label> labels;
};

inline Cleaned cleaned_corpus(std::size_t per_class, double cue = 0.3) {
  scamtext::GeneratorConfig g;
  g.cue_fraction = cue;
  g.en_scam = g.en_not_scam = per_class;
  g.pcm_scam = g.pcm_not_scam = 0;
  Cleaned c;
  for (const auto& d : scamtext::generate(g)) {
    c.docs.push_back(scamtext::preprocess(d.text));
    c.labels.push_back(d.label);
  }
  return c;
}

inline std::vector<scamtext::SparseVector> tfidf(const Cleaned& c, scamtext::NgramOrder order) {
  const auto vocab = scamtext::build_vocabulary(c.docs, order);
  std::vector<scamtext::SparseVector> X;
  for (const auto& d : c.docs) X.push_back(scamtext::vectorize(d, vocab).l2_normalized());
  return X;
}

}  // namespace bench
