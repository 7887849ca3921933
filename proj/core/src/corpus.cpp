#include "scamtext/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "scamtext/error.hpp"
#include "scamtext/rng.hpp"

namespace scamtext {

using nlohmann::json;

std::string_view to_string(Label label) noexcept {
  return label == Label::scam ? "scam" : "not_scam";
}

std::string_view to_string(Lang lang) noexcept { return lang == Lang::en ? "en" : "pcm"; }

std::string_view to_string(SubDataset sd) noexcept {
  switch (sd) {
    case SubDataset::A: return "A";
    case SubDataset::B: return "B";
    case SubDataset::C: return "C";
    case SubDataset::D: return "D";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) noexcept {
  if (s == "scam") return Label::scam;
  if (s == "not_scam") return Label::not_scam;
  return std::nullopt;
}

std::optional<Lang> parse_lang(std::string_view s) noexcept {
  if (s == "en") return Lang::en;
  if (s == "pcm") return Lang::pcm;
  return std::nullopt;
}

std::optional<SubDataset> parse_subdataset(std::string_view s) noexcept {
  if (s == "A" || s == "a") return SubDataset::A;
  if (s == "B" || s == "b") return SubDataset::B;
  if (s == "C" || s == "c") return SubDataset::C;
  if (s == "D" || s == "d") return SubDataset::D;
  return std::nullopt;
}

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

Document make_document(std::string id, std::string text, std::string_view label,
                       std::string_view lang, std::size_t line) {
  auto l = parse_label(label);
  if (!l) throw CorpusError("unknown label \"" + std::string(label) + "\"", line);
  auto g = parse_lang(lang);
  if (!g) throw CorpusError("unknown lang \"" + std::string(lang) + "\"", line);
  if (is_blank(text)) throw CorpusError("empty text", line);
  return Document{std::move(id), std::move(text), *l, *g};
}

void add_checked(LabeledCorpus& corpus, Document doc, std::size_t line) {
  try {
    corpus.add(std::move(doc));
  } catch (const CorpusError& e) {
    throw CorpusError(e.what(), line);
  }
}

std::string string_field(const json& obj, const char* key, std::size_t line, bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw CorpusError(std::string("missing field \"") + key + "\"", line);
    return {};
  }
  if (!it->is_string()) throw CorpusError(std::string("field \"") + key + "\" is not a string", line);
  return it->get<std::string>();
}

void parse_jsonl(std::istream& in, LabeledCorpus& corpus) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (is_blank(raw)) continue;
    json obj;
    try {
      obj = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw CorpusError(std::string("malformed JSON: ") + e.what(), line);
    }
    if (!obj.is_object()) throw CorpusError("record is not a JSON object", line);
    std::string id = string_field(obj, "id", line, false);
    if (id.empty()) id = std::to_string(line);
    std::string text = string_field(obj, "text", line, true);
    std::string label = string_field(obj, "label", line, true);
    std::string lang = string_field(obj, "lang", line, true);
    add_checked(corpus, make_document(std::move(id), std::move(text), label, lang, line), line);
  }
}

// RFC 4180: fields separated by commas, optionally quoted with "", embedded
// quotes doubled, quoted fields may span lines.
struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  bool next(CsvRecord& rec) {
    rec.fields.clear();
    int c = in_.get();
    while (c == '\r' || c == '\n') {  // skip blank lines
      if (c == '\n') ++line_;
      c = in_.get();
    }
    if (c == EOF) return false;
    rec.line = line_ + 1;
    std::string field;
    bool quoted = false;
    bool field_started_quoted = false;
    for (;; c = in_.get()) {
      if (quoted) {
        if (c == EOF) throw CorpusError("unterminated quoted field", rec.line);
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(static_cast<char>(c));
        }
        continue;
      }
      if (c == '"') {
        if (!field.empty() || field_started_quoted)
          throw CorpusError("unexpected quote inside unquoted field", rec.line);
        quoted = true;
        field_started_quoted = true;
      } else if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        field_started_quoted = false;
      } else if (c == '\n' || c == EOF) {
        if (c == '\n') ++line_;
        rec.fields.push_back(std::move(field));
        return true;
      } else if (c == '\r') {
        // tolerated before \n
      } else {
        if (field_started_quoted) throw CorpusError("characters after closing quote", rec.line);
        field.push_back(static_cast<char>(c));
      }
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

void parse_csv(std::istream& in, LabeledCorpus& corpus) {
  CsvReader reader(in);
  CsvRecord header;
  if (!reader.next(header)) return;
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.fields.size(); ++i) column[header.fields[i]] = i;
  for (const char* name : {"text", "label", "lang"}) {
    if (!column.contains(name))
      throw CorpusError(std::string("missing column \"") + name + "\"", header.line);
  }
  const bool has_id = column.contains("id");
  CsvRecord rec;
  while (reader.next(rec)) {
    if (rec.fields.size() != header.fields.size())
      throw CorpusError("expected " + std::to_string(header.fields.size()) + " fields, got " +
                            std::to_string(rec.fields.size()),
                        rec.line);
    std::string id = has_id ? rec.fields[column["id"]] : std::string();
    if (id.empty()) id = std::to_string(rec.line);
    add_checked(corpus,
                make_document(std::move(id), rec.fields[column["text"]], rec.fields[column["label"]],
                              rec.fields[column["lang"]], rec.line),
                rec.line);
  }
}

}  // namespace

void LabeledCorpus::add(Document doc) {
  if (is_blank(doc.text)) throw CorpusError("document \"" + doc.id + "\" has empty text");
  if (!ids_.insert(doc.id).second) throw CorpusError("duplicate id \"" + doc.id + "\"");
  docs_.push_back(std::move(doc));
}

std::size_t LabeledCorpus::count(Label label) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(docs_.begin(), docs_.end(), [&](const Document& d) { return d.label == label; }));
}

std::size_t LabeledCorpus::count(Lang lang) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(docs_.begin(), docs_.end(), [&](const Document& d) { return d.lang == lang; }));
}

std::vector<Label> LabeledCorpus::labels() const {
  std::vector<Label> out;
  out.reserve(docs_.size());
  for (const auto& d : docs_) out.push_back(d.label);
  return out;
}

LabeledCorpus LabeledCorpus::subset(std::span<const std::size_t> indices) const {
  LabeledCorpus out(provenance_);
  out.docs_.reserve(indices.size());
  for (std::size_t i : indices) out.add(docs_.at(i));
  return out;
}

LoadResult parse_corpus(std::istream& in, CorpusFormat format, std::string provenance) {
  LoadResult result{LabeledCorpus(std::move(provenance)), {}};
  if (format == CorpusFormat::jsonl) {
    parse_jsonl(in, result.corpus);
  } else {
    parse_csv(in, result.corpus);
  }
  if (result.corpus.empty()) result.warnings.push_back("corpus is empty");
  return result;
}

LoadResult load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  return parse_corpus(in, format, path.filename().string());
}

CorpusFormat format_for_path(const std::filesystem::path& path) noexcept {
  return path.extension() == ".csv" ? CorpusFormat::csv : CorpusFormat::jsonl;
}

void write_jsonl(std::ostream& out, const LabeledCorpus& corpus) {
  for (const auto& d : corpus) {
    json obj = {{"id", d.id}, {"text", d.text}, {"label", to_string(d.label)}, {"lang", to_string(d.lang)}};
    out << obj.dump() << '\n';
  }
}

std::string preprocess(std::string_view text, bool lowercase) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '\'';
    if (!keep) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (lowercase && c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    out.push_back(static_cast<char>(c));
  }
  return out;
}

namespace {

std::size_t rounded_share(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

}  // namespace

SplitIndices split_indices(std::span<const Label> labels, double test_fraction, std::uint64_t seed,
                           bool stratified) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw ConfigError("test_fraction must lie in (0, 1)");
  SplitIndices out;
  SplitMix64 rng(seed);
  std::vector<bool> in_test(labels.size(), false);

  auto take = [&](std::vector<std::size_t> pool, std::size_t n_test) {
    shuffle(std::span<std::size_t>(pool), rng);
    for (std::size_t i = 0; i < n_test; ++i) in_test[pool[i]] = true;
  };

  if (stratified) {
    for (Label cls : {Label::scam, Label::not_scam}) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == cls) pool.push_back(i);
      if (pool.size() < 2)
        throw CorpusError("stratified split needs at least 2 documents of class " +
                          std::string(to_string(cls)) + ", found " + std::to_string(pool.size()));
      const std::size_t n_test = std::clamp<std::size_t>(rounded_share(test_fraction, pool.size()), 1,
                                                         pool.size() - 1);
      take(std::move(pool), n_test);
    }
  } else {
    if (labels.size() < 2) throw CorpusError("split needs at least 2 documents");
    std::vector<std::size_t> pool(labels.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    const std::size_t n_test =
        std::clamp<std::size_t>(rounded_share(test_fraction, pool.size()), 1, pool.size() - 1);
    take(std::move(pool), n_test);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) (in_test[i] ? out.test : out.train).push_back(i);
  return out;
}

TrainTestSplit split_train_test(const LabeledCorpus& corpus, double test_fraction, std::uint64_t seed,
                                bool stratified) {
  const auto labels = corpus.labels();
  const auto idx = split_indices(labels, test_fraction, seed, stratified);
  return {corpus.subset(idx.train), corpus.subset(idx.test)};
}

SubDatasetSelection select_subdataset(const LabeledCorpus& corpus, SubDataset which) {
  const NgramOrder order = ngram_order_of(which);
  std::vector<std::size_t> keep;
  if (which == SubDataset::A || which == SubDataset::B) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (corpus[i].lang == Lang::en) keep.push_back(i);
    if (keep.empty())
      throw CorpusError("sub-dataset " + std::string(to_string(which)) + " needs English documents");
  } else {
    const std::size_t n_en = corpus.count(Lang::en);
    const std::size_t n_pcm = corpus.count(Lang::pcm);
    if (n_en == 0 || n_pcm == 0)
      throw CorpusError("sub-dataset " + std::string(to_string(which)) +
                        " needs both English and Pidgin documents");
    const std::size_t m = std::min(n_en, n_pcm);
    std::size_t taken_en = 0;
    std::size_t taken_pcm = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto& taken = corpus[i].lang == Lang::en ? taken_en : taken_pcm;
      if (taken < m) {
        ++taken;
        keep.push_back(i);
      }
    }
  }
  LabeledCorpus sub = corpus.subset(keep);
  sub.set_provenance(corpus.provenance() + " [SD " + std::string(to_string(which)) + "]");
  return {std::move(sub), order};
}

}  // namespace scamtext
