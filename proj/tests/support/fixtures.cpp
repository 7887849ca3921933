#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace fixtures {

namespace fs = std::filesystem;

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("scamtext-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

namespace {

std::vector<fs::path> relative_files(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), root));
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::string diff_trees(const fs::path& a, const fs::path& b) {
  const auto fa = relative_files(a);
  const auto fb = relative_files(b);
  if (fa != fb) return "file lists differ (" + std::to_string(fa.size()) + " vs " + std::to_string(fb.size()) + ")";
  for (const auto& rel : fa) {
    if (read_file(a / rel) != read_file(b / rel)) return "contents differ: " + rel.string();
  }
  return {};
}

scamtext::SparseVector sv(std::size_t dim, std::initializer_list<std::pair<std::uint32_t, double>> entries) {
  std::vector<scamtext::SparseVector::Entry> es;
  for (const auto& [i, w] : entries) es.push_back({i, w});
  return scamtext::SparseVector::from_entries(dim, std::move(es));
}

scamtext::SparseVector dense(const std::vector<double>& values) {
  std::vector<scamtext::SparseVector::Entry> es;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) es.push_back({static_cast<std::uint32_t>(i), values[i]});
  }
  return scamtext::SparseVector::from_entries(values.size(), std::move(es));
}

scamtext::LabeledCorpus make_corpus(std::initializer_list<Doc> docs) {
  scamtext::LabeledCorpus corpus("test");
  std::size_t i = 0;
  for (const auto& d : docs) corpus.add({"d" + std::to_string(i++), d.text, d.label, d.lang});
  return corpus;
}

}  // namespace fixtures
