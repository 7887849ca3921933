#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "scamtext/corpus.hpp"
#include "scamtext/sparse_vector.hpp"

namespace fixtures {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

/// Empty string when both trees hold the same relative paths with identical
/// bytes; otherwise a description of the first difference.
std::string diff_trees(const std::filesystem::path& a, const std::filesystem::path& b);

scamtext::SparseVector sv(std::size_t dim, std::initializer_list<std::pair<std::uint32_t, double>> entries);
scamtext::SparseVector dense(const std::vector<double>& values);

struct Doc {
  const char* text;
  scamtext::Label label;
  scamtext::Lang lang = scamtext::Lang::en;
};
/// Ids are "d0", "d1", ...
scamtext::LabeledCorpus make_corpus(std::initializer_list<Doc> docs);

}  // namespace fixtures
