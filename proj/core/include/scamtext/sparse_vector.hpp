#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scamtext {

/// Sparse vector: entries sorted by index, every stored weight is finite and
/// nonzero and every index is below dim().
class SparseVector {
 public:
  struct Entry {
    std::uint32_t index;
    double weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Sorts, sums duplicate indices and drops zeros. Throws std::invalid_argument
  /// on a non-finite weight or an out-of-range index.
  static SparseVector from_entries(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Weight at `index`, 0 when absent.
  double weight(std::uint32_t index) const noexcept;

  double dot(const SparseVector& other) const noexcept;
  double squared_norm() const noexcept;
  double squared_distance(const SparseVector& other) const noexcept;

  /// Unit-length copy; the empty vector stays empty.
  SparseVector l2_normalized() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace scamtext
