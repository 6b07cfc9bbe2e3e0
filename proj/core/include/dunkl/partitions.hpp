#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Trailing zeros are trimmed on construction, so (2,1,0,0) and (2,1) are the
/// same value. Use padded() to recover the fixed-length form (λ_1,…,λ_N).
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError if `parts` is not weakly decreasing or has negatives.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int weight() const noexcept { return weight_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// λ_i with 0-based row index; rows past the length are 0.
  [[nodiscard]] int operator[](std::size_t row) const noexcept {
    return row < parts_.size() ? parts_[row] : 0;
  }

  /// Conjugate partition λ'.
  [[nodiscard]] Partition conjugate() const;

  /// Zero-padded to exactly n entries. Throws DomainError if length() > n.
  [[nodiscard]] std::vector<int> padded(int n) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Every partition of m with at most max_parts parts, in reverse-lexicographic
/// order: (m) first, then (m-1,1), (m-2,2), (m-2,1,1), ... .
/// m = 0 yields the single empty partition. Throws DomainError if
/// max_parts < 1.
std::vector<Partition> enumerate_partitions(int m, int max_parts);

/// Same count as enumerate_partitions(m, max_parts).size(), via the
/// recurrence p(m, k) = p(m, k-1) + p(m-k, k).
std::uint64_t count_partitions(int m, int max_parts);

/// Parses "3,1" (comma-separated, weakly decreasing). Empty string gives the
/// empty partition. Throws DomainError on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace dunkl
