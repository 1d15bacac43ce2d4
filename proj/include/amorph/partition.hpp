#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace amorph {

/// Sorted set of class (or idempotent) indices.
using IndexSet = std::vector<int>;

/// A partition of {0, ..., d} in which 0 is a singleton block.
///
/// Stored as a restricted-growth string: block_of(0) = 0 and blocks are
/// numbered in order of their minimum element. Text form is "1,3|2"
/// (block {0} omitted) or "0|1,3|2".
class ClassPartition {
 public:
  ClassPartition() = default;

  /// Validates a restricted-growth string over {0..d}.
  static ClassPartition from_rgs(std::vector<int> rgs);
  /// Normalizes arbitrary disjoint blocks covering {1..d} (block {0} optional).
  static ClassPartition from_blocks(int d, const std::vector<IndexSet>& blocks);
  /// All-singleton partition.
  static ClassPartition discrete(int d);
  /// Merges exactly `merged` into one block; everything else singleton.
  static ClassPartition merging(int d, const IndexSet& merged);
  /// Parses "1,3|2" or "0|1,3|2". Throws std::invalid_argument.
  static ClassPartition parse(std::string_view text, int d);

  int d() const { return static_cast<int>(rgs_.size()) - 1; }
  int num_blocks() const { return num_blocks_; }
  int block_of(int index) const { return rgs_[index]; }
  const std::vector<int>& rgs() const { return rgs_; }
  std::vector<IndexSet> blocks() const;
  /// Blocks of size at least two, in block order.
  std::vector<IndexSet> nontrivial_blocks() const;

  std::string to_string(bool include_zero = false) const;

  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;
  friend auto operator<=>(const ClassPartition& a, const ClassPartition& b) { return a.rgs_ <=> b.rgs_; }

 private:
  explicit ClassPartition(std::vector<int> rgs);
  std::vector<int> rgs_;
  int num_blocks_ = 0;
};

inline constexpr int kDefaultEnumerationLimit = 8;

/// Every partition of {1..d} (0 kept singleton) in restricted-growth-string
/// order. Throws LimitExceeded when d > limit.
std::vector<ClassPartition> enumerate_partitions(int d, int limit = kDefaultEnumerationLimit);

/// Streaming form of `enumerate_partitions`; stops early when `visit` returns false.
void for_each_partition(int d, const std::function<bool(const ClassPartition&)>& visit,
                        int limit = kDefaultEnumerationLimit);

/// k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> k_subsets(int n, int k);

std::string format_set(const IndexSet& set);

}  // namespace amorph
