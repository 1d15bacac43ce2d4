#include "amorph/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "amorph/errors.hpp"

namespace amorph {

ClassPartition::ClassPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  num_blocks_ = rgs_.empty() ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
}

ClassPartition ClassPartition::from_rgs(std::vector<int> rgs) {
  if (rgs.empty() || rgs[0] != 0) throw std::invalid_argument("partition must start with block {0}");
  int next = 1;
  for (std::size_t i = 1; i < rgs.size(); ++i) {
    if (rgs[i] < 1 || rgs[i] > next) throw std::invalid_argument("not a restricted-growth string");
    if (rgs[i] == next) ++next;
  }
  return ClassPartition(std::move(rgs));
}

ClassPartition ClassPartition::from_blocks(int d, const std::vector<IndexSet>& blocks) {
  std::vector<int> owner(d + 1, -1);
  owner[0] = -2;
  int label = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    if (block.size() == 1 && block[0] == 0) continue;
    for (int x : block) {
      if (x == 0) throw std::invalid_argument("index 0 must be a singleton block");
      if (x < 0 || x > d) throw std::invalid_argument("index " + std::to_string(x) + " out of range");
      if (owner[x] != -1) throw std::invalid_argument("index " + std::to_string(x) + " repeated");
      owner[x] = label;
    }
    ++label;
  }
  std::vector<int> rgs(d + 1, 0);
  std::vector<int> renumber(label, 0);
  int next = 1;
  for (int i = 1; i <= d; ++i) {
    if (owner[i] < 0) throw std::invalid_argument("index " + std::to_string(i) + " not covered");
    if (renumber[owner[i]] == 0) renumber[owner[i]] = next++;
    rgs[i] = renumber[owner[i]];
  }
  return ClassPartition(std::move(rgs));
}

ClassPartition ClassPartition::discrete(int d) {
  std::vector<int> rgs(d + 1);
  for (int i = 0; i <= d; ++i) rgs[i] = i;
  return ClassPartition(std::move(rgs));
}

ClassPartition ClassPartition::merging(int d, const IndexSet& merged) {
  std::vector<IndexSet> blocks{merged};
  for (int i = 1; i <= d; ++i) {
    if (std::find(merged.begin(), merged.end(), i) == merged.end()) blocks.push_back({i});
  }
  return from_blocks(d, blocks);
}

ClassPartition ClassPartition::parse(std::string_view text, int d) {
  std::vector<IndexSet> blocks;
  IndexSet current;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("expected an index at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
    current.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == '|') {
      ++pos;
      blocks.push_back(std::move(current));
      current.clear();
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "'");
    }
  }
  blocks.push_back(std::move(current));
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return from_blocks(d, blocks);
}

std::vector<IndexSet> ClassPartition::blocks() const {
  std::vector<IndexSet> out(num_blocks_);
  for (int i = 0; i <= d(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

std::vector<IndexSet> ClassPartition::nontrivial_blocks() const {
  std::vector<IndexSet> out;
  for (auto& b : blocks()) {
    if (b.size() >= 2) out.push_back(std::move(b));
  }
  return out;
}

std::string ClassPartition::to_string(bool include_zero) const {
  std::string out;
  const auto bs = blocks();
  for (std::size_t b = include_zero ? 0 : 1; b < bs.size(); ++b) {
    if (!out.empty()) out += '|';
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(bs[b][k]);
    }
  }
  return out;
}

void for_each_partition(int d, const std::function<bool(const ClassPartition&)>& visit, int limit) {
  if (d < 1) throw std::invalid_argument("class count must be positive");
  if (d > limit) {
    throw LimitExceeded("partition enumeration for d = " + std::to_string(d) + " exceeds limit " +
                        std::to_string(limit));
  }
  // a[1..d] is a restricted-growth string on {1..d} with values from 1;
  // prefix_max[i] = max(a[1..i]). Advance by incrementing the rightmost
  // position that may still grow and resetting everything after it.
  std::vector<int> a(d + 1, 1);
  a[0] = 0;
  std::vector<int> prefix_max(d + 1, 1);
  prefix_max[0] = 0;
  while (true) {
    if (!visit(ClassPartition::from_rgs(a))) return;
    int i = d;
    while (i >= 2 && a[i] > prefix_max[i - 1]) --i;
    if (i < 2) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int k = i + 1; k <= d; ++k) {
      a[k] = 1;
      prefix_max[k] = prefix_max[i];
    }
  }
}

std::vector<ClassPartition> enumerate_partitions(int d, int limit) {
  std::vector<ClassPartition> out;
  for_each_partition(
      d,
      [&](const ClassPartition& p) {
        out.push_back(p);
        return true;
      },
      limit);
  return out;
}

std::vector<IndexSet> k_subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet current(k);
  for (int i = 0; i < k; ++i) current[i] = i + 1;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::string format_set(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(set[k]);
  }
  return out + "}";
}

}  // namespace amorph
