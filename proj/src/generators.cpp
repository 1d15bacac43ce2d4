#include "amorph/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "amorph/errors.hpp"
#include "amorph/field.hpp"

namespace amorph {

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

SlopeGrouping::SlopeGrouping(int n, std::vector<IndexSet> groups) : n_(n), groups_(std::move(groups)) {
  if (n < 2) throw std::invalid_argument("slope grouping needs n >= 2");
  class_of_.assign(n + 1, 0);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].empty()) throw std::invalid_argument("empty slope group");
    std::sort(groups_[g].begin(), groups_[g].end());
    for (int s : groups_[g]) {
      if (s < 0 || s > n) throw std::invalid_argument("slope " + std::to_string(s) + " outside 0.." + std::to_string(n));
      if (class_of_[s] != 0) throw std::invalid_argument("slope " + std::to_string(s) + " in two groups");
      class_of_[s] = static_cast<int>(g) + 1;
    }
  }
  for (int s = 0; s <= n; ++s) {
    if (class_of_[s] == 0) throw std::invalid_argument("slope " + std::to_string(s) + " not covered");
  }
}

SlopeGrouping SlopeGrouping::singletons(int n) {
  std::vector<IndexSet> groups;
  for (int s = 0; s <= n; ++s) groups.push_back({s});
  return SlopeGrouping(n, std::move(groups));
}

SlopeGrouping SlopeGrouping::sized(int n, const std::vector<int>& sizes) {
  std::vector<IndexSet> groups;
  int next = 0;
  for (int size : sizes) {
    if (size < 1) throw std::invalid_argument("group sizes must be positive");
    IndexSet group;
    for (int k = 0; k < size; ++k) group.push_back(next++);
    groups.push_back(std::move(group));
  }
  if (next != n + 1) throw std::invalid_argument("group sizes must sum to n + 1");
  return SlopeGrouping(n, std::move(groups));
}

SlopeGrouping SlopeGrouping::parse(std::string_view text, int n) {
  std::vector<IndexSet> groups;
  for (auto block : split(text, '|')) {
    IndexSet group;
    for (auto token : split(block, ',')) {
      token = trim(token);
      group.push_back(token == "inf" ? n : parse_int(token));
    }
    groups.push_back(std::move(group));
  }
  return SlopeGrouping(n, std::move(groups));
}

AssociationScheme gen_net_scheme(int n, const SlopeGrouping& grouping) {
  SmallField field(n);
  if (grouping.n() != n) throw std::invalid_argument("grouping built for a different n");
  const int v = n * n;
  std::vector<int> labels(static_cast<std::size_t>(v) * v, 0);
  for (int a = 0; a < v; ++a) {
    const int x1 = a / n;
    const int y1 = a % n;
    for (int b = 0; b < v; ++b) {
      if (a == b) continue;
      const int x2 = b / n;
      const int y2 = b % n;
      const int slope = x1 == x2 ? n : field.div(field.sub(y2, y1), field.sub(x2, x1));
      labels[static_cast<std::size_t>(a) * v + b] = grouping.class_of(slope);
    }
  }
  return validate_scheme(LabelMatrix(v, grouping.d(), std::move(labels)));
}

AssociationScheme gen_cyclotomic(const CyclotomicSpec& spec) {
  SmallField field(spec.q);
  const int q = spec.q;
  if (spec.d < 1 || (q - 1) % spec.d != 0) {
    throw PreconditionFailed("d = " + std::to_string(spec.d) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  const int g = spec.generator.value_or(field.primitive_element());
  if (g <= 0 || g >= q || field.multiplicative_order(g) != q - 1) {
    throw PreconditionFailed("generator " + std::to_string(g) + " is not primitive in GF(" + std::to_string(q) + ")");
  }
  std::vector<int> log(q, -1);
  for (int k = 0, x = 1; k < q - 1; ++k, x = field.mul(x, g)) log[x] = k;
  if (log[field.neg(1)] % spec.d != 0) {
    throw NotSymmetric("-1 lies outside the index-" + std::to_string(spec.d) + " subgroup of GF(" + std::to_string(q) +
                       ")*");
  }
  std::vector<int> labels(static_cast<std::size_t>(q) * q, 0);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (x != y) labels[static_cast<std::size_t>(x) * q + y] = log[field.sub(x, y)] % spec.d + 1;
    }
  }
  return validate_scheme(LabelMatrix(q, spec.d, std::move(labels)));
}

AssociationScheme gen_hamming_binary(int m) {
  if (m < 1 || m > 10) throw LimitExceeded("binary Hamming scheme needs 1 <= m <= 10, got " + std::to_string(m));
  const int v = 1 << m;
  std::vector<int> labels(static_cast<std::size_t>(v) * v);
  for (unsigned x = 0; x < static_cast<unsigned>(v); ++x) {
    for (unsigned y = 0; y < static_cast<unsigned>(v); ++y) labels[x * v + y] = std::popcount(x ^ y);
  }
  return validate_scheme(LabelMatrix(v, m, std::move(labels)));
}

AssociationScheme gen_complete(int v) {
  if (v < 2) throw PreconditionFailed("complete scheme needs v >= 2");
  std::vector<int> labels(static_cast<std::size_t>(v) * v, 1);
  for (int x = 0; x < v; ++x) labels[static_cast<std::size_t>(x) * v + x] = 0;
  return validate_scheme(LabelMatrix(v, 1, std::move(labels)));
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  auto net = [&](int n, const std::vector<int>& sizes) {
    std::string name = "net" + std::to_string(n * n) + "d" + std::to_string(sizes.size());
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 1; })) {
      name += "_";
      for (int s : sizes) name += std::to_string(s);
    }
    out.push_back({name, gen_net_scheme(n, SlopeGrouping::sized(n, sizes))});
  };
  net(2, {3});
  net(3, {1, 1, 1, 1});
  net(3, {2, 1, 1});
  net(3, {3, 1});
  net(3, {2, 2});
  net(4, {1, 1, 1, 1, 1});
  net(4, {2, 1, 1, 1});
  net(4, {2, 2, 1});
  net(4, {3, 1, 1});
  net(5, {1, 1, 1, 1, 1, 1});
  net(5, {2, 1, 1, 1, 1});
  net(5, {2, 2, 1, 1});
  net(5, {3, 1, 1, 1});
  net(5, {2, 2, 2});
  net(7, {4, 1, 1, 1, 1});
  net(7, {3, 2, 1, 1, 1});
  net(7, {2, 2, 2, 1, 1});
  net(7, {2, 2, 2, 2});
  net(8, {5, 1, 1, 1, 1});
  net(8, {2, 2, 2, 2, 1});

  for (int m = 2; m <= 6; ++m) out.push_back({"hamming" + std::to_string(m), gen_hamming_binary(m)});

  const std::pair<int, int> cyclotomic[] = {{5, 2},  {7, 3},  {9, 2},  {9, 4},   {11, 5},  {13, 2},
                                            {13, 3}, {13, 6}, {16, 3}, {16, 5}, {25, 3}, {25, 6}};
  for (auto [q, d] : cyclotomic) {
    out.push_back({"cyc" + std::to_string(q) + "d" + std::to_string(d), gen_cyclotomic({q, d, std::nullopt})});
  }
  out.push_back({"complete2", gen_complete(2)});
  out.push_back({"complete5", gen_complete(5)});

  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace amorph
