#include "amorph/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "amorph/errors.hpp"

namespace amorph {

namespace {

IndexSet sorted_union(const std::vector<IndexSet>& sets) {
  std::set<int> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet sorted_copy(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

void require_subset_of_classes(const IndexSet& t, int d, std::size_t size, const char* what) {
  if (t.size() != size) throw PreconditionFailed(std::string(what) + " must have " + std::to_string(size) + " elements");
  for (int x : t) {
    if (x < 1 || x > d) throw PreconditionFailed(std::string(what) + " has index outside 1..d");
  }
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw PreconditionFailed(std::string(what) + " repeats an index");
}

}  // namespace

BmCheck bm_check(const Eigen::MatrixXd& eigenmatrix, const ClassPartition& pi, const Tolerance& tol) {
  const int n = static_cast<int>(eigenmatrix.rows());
  if (pi.d() + 1 != eigenmatrix.cols()) throw std::invalid_argument("partition does not match eigenmatrix size");
  const int blocks = pi.num_blocks();

  Eigen::MatrixXd column_fused = Eigen::MatrixXd::Zero(n, blocks);
  for (int i = 0; i < n; ++i) column_fused.col(pi.block_of(i)) += eigenmatrix.col(i);

  std::vector<int> group(n, -1);
  std::vector<int> representatives;
  for (int j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < representatives.size() && group[j] < 0; ++g) {
      bool same = true;
      for (int b = 0; b < blocks && same; ++b) same = tol.equal(column_fused(j, b), column_fused(representatives[g], b));
      if (same) group[j] = static_cast<int>(g);
    }
    if (group[j] < 0) {
      group[j] = static_cast<int>(representatives.size());
      representatives.push_back(j);
    }
  }

  BmCheck result;
  result.blocks = blocks;
  result.distinct_rows = static_cast<int>(representatives.size());
  bool zero_alone = std::count(group.begin(), group.end(), 0) == 1;
  result.fuses = result.distinct_rows == blocks && zero_alone;
  if (result.fuses) {
    result.rho = ClassPartition::from_rgs(group);
    result.fused_P.resize(blocks, blocks);
    for (int g = 0; g < blocks; ++g) result.fused_P.row(g) = column_fused.row(representatives[g]);
  }
  return result;
}

BmCheck bm_check(const SpectralData& spec, const ClassPartition& pi) { return bm_check(spec.P, pi, spec.tol); }

LabelMatrix fuse_labels(const LabelMatrix& labels, const ClassPartition& pi) {
  return labels.relabeled(pi.rgs(), pi.num_blocks() - 1);
}

std::optional<AxiomViolation> exact_fusion_failure(const AssociationScheme& scheme, const ClassPartition& pi) {
  try {
    validate_scheme(fuse_labels(scheme.labels(), pi));
  } catch (const AxiomViolation& violation) {
    return violation;
  }
  return std::nullopt;
}

DirectFusion fuse_direct(const AssociationScheme& scheme, const SpectralData& spec, const ClassPartition& pi) {
  if (pi.d() != scheme.d()) throw std::invalid_argument("partition does not match class count");
  DirectFusion result;
  std::optional<AssociationScheme> fused;
  try {
    fused = validate_scheme(fuse_labels(scheme.labels(), pi));
  } catch (const AxiomViolation& violation) {
    result.failure = violation;
  }
  BmCheck bm = bm_check(spec, pi);
  if (fused.has_value() != bm.fuses) {
    throw OracleDisagreement("partition " + pi.to_string(true) + ": exact oracle says " +
                             (fused ? "fusion" : "no fusion") + ", eigenmatrix criterion found " +
                             std::to_string(bm.distinct_rows) + " distinct rows for " + std::to_string(bm.blocks) +
                             " blocks");
  }
  if (fused) result.outcome = FusionOutcome{std::move(*fused), pi, *bm.rho, std::move(bm.fused_P)};
  return result;
}

std::vector<IndexSet> enumerate_fusing_tuples(const AssociationScheme& scheme, const SpectralData& spec, int k,
                                              const FusionOptions& options) {
  if (k != 2 && k != 3) throw std::invalid_argument("tuple size must be 2 or 3");
  std::vector<IndexSet> out;
  const bool exact = scheme.v() <= options.exact_check_max_v;
  for (const auto& t : k_subsets(scheme.d(), k)) {
    auto pi = ClassPartition::merging(scheme.d(), t);
    bool fuses = exact ? static_cast<bool>(fuse_direct(scheme, spec, pi)) : bm_check(spec, pi).fuses;
    if (fuses) out.push_back(t);
  }
  return out;
}

std::string TripleType::to_string() const {
  std::string out = kind == Kind::Type1 ? "type-1" : "type-2";
  for (const auto& b : dual_blocks) out += " " + format_set(b);
  return out;
}

TripleType classify_triple(const SpectralData& spec, const IndexSet& triple) {
  IndexSet t = sorted_copy(triple);
  require_subset_of_classes(t, spec.d, 3, "triple");
  BmCheck bm = bm_check(spec, ClassPartition::merging(spec.d, t));
  if (!bm.fuses) throw NotFusing("triple " + format_set(t) + " does not fuse");
  auto dual = bm.rho->nontrivial_blocks();
  TripleType type;
  type.dual_blocks = dual;
  if (dual.size() == 1 && dual[0].size() == 3) {
    type.kind = TripleType::Kind::Type1;
  } else if (dual.size() == 2 && dual[0].size() == 2 && dual[1].size() == 2) {
    type.kind = TripleType::Kind::Type2;
  } else {
    throw Falsification("fusing_triple_type", "triple " + format_set(t) + " has dual partition " + bm.rho->to_string());
  }
  return type;
}

bool contraction_check(const AssociationScheme& scheme, const SpectralData& spec, const IndexSet& t1_in,
                       const IndexSet& t2_in, const SpectralOptions& options) {
  const IndexSet t1 = sorted_copy(t1_in);
  const IndexSet t2 = sorted_copy(t2_in);
  require_subset_of_classes(t1, scheme.d(), 3, "T1");
  require_subset_of_classes(t2, scheme.d(), 3, "T2");
  if (set_intersection(t1, t2).size() != 2) throw PreconditionFailed("T1 and T2 must share exactly two classes");
  for (const auto* t : {&t1, &t2}) {
    if (exact_fusion_failure(scheme, ClassPartition::merging(scheme.d(), *t))) {
      throw PreconditionFailed("triple " + format_set(*t) + " does not fuse");
    }
  }
  const int ell = set_difference(t2, t1)[0];

  auto contracted = fuse_direct(scheme, spec, ClassPartition::merging(scheme.d(), t1));
  const auto& fused = contracted.outcome->fused;
  const int merged = contracted.outcome->pi.block_of(t1[0]);
  const int ell_image = contracted.outcome->pi.block_of(ell);

  SpectralOptions fresh = options;
  fresh.tol = spec.tol;
  const SpectralData fused_spec = spectral_decomposition(fused, fresh);
  auto pair = ClassPartition::merging(fused.d(), sorted_copy({merged, ell_image}));
  return static_cast<bool>(fuse_direct(fused, fused_spec, pair));
}

bool contraction_check(const AssociationScheme& scheme, const SpectralData& spec, const IndexSet& t1_in, int ell,
                       const SpectralOptions& options) {
  const IndexSet t1 = sorted_copy(t1_in);
  require_subset_of_classes(t1, scheme.d(), 3, "T1");
  if (ell < 1 || ell > scheme.d() || std::binary_search(t1.begin(), t1.end(), ell)) {
    throw PreconditionFailed("ell must be a class outside T1");
  }
  if (exact_fusion_failure(scheme, ClassPartition::merging(scheme.d(), t1))) {
    throw PreconditionFailed("triple " + format_set(t1) + " does not fuse");
  }
  for (const auto& pair : {IndexSet{t1[0], t1[1]}, IndexSet{t1[0], t1[2]}, IndexSet{t1[1], t1[2]}}) {
    IndexSet t2 = sorted_copy({pair[0], pair[1], ell});
    if (!exact_fusion_failure(scheme, ClassPartition::merging(scheme.d(), t2))) {
      return contraction_check(scheme, spec, t1, t2, options);
    }
  }
  throw PreconditionFailed("no triple {j,k," + std::to_string(ell) + "} with {j,k} in " + format_set(t1) + " fuses");
}

// ---------------------------------------------------------------------------
// Overlap cases

namespace {

struct Representative {
  const char* label;
  TripleType::Kind first;
  std::vector<IndexSet> first_blocks;
  TripleType::Kind second;
  std::vector<IndexSet> second_blocks;
};

const std::vector<Representative>& representatives() {
  using K = TripleType::Kind;
  static const std::vector<Representative> reps = {
      {"I.1", K::Type1, {{1, 2, 3}}, K::Type1, {{4, 5, 6}}},
      {"I.2", K::Type1, {{1, 2, 3}}, K::Type1, {{3, 4, 5}}},
      {"I.3", K::Type1, {{1, 2, 3}}, K::Type1, {{2, 3, 4}}},
      {"I.4", K::Type1, {{1, 2, 3}}, K::Type1, {{1, 2, 3}}},
      {"II.1", K::Type1, {{1, 2, 3}}, K::Type2, {{4, 5}, {6, 7}}},
      {"II.2", K::Type1, {{1, 2, 3}}, K::Type2, {{3, 4}, {5, 6}}},
      {"II.3", K::Type1, {{1, 2, 3}}, K::Type2, {{2, 3}, {4, 5}}},
      {"II.4", K::Type1, {{2, 3, 4}}, K::Type2, {{1, 2}, {4, 5}}},
      {"II.5", K::Type1, {{1, 2, 3}}, K::Type2, {{1, 2}, {3, 4}}},
      {"III.1", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{5, 6}, {7, 8}}},
      {"III.2", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{4, 5}, {6, 7}}},
      {"III.3", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{3, 4}, {5, 6}}},
      {"III.4", K::Type2, {{2, 3}, {4, 5}}, K::Type2, {{1, 2}, {5, 6}}},
      {"III.5", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{2, 3}, {5, 6}}},
      {"III.6", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{1, 2}, {4, 5}}},
      {"III.7", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{2, 3}, {4, 5}}},
      {"III.8", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{1, 2}, {3, 4}}},
      {"III.9", K::Type2, {{1, 2}, {3, 4}}, K::Type2, {{1, 4}, {2, 3}}},
  };
  return reps;
}

std::set<IndexSet> mapped(const std::vector<IndexSet>& blocks, const std::vector<int>& from,
                          const std::vector<int>& to) {
  std::set<IndexSet> out;
  for (const auto& block : blocks) {
    IndexSet image;
    for (int x : block) {
      auto it = std::lower_bound(from.begin(), from.end(), x);
      image.push_back(to[it - from.begin()]);
    }
    std::sort(image.begin(), image.end());
    out.insert(image);
  }
  return out;
}

std::optional<std::vector<int>> find_relabeling(const Representative& rep, const TripleType& a, const TripleType& b) {
  if (rep.first != a.kind || rep.second != b.kind) return std::nullopt;
  const IndexSet concrete = sorted_union({sorted_union(a.dual_blocks), sorted_union(b.dual_blocks)});
  IndexSet labels = sorted_union({sorted_union(rep.first_blocks), sorted_union(rep.second_blocks)});
  if (concrete.size() != labels.size()) return std::nullopt;
  const std::set<IndexSet> want_first(rep.first_blocks.begin(), rep.first_blocks.end());
  const std::set<IndexSet> want_second(rep.second_blocks.begin(), rep.second_blocks.end());
  do {
    if (mapped(a.dual_blocks, concrete, labels) == want_first && mapped(b.dual_blocks, concrete, labels) == want_second) {
      return labels;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

}  // namespace

bool OverlapCase::ruled_out() const {
  const auto& ok = surviving_overlap_cases();
  return std::find(ok.begin(), ok.end(), label) == ok.end();
}

const std::vector<std::string>& surviving_overlap_cases() {
  static const std::vector<std::string> labels = {"I.3", "II.3", "II.5", "III.6", "III.9"};
  return labels;
}

OverlapCase overlap_case(const SpectralData& spec, const IndexSet& t1_in, const IndexSet& t2_in) {
  const IndexSet t1 = sorted_copy(t1_in);
  const IndexSet t2 = sorted_copy(t2_in);
  require_subset_of_classes(t1, spec.d, 3, "T1");
  require_subset_of_classes(t2, spec.d, 3, "T2");
  const IndexSet common = set_intersection(t1, t2);
  if (common.size() != 2) throw PreconditionFailed("T1 and T2 must share exactly two classes");

  TripleType type1;
  TripleType type2;
  try {
    type1 = classify_triple(spec, t1);
    type2 = classify_triple(spec, t2);
  } catch (const NotFusing& e) {
    throw PreconditionFailed(e.what());
  }

  OverlapCase result = overlap_case_of_types(type1, type2);
  const IndexSet& lead = result.swapped ? t2 : t1;
  const IndexSet& tail = result.swapped ? t1 : t2;
  result.relation_map = {{set_difference(lead, tail)[0], 1},
                         {common[0], 2},
                         {common[1], 3},
                         {set_difference(tail, lead)[0], 4}};
  return result;
}

OverlapCase overlap_case_of_types(const TripleType& type1, const TripleType& type2) {
  for (bool swapped : {false, true}) {
    const TripleType& first = swapped ? type2 : type1;
    const TripleType& second = swapped ? type1 : type2;
    for (const auto& rep : representatives()) {
      auto labels = find_relabeling(rep, first, second);
      if (!labels) continue;
      OverlapCase result;
      result.label = rep.label;
      result.swapped = swapped;
      const IndexSet concrete =
          sorted_union({sorted_union(first.dual_blocks), sorted_union(second.dual_blocks)});
      for (std::size_t k = 0; k < concrete.size(); ++k) result.idempotent_map.emplace_back(concrete[k], (*labels)[k]);
      return result;
    }
  }
  throw Unclassified("dual correspondences " + type1.to_string() + " and " + type2.to_string() +
                     " match no subcase");
}

}  // namespace amorph
