#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amorph/classify.hpp"
#include "amorph/fusion.hpp"
#include "amorph/hypergraph.hpp"
#include "amorph/spectral.hpp"

namespace amorph {

struct ClaimRecord {
  std::string id;
  bool applicable = false;
  bool verified = false;
  std::string witness;

  /// Applicable but not verified.
  bool falsified() const { return applicable && !verified; }
};

struct ClaimReport {
  std::vector<ClaimRecord> claims;

  bool falsified() const;
  const ClaimRecord* find(const std::string& id) const;
};

struct VerifyOptions {
  SpectralOptions spectral{};
  HypergraphOptions hypergraph{};
  /// Exhaustive row-subset check of the eigenmatrix principal parts.
  int row_lemma_max_d = 6;
};

/// Everything the verifier derives about one scheme.
struct SchemeAnalysis {
  SpectralData spectral;
  std::vector<IndexSet> fusing_pairs;
  std::vector<IndexSet> fusing_triples;
  std::optional<UniformHypergraph> relation_graph;        // k = 2
  std::optional<UniformHypergraph> relation_hypergraph;   // k = 3
  std::optional<UniformHypergraph> idempotent_graph;      // k = 2
  std::optional<UniformHypergraph> idempotent_hypergraph; // k = 3
  std::vector<IndexSet> cores;
  std::vector<IndexSet> idempotent_cores;
  std::vector<SrgInfo> srg;
  AmorphicVerdict amorphic;
  ClaimReport report;
};

/// Claim ids, in report order:
///   two_sunflowers_imply_amorphic, all_triples_fuse_implies_amorphic,
///   amorphic_implies_all_triples_fuse, sunflower_core_fuses (d = 5),
///   the three `_dual` forms on the idempotent side, triple_contraction,
///   overlap_case_analysis, fusing_triple_type, row_subset_rank,
///   all_pairs_fuse_implies_amorphic, connected_nonpath_graph_implies_amorphic,
///   latin_relations_imply_amorphic, amorphic_latin_self_dual.
SchemeAnalysis analyze_scheme(const AssociationScheme& scheme, const VerifyOptions& options = {});

ClaimReport verify_claims(const AssociationScheme& scheme, const VerifyOptions& options = {});

/// Ordered pairs (T1, T2) of fusing triples sharing exactly two classes.
std::vector<std::pair<IndexSet, IndexSet>> overlapping_triple_pairs(const std::vector<IndexSet>& triples);

}  // namespace amorph
