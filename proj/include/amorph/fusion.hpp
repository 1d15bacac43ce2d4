#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "amorph/errors.hpp"
#include "amorph/partition.hpp"
#include "amorph/scheme.hpp"
#include "amorph/spectral.hpp"

namespace amorph {

/// Result of the eigenmatrix (Bannai-Muzychuk) fusion test.
struct BmCheck {
  bool fuses = false;
  /// Number of distinct rows of the column-fused eigenmatrix.
  int distinct_rows = 0;
  int blocks = 0;
  /// Dual partition of idempotent indices; present iff `fuses`.
  std::optional<ClassPartition> rho;
  /// Fused first eigenmatrix: rows follow rho's blocks, columns pi's blocks.
  Eigen::MatrixXd fused_P;
};

/// Sums the columns of `eigenmatrix` inside every block of `pi`, groups equal
/// rows under `tol`, and succeeds iff there are exactly as many distinct rows
/// as blocks. Works for either eigenmatrix (pass Q to fuse idempotents).
BmCheck bm_check(const Eigen::MatrixXd& eigenmatrix, const ClassPartition& pi, const Tolerance& tol);
BmCheck bm_check(const SpectralData& spec, const ClassPartition& pi);

struct FusionOutcome {
  AssociationScheme fused;
  ClassPartition pi;
  ClassPartition rho;
  Eigen::MatrixXd fused_P;
};

/// Outcome of the exact oracle. When `outcome` is empty, `failure` holds the
/// closure witness.
struct DirectFusion {
  std::optional<FusionOutcome> outcome;
  std::optional<AxiomViolation> failure;

  explicit operator bool() const { return outcome.has_value(); }
};

/// Fused label matrix for `pi` (class i becomes pi.block_of(i)).
LabelMatrix fuse_labels(const LabelMatrix& labels, const ClassPartition& pi);

/// Exact closure check of the fused configuration, without spectral data.
/// Returns the closure witness on failure.
std::optional<AxiomViolation> exact_fusion_failure(const AssociationScheme& scheme, const ClassPartition& pi);

/// Exact oracle: validates the fused label matrix in integer arithmetic and,
/// on success, derives rho from the column-fused P. Throws
/// OracleDisagreement if `bm_check` reaches a different verdict.
DirectFusion fuse_direct(const AssociationScheme& scheme, const SpectralData& spec, const ClassPartition& pi);

struct FusionOptions {
  /// fuse_direct cross-validation runs when v is at most this.
  int exact_check_max_v = 256;
};

/// k-subsets T of {1..d} (k = 2 or 3) whose merge passes bm_check, in
/// lexicographic order. Cross-validated by fuse_direct within the budget.
std::vector<IndexSet> enumerate_fusing_tuples(const AssociationScheme& scheme, const SpectralData& spec, int k,
                                              const FusionOptions& options = {});

struct TripleType {
  enum class Kind { Type1, Type2 };
  Kind kind = Kind::Type1;
  /// One 3-set for Type1, two disjoint 2-sets for Type2 (idempotent indices).
  std::vector<IndexSet> dual_blocks;

  std::string to_string() const;
};

/// Shape of the dual partition of a fusing triple. Throws NotFusing when T
/// does not fuse and Falsification when rho has any other shape.
TripleType classify_triple(const SpectralData& spec, const IndexSet& triple);

/// Whether {A_T1, A_l} fuses in the fusion scheme obtained by merging T1,
/// where T2 = (T1 \ {i}) + {l} is the overlapping fusing triple. The
/// contracted scheme's spectrum is recomputed from scratch.
/// Throws PreconditionFailed when T1 or T2 does not fuse or the shapes are wrong.
bool contraction_check(const AssociationScheme& scheme, const SpectralData& spec, const IndexSet& t1,
                       const IndexSet& t2, const SpectralOptions& options = {});

/// Form taking only ell: the partner triple is {j, k, ell} for the first pair
/// {j, k} of T1 (lexicographic) for which it fuses.
bool contraction_check(const AssociationScheme& scheme, const SpectralData& spec, const IndexSet& t1, int ell,
                       const SpectralOptions& options = {});

struct OverlapCase {
  std::string label;  // "I.1" ... "III.9"
  /// True when T1 and T2 had to swap roles (T1 <-> T2) to reach the representative.
  bool swapped = false;
  /// Concrete relation index -> representative index (1..4).
  std::vector<std::pair<int, int>> relation_map;
  /// Concrete idempotent index -> representative index.
  std::vector<std::pair<int, int>> idempotent_map;

  bool ruled_out() const;
};

/// Subcase labels that survive the overlap case analysis.
const std::vector<std::string>& surviving_overlap_cases();

/// Normalizes the correspondences of two overlapping fusing triples
/// (|T1 n T2| = 2) onto one of the 18 representative subcases.
/// Throws PreconditionFailed or Unclassified.
OverlapCase overlap_case(const SpectralData& spec, const IndexSet& t1, const IndexSet& t2);

/// The matching step of `overlap_case` on two dual correspondences alone
/// (relation_map left empty). Throws Unclassified.
OverlapCase overlap_case_of_types(const TripleType& type1, const TripleType& type2);

}  // namespace amorph
