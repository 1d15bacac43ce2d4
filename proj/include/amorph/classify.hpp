#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "amorph/partition.hpp"
#include "amorph/scheme.hpp"
#include "amorph/spectral.hpp"

namespace amorph {

enum class LatinSign { Positive, Negative };

/// Parameters of a strongly regular graph of (negative) Latin square type:
/// v = n^2, valency t(n-1), restricted eigenvalues {-t, n-t}.
struct LatinType {
  long long n = 0;
  long long t = 0;
  LatinSign sign = LatinSign::Positive;
};

struct SrgInfo {
  int index = 0;
  std::vector<double> restricted_eigenvalues;  // distinct, decreasing
  bool strongly_regular = false;
  /// Only one restricted eigenvalue (complete graph case).
  bool degenerate = false;
  std::optional<LatinType> latin;
};

SrgInfo srg_info(const SpectralData& spec, int i);

enum class EigenmatrixKind { P, Q };

/// Witness that a principal part has the canonical amorphic form: after the
/// row permutation, column i holds b_i on the diagonal and a_i elsewhere.
struct CanonicalFormCertificate {
  EigenmatrixKind source = EigenmatrixKind::P;
  /// row_perm[c] = principal row (1..d) moved to position c + 1.
  std::vector<int> row_perm;
  /// col_perm[c] = principal column (1..d) at position c + 1 (identity).
  std::vector<int> col_perm;
  std::vector<double> a;
  std::vector<double> b;
  /// b_i - a_i when constant across columns.
  std::optional<double> n;
  std::vector<double> t;  // -a_i
  /// n and every t_i are integers of one sign and row 0 equals t_i (n - 1).
  bool parameterized = false;
};

/// Looks for the canonical form in the principal part of P, then of Q.
/// Requires d >= 3 (throws PreconditionFailed otherwise).
std::optional<CanonicalFormCertificate> canonical_form_check(const SpectralData& spec);

/// The canonical-form search on one square principal part.
std::optional<CanonicalFormCertificate> canonical_form_of(const Eigen::MatrixXd& principal, const Tolerance& tol);

/// First partition (restricted-growth order) whose exact fusion fails.
std::optional<ClassPartition> first_non_fusion(const AssociationScheme& scheme,
                                               int limit = kDefaultEnumerationLimit);

/// True iff every partition of the nontrivial classes fuses (exact oracle).
bool amorphic_oracle(const AssociationScheme& scheme, int limit = kDefaultEnumerationLimit);

struct AmorphicVerdict {
  bool amorphic = false;
  std::optional<CanonicalFormCertificate> certificate;
  /// Result of the exhaustive oracle when it ran.
  std::optional<bool> oracle;
  std::optional<ClassPartition> counterexample;
};

/// Canonical-form fast path, confirmed by the oracle for d <= limit.
/// d <= 2 counts as amorphic. Throws OracleDisagreement if the two paths
/// disagree, LimitExceeded if the fast path fails and d > limit.
AmorphicVerdict is_amorphic(const AssociationScheme& scheme, const SpectralData& spec,
                            int limit = kDefaultEnumerationLimit);

struct EphemeralPattern {
  double k1 = 0, k2 = 0, a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  std::vector<int> row_perm;  // rows 1..4
  std::vector<int> col_perm;  // columns 1..4
};

/// Matches the 5x5 first eigenmatrix shape of a non-amorphic 4-class scheme
/// whose relations are all strongly regular. Throws WrongClassCount if d != 4.
std::optional<EphemeralPattern> ephemeral_form_check(const SpectralData& spec);
std::optional<EphemeralPattern> ephemeral_form_of(const Eigen::MatrixXd& P, const Tolerance& tol);

/// Number of columns of `principal` not constant on `rows` (1-based).
int nonconstant_columns(const Eigen::MatrixXd& principal, const IndexSet& rows, const Tolerance& tol);

/// At least |rows| columns are non-constant on the given rows (|rows| >= 2).
bool row_lemma_check(const Eigen::MatrixXd& principal, const IndexSet& rows, const Tolerance& tol);

}  // namespace amorph
