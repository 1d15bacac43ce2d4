#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "amorph/scheme.hpp"
#include "amorph/tolerance.hpp"

namespace amorph {

using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct SpectralOptions {
  Tolerance tol{};
  std::uint64_t seed = 1;
  int max_retries = 20;
};

/// Eigenmatrices of a scheme.
///
/// P(j, i) is the eigenvalue of A_i on the j-th idempotent, Q = v P^{-1}.
/// Row 0 of P is the valency row; the remaining rows are sorted in
/// decreasing lexicographic order (entries compared under `tol`). Entries
/// within tolerance of an integer are snapped and flagged in `p_integral` /
/// `q_integral`.
struct SpectralData {
  int v = 0;
  int d = 0;
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  std::vector<int> valencies;
  std::vector<int> multiplicities;
  Tolerance tol{};
  BoolMatrix p_integral;
  BoolMatrix q_integral;
  /// Classes with a single restricted eigenvalue (only possible for d = 1).
  std::vector<int> single_eigenvalue_classes;

  Eigen::MatrixXd principal_P() const { return P.bottomRightCorner(d, d); }
  Eigen::MatrixXd principal_Q() const { return Q.bottomRightCorner(d, d); }
};

/// Diagonalizes a random integer combination of the (symmetrized)
/// intersection matrices and reads every P entry off the common eigenvectors.
/// Throws DegenerateSpectrum when the eigenvalues cannot be separated by the
/// grouping gap after `max_retries` fresh draws, or when multiplicities fail
/// to come out integral.
SpectralData spectral_decomposition(const AssociationScheme& scheme, const SpectralOptions& options = {});

/// Orders rows 1..d of an eigenmatrix the way `spectral_decomposition` does.
/// Returns the permutation (new row r takes old row perm[r]); row 0 is fixed.
std::vector<int> canonical_row_order(const Eigen::MatrixXd& P, const Tolerance& tol);

struct IdempotentBasis {
  std::vector<Eigen::MatrixXd> E;
  Tolerance tol{};
};

/// E_j = (1/v) sum_i Q(i, j) A_i, with every idempotent axiom checked.
IdempotentBasis idempotents(const AssociationScheme& scheme, const SpectralData& spec);

class KreinTensor {
 public:
  KreinTensor() = default;
  KreinTensor(int d, Tolerance tol)
      : d_(d), tol_(tol), q_(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), 0.0) {}

  int d() const { return d_; }
  const Tolerance& tol() const { return tol_; }
  double operator()(int i, int j, int h) const { return q_[index(i, j, h)]; }
  double& at(int i, int j, int h) { return q_[index(i, j, h)]; }

 private:
  std::size_t index(int i, int j, int h) const {
    return (static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + h;
  }
  int d_ = 0;
  Tolerance tol_{};
  std::vector<double> q_;
};

/// q[i][j][h] = (v / m_h) trace((E_i o E_j) E_h). Throws NegativeKrein.
KreinTensor krein_parameters(const AssociationScheme& scheme, const IdempotentBasis& basis);

}  // namespace amorph
