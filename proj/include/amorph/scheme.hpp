#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace amorph {

/// v x v matrix of relation labels in [0, d]; entry (x, y) names the class
/// containing the pair (x, y). Only shape and range are checked here; the
/// scheme axioms are checked by `validate_scheme`.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(int v, int d, std::vector<int> labels);

  int v() const { return v_; }
  int d() const { return d_; }
  int operator()(int x, int y) const { return labels_[static_cast<std::size_t>(x) * v_ + y]; }
  std::span<const int> data() const { return labels_; }

  /// Applies `relabel` (indexed by old label) to every entry.
  LabelMatrix relabeled(std::span<const int> relabel, int new_d) const;

  friend bool operator==(const LabelMatrix&, const LabelMatrix&) = default;

 private:
  int v_ = 0;
  int d_ = 0;
  std::vector<int> labels_;
};

/// p[i][j][h]: A_i A_j = sum_h p[i][j][h] A_h, all indices in 0..d.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int d) : d_(d), p_(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), 0) {}

  int d() const { return d_; }
  std::int64_t operator()(int i, int j, int h) const { return p_[index(i, j, h)]; }
  std::int64_t& at(int i, int j, int h) { return p_[index(i, j, h)]; }

  /// Left multiplication by A_i in the basis {A_h}: B_i[h][j] = p[i][j][h].
  Eigen::MatrixXd intersection_matrix(int i) const;

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t index(int i, int j, int h) const {
    return (static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + h;
  }
  int d_ = 0;
  std::vector<std::int64_t> p_;
};

/// A validated symmetric association scheme. Only `validate_scheme` builds one.
class AssociationScheme {
 public:
  const LabelMatrix& labels() const { return labels_; }
  int v() const { return labels_.v(); }
  int d() const { return labels_.d(); }
  const std::vector<int>& valencies() const { return valencies_; }
  int valency(int i) const { return valencies_[i]; }
  const IntersectionTensor& intersection() const { return p_; }

  /// 0/1 adjacency matrix A_i.
  Eigen::MatrixXi relation(int i) const;

 private:
  friend AssociationScheme validate_scheme(const LabelMatrix& labels);
  AssociationScheme(LabelMatrix labels, std::vector<int> valencies, IntersectionTensor p)
      : labels_(std::move(labels)), valencies_(std::move(valencies)), p_(std::move(p)) {}

  LabelMatrix labels_;
  std::vector<int> valencies_;
  IntersectionTensor p_;
};

/// Checks the four axioms in exact integer arithmetic. Closure is verified by
/// confirming every product A_i A_j is constant on every relation class.
/// Throws AxiomViolation naming the failed axiom and a witness cell.
AssociationScheme validate_scheme(const LabelMatrix& labels);

/// The intersection numbers of a validated scheme.
const IntersectionTensor& intersection_numbers(const AssociationScheme& scheme);

}  // namespace amorph
