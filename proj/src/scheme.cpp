#include "amorph/scheme.hpp"

#include <string>

#include "amorph/errors.hpp"

namespace amorph {

LabelMatrix::LabelMatrix(int v, int d, std::vector<int> labels) : v_(v), d_(d), labels_(std::move(labels)) {
  if (v <= 0 || d <= 0) {
    throw AxiomViolation(Axiom::Range, -1, -1, "v and d must be positive");
  }
  if (labels_.size() != static_cast<std::size_t>(v) * v) {
    throw AxiomViolation(Axiom::Range, -1, -1, "label matrix is not v x v");
  }
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      int label = (*this)(x, y);
      if (label < 0 || label > d) {
        throw AxiomViolation(Axiom::Range, x, y, "label " + std::to_string(label) + " outside [0, d]");
      }
    }
  }
}

LabelMatrix LabelMatrix::relabeled(std::span<const int> relabel, int new_d) const {
  std::vector<int> out(labels_.size());
  for (std::size_t c = 0; c < labels_.size(); ++c) out[c] = relabel[labels_[c]];
  return LabelMatrix(v_, new_d, std::move(out));
}

Eigen::MatrixXd IntersectionTensor::intersection_matrix(int i) const {
  Eigen::MatrixXd b(d_ + 1, d_ + 1);
  for (int h = 0; h <= d_; ++h) {
    for (int j = 0; j <= d_; ++j) b(h, j) = static_cast<double>((*this)(i, j, h));
  }
  return b;
}

Eigen::MatrixXi AssociationScheme::relation(int i) const {
  Eigen::MatrixXi a(v(), v());
  for (int x = 0; x < v(); ++x) {
    for (int y = 0; y < v(); ++y) a(x, y) = labels_(x, y) == i ? 1 : 0;
  }
  return a;
}

AssociationScheme validate_scheme(const LabelMatrix& labels) {
  const int v = labels.v();
  const int d = labels.d();

  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      bool diagonal = x == y;
      if (diagonal != (labels(x, y) == 0)) {
        throw AxiomViolation(Axiom::Identity, x, y,
                             diagonal ? "diagonal label must be 0" : "off-diagonal label 0");
      }
    }
  }
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (labels(x, y) != labels(y, x)) throw AxiomViolation(Axiom::Symmetry, x, y, "labels(x,y) != labels(y,x)");
    }
  }
  std::vector<int> first_x(d + 1, -1);
  std::vector<int> first_y(d + 1, -1);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      int h = labels(x, y);
      if (first_x[h] < 0) {
        first_x[h] = x;
        first_y[h] = y;
      }
    }
  }
  for (int h = 1; h <= d; ++h) {
    if (first_x[h] < 0) throw AxiomViolation(Axiom::Coverage, h, -1, "class " + std::to_string(h) + " is empty");
  }

  // counts[i][j] at (x, y) = (A_i A_j)(x, y) = #{z : labels(x,z) = i, labels(z,y) = j}.
  // The first cell seen in class h fixes p[.][.][h]; every later cell must agree.
  const int n = d + 1;
  IntersectionTensor p(d);
  std::vector<char> seen(n, 0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int z = 0; z < v; ++z) ++counts[static_cast<std::size_t>(labels(x, z)) * n + labels(z, y)];
      int h = labels(x, y);
      if (!seen[h]) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) p.at(i, j, h) = counts[static_cast<std::size_t>(i) * n + j];
        }
        seen[h] = 1;
        continue;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (p(i, j, h) != counts[static_cast<std::size_t>(i) * n + j]) {
            throw AxiomViolation(Axiom::Closure, x, y,
                                 "(A_" + std::to_string(i) + " A_" + std::to_string(j) +
                                     ") is not constant on class " + std::to_string(h));
          }
        }
      }
    }
  }

  std::vector<int> valencies(n);
  for (int i = 0; i < n; ++i) valencies[i] = static_cast<int>(p(i, i, 0));
  return AssociationScheme(labels, std::move(valencies), std::move(p));
}

const IntersectionTensor& intersection_numbers(const AssociationScheme& scheme) { return scheme.intersection(); }

}  // namespace amorph
