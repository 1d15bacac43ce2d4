#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "amorph/generators.hpp"
#include "amorph/scheme.hpp"

namespace testing {

inline amorph::LabelMatrix labels_of(const std::vector<std::vector<int>>& rows, int d) {
  std::vector<int> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return amorph::LabelMatrix(static_cast<int>(rows.size()), d, std::move(flat));
}

inline Eigen::MatrixXd matrix_of(const std::vector<std::vector<double>>& rows) {
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline bool near(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double eps = 1e-8) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= eps;
}

/// Generated corpus, built once.
inline const std::vector<amorph::CorpusEntry>& corpus() {
  static const std::vector<amorph::CorpusEntry> entries = amorph::standard_corpus();
  return entries;
}

inline const amorph::AssociationScheme& corpus_scheme(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e.scheme;
  }
  throw std::out_of_range("no corpus scheme " + name);
}

}  // namespace testing
