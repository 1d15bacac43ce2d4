#include "amorph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "amorph/errors.hpp"

namespace amorph {

namespace {

// S_i = D^{1/2} B_i D^{-1/2} with D = diag(k). Symmetric because
// k_h p_ij^h = k_j p_ih^j (both count the same triangles).
std::vector<Eigen::MatrixXd> symmetrized_intersection_matrices(const AssociationScheme& scheme) {
  const int d = scheme.d();
  std::vector<Eigen::MatrixXd> out;
  out.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    Eigen::MatrixXd b = scheme.intersection().intersection_matrix(i);
    for (int h = 0; h <= d; ++h) {
      for (int j = 0; j <= d; ++j) {
        b(h, j) *= std::sqrt(static_cast<double>(scheme.valency(h)) / scheme.valency(j));
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

bool lex_greater(const Eigen::MatrixXd& m, int a, int b, const Tolerance& tol) {
  for (int c = 0; c < m.cols(); ++c) {
    if (!tol.equal(m(a, c), m(b, c))) return m(a, c) > m(b, c);
  }
  return false;
}

void snap(Eigen::MatrixXd& m, BoolMatrix& integral, const Tolerance& tol) {
  integral.resize(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      long long k = 0;
      integral(r, c) = tol.near_integer(m(r, c), &k);
      if (integral(r, c)) m(r, c) = static_cast<double>(k);
    }
  }
}

}  // namespace

std::vector<int> canonical_row_order(const Eigen::MatrixXd& P, const Tolerance& tol) {
  std::vector<int> order(P.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + 1, order.end(), [&](int a, int b) { return lex_greater(P, a, b, tol); });
  return order;
}

SpectralData spectral_decomposition(const AssociationScheme& scheme, const SpectralOptions& options) {
  const int d = scheme.d();
  const int n = d + 1;
  const int v = scheme.v();
  const Tolerance& tol = options.tol;
  const auto sym = symmetrized_intersection_matrices(scheme);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coefficient(1, 97);
  Eigen::MatrixXd vectors;
  bool separated = false;
  for (int attempt = 0; attempt <= options.max_retries && !separated; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i <= d; ++i) combo += coefficient(rng) * sym[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(combo);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXd& values = solver.eigenvalues();
    separated = true;
    for (int j = 1; j < n; ++j) {
      if (values(j) - values(j - 1) < tol.grouping_gap()) separated = false;
    }
    if (separated) vectors = solver.eigenvectors();
  }
  if (!separated) {
    throw DegenerateSpectrum("eigenvalues of the combined intersection matrix collide after " +
                             std::to_string(options.max_retries) + " retries");
  }

  Eigen::MatrixXd raw(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd w = vectors.col(j).normalized();
    for (int i = 0; i < n; ++i) raw(j, i) = w.dot(sym[i] * w);
  }

  int valency_row = -1;
  for (int j = 0; j < n && valency_row < 0; ++j) {
    bool match = true;
    for (int i = 0; i < n; ++i) match = match && tol.equal(raw(j, i), scheme.valency(i));
    if (match) valency_row = j;
  }
  if (valency_row < 0) throw DegenerateSpectrum("no common eigenvector carries the valencies");
  raw.row(0).swap(raw.row(valency_row));

  SpectralData spec;
  spec.v = v;
  spec.d = d;
  spec.tol = tol;
  spec.valencies = scheme.valencies();
  spec.P = raw;
  snap(spec.P, spec.p_integral, tol);

  const auto order = canonical_row_order(spec.P, tol);
  Eigen::MatrixXd sorted(n, n);
  BoolMatrix sorted_integral(n, n);
  for (int r = 0; r < n; ++r) {
    sorted.row(r) = spec.P.row(order[r]);
    sorted_integral.row(r) = spec.p_integral.row(order[r]);
  }
  spec.P = std::move(sorted);
  spec.p_integral = std::move(sorted_integral);

  spec.multiplicities.resize(n);
  long long total = 0;
  for (int j = 0; j < n; ++j) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += spec.P(j, i) * spec.P(j, i) / scheme.valency(i);
    double m = v / norm;
    long long rounded = 0;
    if (!tol.near_integer(m, &rounded) || rounded <= 0) {
      throw DegenerateSpectrum("multiplicity of row " + std::to_string(j) + " is not a positive integer: " +
                               std::to_string(m));
    }
    spec.multiplicities[j] = static_cast<int>(rounded);
    total += rounded;
  }
  if (total != v) throw DegenerateSpectrum("multiplicities do not sum to v");

  spec.Q = v * spec.P.fullPivLu().inverse();
  snap(spec.Q, spec.q_integral, tol);

  Eigen::MatrixXd pq = spec.P * spec.Q;
  const double limit = 1e-8 * v + tol.abs * v;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      double expect = r == c ? v : 0.0;
      if (std::abs(pq(r, c) - expect) > limit) throw DegenerateSpectrum("P Q differs from v I");
    }
  }

  for (int i = 1; i <= d; ++i) {
    bool single = true;
    for (int j = 2; j <= d; ++j) single = single && tol.equal(spec.P(j, i), spec.P(1, i));
    if (single) spec.single_eigenvalue_classes.push_back(i);
  }
  return spec;
}

IdempotentBasis idempotents(const AssociationScheme& scheme, const SpectralData& spec) {
  const int v = scheme.v();
  const int n = scheme.d() + 1;
  const Tolerance& tol = spec.tol;
  std::vector<Eigen::MatrixXd> relations;
  relations.reserve(n);
  for (int i = 0; i < n; ++i) relations.push_back(scheme.relation(i).cast<double>());

  IdempotentBasis basis;
  basis.tol = tol;
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(v, v);
    for (int i = 0; i < n; ++i) e += spec.Q(i, j) * relations[i];
    basis.E.push_back(e / v);
  }

  auto residual_check = [&](int j, double residual, const char* what) {
    if (residual > tol.abs + tol.rel * v) throw IdempotencyViolation(j, residual, what);
  };
  Eigen::MatrixXd j_over_v = Eigen::MatrixXd::Constant(v, v, 1.0 / v);
  residual_check(0, (basis.E[0] - j_over_v).cwiseAbs().maxCoeff(), "E_0 = J/v");
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(v, v);
  for (const auto& e : basis.E) sum += e;
  residual_check(0, (sum - Eigen::MatrixXd::Identity(v, v)).cwiseAbs().maxCoeff(), "sum E_j = I");
  for (int j = 0; j < n; ++j) {
    const auto& e = basis.E[j];
    residual_check(j, (e - e.transpose()).cwiseAbs().maxCoeff(), "symmetry");
    residual_check(j, std::abs(e.trace() - spec.multiplicities[j]), "trace E_j = m_j");
    for (int h = j; h < n; ++h) {
      Eigen::MatrixXd prod = e * basis.E[h];
      double residual = h == j ? (prod - e).cwiseAbs().maxCoeff() : prod.cwiseAbs().maxCoeff();
      residual_check(j, residual, h == j ? "E_j E_j = E_j" : "E_j E_h = 0");
    }
  }
  return basis;
}

KreinTensor krein_parameters(const AssociationScheme& scheme, const IdempotentBasis& basis) {
  const int d = scheme.d();
  const int v = scheme.v();
  const Tolerance& tol = basis.tol;
  KreinTensor q(d, tol);
  std::vector<double> ranks(d + 1);
  for (int h = 0; h <= d; ++h) ranks[h] = std::round(basis.E[h].trace());

  for (int i = 0; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Eigen::MatrixXd schur = basis.E[i].cwiseProduct(basis.E[j]);
      for (int h = 0; h <= d; ++h) {
        // trace(X E_h) = sum of X o E_h for symmetric E_h.
        double value = v / ranks[h] * schur.cwiseProduct(basis.E[h]).sum();
        long long k = 0;
        if (tol.near_integer(value, &k)) value = static_cast<double>(k);
        if (value < -tol.abs) throw NegativeKrein(i, j, h, value);
        if (value < 0.0) value = 0.0;
        q.at(i, j, h) = value;
        q.at(j, i, h) = value;
      }
    }
  }
  return q;
}

}  // namespace amorph
