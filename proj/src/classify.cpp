#include "amorph/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "amorph/errors.hpp"
#include "amorph/fusion.hpp"

namespace amorph {

namespace {

/// Groups values under tol; returns group id per entry and one representative per group.
std::vector<int> group_values(const std::vector<double>& values, const Tolerance& tol, std::vector<double>* reps) {
  std::vector<int> group(values.size(), -1);
  reps->clear();
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (std::size_t g = 0; g < reps->size(); ++g) {
      if (tol.equal(values[k], (*reps)[g])) {
        group[k] = static_cast<int>(g);
        break;
      }
    }
    if (group[k] < 0) {
      group[k] = static_cast<int>(reps->size());
      reps->push_back(values[k]);
    }
  }
  return group;
}

long long integer_sqrt(long long v) {
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

SrgInfo srg_info(const SpectralData& spec, int i) {
  if (i < 1 || i > spec.d) throw std::invalid_argument("class index outside 1..d");
  SrgInfo info;
  info.index = i;
  std::vector<double> column;
  for (int j = 1; j <= spec.d; ++j) column.push_back(spec.P(j, i));
  group_values(column, spec.tol, &info.restricted_eigenvalues);
  std::sort(info.restricted_eigenvalues.begin(), info.restricted_eigenvalues.end(), std::greater<>());
  info.strongly_regular = info.restricted_eigenvalues.size() == 2;
  info.degenerate = info.restricted_eigenvalues.size() == 1;
  if (!info.strongly_regular) return info;

  long long r0 = 0;
  long long r1 = 0;
  if (!spec.tol.near_integer(info.restricted_eigenvalues[0], &r0) ||
      !spec.tol.near_integer(info.restricted_eigenvalues[1], &r1)) {
    return info;
  }
  const long long v = spec.v;
  const long long root = integer_sqrt(v);
  if (root * root != v) return info;
  const long long k = spec.valencies[i];
  for (LatinSign sign : {LatinSign::Positive, LatinSign::Negative}) {
    const long long n = sign == LatinSign::Positive ? root : -root;
    if (n - 1 == 0 || k % (n - 1) != 0) continue;
    const long long t = k / (n - 1);
    if (t == 0 || (t > 0) != (n > 0)) continue;
    long long hi = std::max(-t, n - t);
    long long lo = std::min(-t, n - t);
    if (hi == r0 && lo == r1) {
      info.latin = LatinType{n, t, sign};
      return info;
    }
  }
  return info;
}

std::optional<CanonicalFormCertificate> canonical_form_of(const Eigen::MatrixXd& principal, const Tolerance& tol) {
  const int d = static_cast<int>(principal.rows());
  if (d < 3) throw PreconditionFailed("canonical form is defined for d >= 3");
  CanonicalFormCertificate cert;
  cert.row_perm.assign(d, 0);
  cert.col_perm.resize(d);
  std::iota(cert.col_perm.begin(), cert.col_perm.end(), 1);
  std::vector<char> used(d, 0);
  for (int c = 0; c < d; ++c) {
    std::vector<double> column(principal.col(c).data(), principal.col(c).data() + d);
    std::vector<double> reps;
    auto group = group_values(column, tol, &reps);
    if (reps.size() != 2) return std::nullopt;
    int lone = static_cast<int>(std::count(group.begin(), group.end(), 0)) == 1 ? 0 : 1;
    if (std::count(group.begin(), group.end(), lone) != 1) return std::nullopt;
    int row = static_cast<int>(std::find(group.begin(), group.end(), lone) - group.begin());
    if (used[row]) return std::nullopt;
    used[row] = 1;
    cert.row_perm[c] = row + 1;
    cert.b.push_back(reps[lone]);
    cert.a.push_back(reps[1 - lone]);
  }
  for (int c = 0; c < d; ++c) cert.t.push_back(-cert.a[c]);
  double n = cert.b[0] - cert.a[0];
  bool constant = true;
  for (int c = 1; c < d; ++c) constant = constant && tol.equal(cert.b[c] - cert.a[c], n);
  if (constant) cert.n = n;
  return cert;
}

std::optional<CanonicalFormCertificate> canonical_form_check(const SpectralData& spec) {
  if (spec.d < 3) throw PreconditionFailed("canonical form is defined for d >= 3");
  for (EigenmatrixKind kind : {EigenmatrixKind::P, EigenmatrixKind::Q}) {
    const Eigen::MatrixXd& full = kind == EigenmatrixKind::P ? spec.P : spec.Q;
    auto cert = canonical_form_of(full.bottomRightCorner(spec.d, spec.d), spec.tol);
    if (!cert) continue;
    cert->source = kind;
    if (cert->n) {
      long long n = 0;
      bool ok = spec.tol.near_integer(*cert->n, &n) && n != 0 && n != 1;
      for (int c = 0; ok && c < spec.d; ++c) {
        long long t = 0;
        ok = spec.tol.near_integer(cert->t[c], &t) && t != 0 && (t > 0) == (n > 0);
        // Row 0 must read t_i (n - 1): valencies for P, multiplicities for Q.
        ok = ok && spec.tol.equal(full(0, c + 1), static_cast<double>(t * (n - 1)));
      }
      cert->parameterized = ok;
    }
    return cert;
  }
  return std::nullopt;
}

std::optional<ClassPartition> first_non_fusion(const AssociationScheme& scheme, int limit) {
  std::optional<ClassPartition> bad;
  for_each_partition(
      scheme.d(),
      [&](const ClassPartition& pi) {
        if (exact_fusion_failure(scheme, pi)) {
          bad = pi;
          return false;
        }
        return true;
      },
      limit);
  return bad;
}

bool amorphic_oracle(const AssociationScheme& scheme, int limit) { return !first_non_fusion(scheme, limit); }

AmorphicVerdict is_amorphic(const AssociationScheme& scheme, const SpectralData& spec, int limit) {
  AmorphicVerdict verdict;
  const int d = scheme.d();
  if (d >= 3) verdict.certificate = canonical_form_check(spec);
  const bool fast = d <= 2 || verdict.certificate.has_value();
  if (d <= limit) {
    verdict.counterexample = first_non_fusion(scheme, limit);
    verdict.oracle = !verdict.counterexample;
    if (*verdict.oracle != fast) {
      throw OracleDisagreement(std::string("canonical form ") + (fast ? "found" : "absent") +
                               " but exhaustive oracle says " + (*verdict.oracle ? "amorphic" : "not amorphic"));
    }
  } else if (!fast) {
    throw LimitExceeded("no canonical form and d = " + std::to_string(d) + " exceeds the oracle limit");
  }
  verdict.amorphic = fast;
  return verdict;
}

std::optional<EphemeralPattern> ephemeral_form_of(const Eigen::MatrixXd& P, const Tolerance& tol) {
  if (P.rows() != 5 || P.cols() != 5) throw WrongClassCount("ephemeral pattern needs d = 4");
  std::vector<int> rows{1, 2, 3, 4};
  static const int kPattern[4][3] = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};  // 1 = b2
  do {
    std::vector<int> cols{1, 2, 3, 4};
    do {
      auto at = [&](int r, int c) { return P(r == 0 ? 0 : rows[r - 1], cols[c - 1]); };
      const double k1 = P(0, cols[0]);
      const double k2 = at(0, 2);
      if (!tol.equal(at(0, 3), k2) || !tol.equal(at(0, 4), k2)) continue;
      const double b1 = at(1, 1);
      const double a1 = at(2, 1);
      if (tol.equal(a1, b1) || !tol.equal(at(3, 1), a1) || !tol.equal(at(4, 1), a1)) continue;
      const double a2 = at(1, 2);
      const double b2 = at(2, 2);
      if (tol.equal(a2, b2)) continue;
      bool ok = true;
      for (int r = 0; r < 4 && ok; ++r) {
        for (int c = 0; c < 3 && ok; ++c) ok = tol.equal(at(r + 1, c + 2), kPattern[r][c] ? b2 : a2);
      }
      if (!ok) continue;
      return EphemeralPattern{k1, k2, a1, a2, b1, b2, rows, cols};
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

std::optional<EphemeralPattern> ephemeral_form_check(const SpectralData& spec) {
  if (spec.d != 4) throw WrongClassCount("ephemeral pattern needs d = 4, got " + std::to_string(spec.d));
  return ephemeral_form_of(spec.P, spec.tol);
}

int nonconstant_columns(const Eigen::MatrixXd& principal, const IndexSet& rows, const Tolerance& tol) {
  int count = 0;
  for (int c = 0; c < principal.cols(); ++c) {
    const double first = principal(rows[0] - 1, c);
    bool constant = std::all_of(rows.begin() + 1, rows.end(), [&](int r) { return tol.equal(principal(r - 1, c), first); });
    if (!constant) ++count;
  }
  return count;
}

bool row_lemma_check(const Eigen::MatrixXd& principal, const IndexSet& rows, const Tolerance& tol) {
  if (rows.size() < 2) throw PreconditionFailed("row subset must have at least two rows");
  return nonconstant_columns(principal, rows, tol) >= static_cast<int>(rows.size());
}

}  // namespace amorph
