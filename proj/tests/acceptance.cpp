// Acceptance checks over the shipped corpus. Usage: acceptance [criterion...]
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "amorph/claims.hpp"
#include "amorph/classify.hpp"
#include "amorph/errors.hpp"
#include "amorph/fusion.hpp"
#include "amorph/generators.hpp"
#include "amorph/hypergraph.hpp"
#include "amorph/scheme_io.hpp"
#include "amorph/spectral.hpp"

using namespace amorph;
namespace fs = std::filesystem;

namespace {

struct Loaded {
  std::string name;
  AssociationScheme scheme;
  SpectralData spec;
};

const std::vector<Loaded>& corpus() {
  static const std::vector<Loaded> entries = [] {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(AMORPH_CORPUS_DIR)) {
      if (e.path().extension() == ".scheme") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Loaded> out;
    for (const auto& f : files) {
      auto s = load_scheme(f);
      auto spec = spectral_decomposition(s);
      out.push_back({f.stem().string(), std::move(s), std::move(spec)});
    }
    return out;
  }();
  return entries;
}

const Loaded& named(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("corpus has no " + name);
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Rows sorted lexicographically, so two matrices can be compared up to row order.
Eigen::MatrixXd sorted_rows(const Eigen::MatrixXd& m) {
  std::vector<Eigen::RowVectorXd> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    for (int c = 0; c < a.size(); ++c) {
      if (std::abs(a(c) - b(c)) > 1e-6) return a(c) < b(c);
    }
    return false;
  });
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) out.row(r) = rows[r];
  return out;
}

/// Collects failures and a summary for one criterion.
struct Result {
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

Result amorphic_net() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  auto net = gen_net_scheme(4, SlopeGrouping::singletons(4));
  auto spec = spectral_decomposition(net);
  int partitions = 0;
  for_each_partition(net.d(), [&](const ClassPartition& pi) {
    ++partitions;
    r.expect(!exact_fusion_failure(net, pi), "partition " + pi.to_string() + " does not fuse");
    return true;
  });
  r.expect(partitions == 52, "expected 52 partitions, saw " + std::to_string(partitions));
  r.expect(amorphic_oracle(net), "amorphic_oracle false");
  auto cert = canonical_form_check(spec);
  if (!cert) {
    r.fail("no canonical form");
  } else {
    r.expect(cert->parameterized, "canonical form not integral");
    r.expect(cert->n && *cert->n == 4.0, "n != 4");
    r.expect(cert->t == std::vector<double>(5, 1.0), "t != (1,1,1,1,1)");
  }
  const double diff = max_abs(spec.P - spec.Q);
  r.expect(diff <= 1e-8, "max |P - Q| = " + std::to_string(diff));
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << partitions << " partitions fuse, n = 4, t = (1,1,1,1,1), max |P-Q| = " << diff << ", " << elapsed << " s";
  r.summary = os.str();
  return r;
}

Result two_sunflowers() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  int schemes = 0;
  int with_two = 0;
  for (const auto& e : corpus()) {
    if (e.scheme.d() < 5) continue;
    ++schemes;
    auto h = build_fusing_hypergraph(e.scheme, e.spec, 3, Side::Relations);
    auto cores = sunflower_cores(h);
    if (cores.size() < 2) continue;
    ++with_two;
    r.expect(is_amorphic(e.scheme, e.spec).amorphic, e.name + ": two cores but not amorphic");
  }
  r.expect(with_two > 0, "no scheme with two cores");
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << schemes << " schemes with d >= 5, " << with_two << " with >= 2 cores, all amorphic, " << elapsed << " s";
  r.summary = os.str();
  return r;
}

Result complete_iff_amorphic() {
  Result r;
  int schemes = 0;
  int complete = 0;
  for (const auto& e : corpus()) {
    const int d = e.scheme.d();
    if (d != 5 && d != 6) continue;
    ++schemes;
    bool full = build_fusing_hypergraph(e.scheme, e.spec, 3, Side::Relations).is_complete();
    bool amorphic = amorphic_oracle(e.scheme);
    complete += full;
    r.expect(full == amorphic, e.name + ": complete = " + std::to_string(full) + ", amorphic = " +
                                   std::to_string(amorphic));
  }
  r.expect(complete > 0 && complete < schemes, "both directions need examples");
  r.summary = std::to_string(schemes) + " schemes with d in {5,6}, " + std::to_string(complete) +
              " complete and amorphic, the rest neither";
  return r;
}

Result core_pairs_fuse() {
  Result r;
  int cores_checked = 0;
  for (const auto& e : corpus()) {
    if (e.scheme.d() != 5) continue;
    auto h = build_fusing_hypergraph(e.scheme, e.spec, 3, Side::Relations);
    for (const auto& core : sunflower_cores(h)) {
      ++cores_checked;
      auto direct = fuse_direct(e.scheme, e.spec, ClassPartition::merging(5, core));
      r.expect(static_cast<bool>(direct), e.name + ": core " + format_set(core) + " does not fuse");
    }
  }
  r.expect(cores_checked > 0, "no cores found");
  r.summary = std::to_string(cores_checked) + " cores in d = 5 schemes, every pair fuses";
  return r;
}

Result contraction() {
  Result r;
  int pairs = 0;
  int ell_checks = 0;
  std::set<std::string> positive;
  for (const auto& e : corpus()) {
    auto triples = enumerate_fusing_tuples(e.scheme, e.spec, 3);
    for (const auto& [t1, t2] : overlapping_triple_pairs(triples)) {
      ++pairs;
      bool ok = contraction_check(e.scheme, e.spec, t1, t2);
      r.expect(ok, e.name + ": " + format_set(t1) + " with " + format_set(t2));
      if (ok) positive.insert(e.name);
    }
    for (const auto& t1 : triples) {
      for (int ell = 1; ell <= e.scheme.d(); ++ell) {
        if (std::count(t1.begin(), t1.end(), ell)) continue;
        try {
          bool ok = contraction_check(e.scheme, e.spec, t1, ell);
          ++ell_checks;
          r.expect(ok, e.name + ": " + format_set(t1) + ", l = " + std::to_string(ell));
        } catch (const PreconditionFailed&) {
          // No fusing partner triple through ell: not admissible.
        }
      }
    }
  }
  r.expect(positive.count("net16d5") && positive.count("net25d6"), "not exercised on net16d5 and net25d6");
  r.summary = std::to_string(pairs) + " (T1, T2) pairs and " + std::to_string(ell_checks) +
              " (T1, l) pairs contract to fusing pairs across " + std::to_string(positive.size()) + " schemes";
  return r;
}

Result triple_types() {
  Result r;
  int type1 = 0;
  int type2 = 0;
  for (const auto& e : corpus()) {
    for (const auto& t : enumerate_fusing_tuples(e.scheme, e.spec, 3)) {
      try {
        auto type = classify_triple(e.spec, t);
        if (type.kind == TripleType::Kind::Type1) {
          ++type1;
          r.expect(type.dual_blocks.size() == 1 && type.dual_blocks[0].size() == 3,
                   e.name + ": bad type-1 shape at " + format_set(t));
        } else {
          ++type2;
          bool ok = type.dual_blocks.size() == 2 && type.dual_blocks[0].size() == 2 &&
                    type.dual_blocks[1].size() == 2;
          r.expect(ok, e.name + ": bad type-2 shape at " + format_set(t));
        }
      } catch (const Error& ex) {
        r.fail(e.name + ": " + format_set(t) + ": " + ex.what());
      }
    }
  }
  const auto& h4 = named("hamming4");
  auto type = classify_triple(h4.spec, {1, 2, 3});
  r.expect(type.kind == TripleType::Kind::Type2, "H(4,2) {1,2,3} is not type 2");
  r.expect(type.dual_blocks == std::vector<IndexSet>{{1, 3}, {2, 4}}, "H(4,2) {1,2,3} dual blocks " + type.to_string());
  r.summary = std::to_string(type1) + " type-1 and " + std::to_string(type2) +
              " type-2 triples; H(4,2) {1,2,3} is type 2 with {1,3},{2,4}";
  return r;
}

Result overlap_cases() {
  Result r;
  const auto& surviving = surviving_overlap_cases();
  std::map<std::string, int> histogram;
  for (const auto& e : corpus()) {
    if (e.scheme.d() < 4) continue;
    bool amorphic = is_amorphic(e.scheme, e.spec).amorphic;
    auto triples = enumerate_fusing_tuples(e.scheme, e.spec, 3);
    for (const auto& [t1, t2] : overlapping_triple_pairs(triples)) {
      try {
        auto c = overlap_case(e.spec, t1, t2);
        ++histogram[c.label];
        r.expect(std::find(surviving.begin(), surviving.end(), c.label) != surviving.end(),
                 e.name + ": ruled-out case " + c.label);
        r.expect(!amorphic || c.label == "I.3", e.name + ": amorphic scheme gives " + c.label);
      } catch (const Error& ex) {
        r.fail(e.name + ": " + format_set(t1) + ", " + format_set(t2) + ": " + ex.what());
      }
    }
  }
  r.expect(histogram.count("I.3") > 0, "I.3 never exercised");
  std::ostringstream os;
  os << "cases seen:";
  for (const auto& [label, count] : histogram) os << ' ' << label << " x" << count;
  r.summary = os.str();
  return r;
}

Result oracle_equivalence() {
  Result r;
  long long checks = 0;
  int schemes = 0;
  for (const auto& e : corpus()) {
    if (e.scheme.d() > 5 || e.scheme.v() > 64) continue;
    ++schemes;
    for_each_partition(e.scheme.d(), [&](const ClassPartition& pi) {
      ++checks;
      const std::string where = e.name + " " + pi.to_string();
      auto bm = bm_check(e.spec, pi);
      const bool exact = !exact_fusion_failure(e.scheme, pi);
      if (bm.fuses != exact) {
        r.fail(where + ": bm_check " + (bm.fuses ? "fuses" : "fails") + ", exact closure disagrees");
        return true;
      }
      try {
        auto direct = fuse_direct(e.scheme, e.spec, pi);
        r.expect(static_cast<bool>(direct) == exact, where + ": fuse_direct verdict differs");
      } catch (const OracleDisagreement& ex) {
        r.fail(where + ": " + ex.what());
      }
      if (!exact) return true;
      auto fused = validate_scheme(fuse_labels(e.scheme.labels(), pi));
      auto fused_spec = spectral_decomposition(fused);
      if (bm.fused_P.rows() != fused_spec.P.rows() || bm.fused_P.cols() != fused_spec.P.cols()) {
        r.fail(where + ": fused eigenmatrix shape differs");
        return true;
      }
      const double diff = max_abs(sorted_rows(bm.fused_P) - sorted_rows(fused_spec.P));
      r.expect(diff <= 1e-8, where + ": fused P differs by " + std::to_string(diff));
      return true;
    });
  }
  r.expect(checks >= 500, "only " + std::to_string(checks) + " partition checks");
  r.summary = std::to_string(checks) + " partition checks over " + std::to_string(schemes) + " schemes agree";
  return r;
}

Result spectral_identities() {
  Result r;
  int subsets = 0;
  double worst = 0;
  for (const auto& e : corpus()) {
    const auto& spec = e.spec;
    const int v = spec.v;
    const double err = max_abs(spec.P * spec.Q - v * Eigen::MatrixXd::Identity(spec.d + 1, spec.d + 1));
    worst = std::max(worst, err / v);
    r.expect(err <= 1e-8 * v, e.name + ": |PQ - vI| = " + std::to_string(err));
    for (int j = 1; j <= spec.d; ++j) {
      r.expect(std::abs(spec.P.row(j).sum()) <= 1e-8, e.name + ": row " + std::to_string(j) + " of P sums to nonzero");
    }
    if (spec.d > 6) continue;
    for (const Eigen::MatrixXd& m : {spec.principal_P(), spec.principal_Q()}) {
      for (int size = 2; size <= spec.d; ++size) {
        for (const auto& rows : k_subsets(spec.d, size)) {
          ++subsets;
          r.expect(row_lemma_check(m, rows, spec.tol), e.name + ": rows " + format_set(rows));
        }
      }
    }
  }
  std::ostringstream os;
  os << corpus().size() << " schemes, max |PQ - vI| / v = " << worst << ", " << subsets << " row subsets checked";
  r.summary = os.str();
  return r;
}

Result negative_controls() {
  Result r;
  const auto& cube = named("hamming3");
  auto graph = build_fusing_hypergraph(cube.scheme, cube.spec, 2, Side::Relations);
  r.expect(graph_shape(graph).is_path, "H(3,2) fusing graph is not a path");
  r.expect(!is_amorphic(cube.scheme, cube.spec).amorphic, "H(3,2) reported amorphic");

  std::vector<std::string> verdicts;
  for (const char* name : {"cyc13d3", "cyc5d2"}) {
    const std::string id = name;
    auto labels = load_label_matrix(fs::path(AMORPH_CORPUS_DIR) / (id + ".scheme"));
    AssociationScheme scheme = validate_scheme(labels);
    auto spec = spectral_decomposition(scheme);
    bool irrational = false;
    for (int i = 0; i <= spec.d; ++i) {
      for (int j = 0; j <= spec.d; ++j) irrational = irrational || !spec.p_integral(i, j);
    }
    r.expect(irrational, id + ": no irrational entries");
    for (std::uint64_t seed : {2u, 17u, 12345u}) {
      SpectralOptions o;
      o.seed = seed;
      auto again = spectral_decomposition(scheme, o);
      r.expect(again.multiplicities == spec.multiplicities && max_abs(again.P - spec.P) <= 1e-8,
               id + ": spectrum depends on seed " + std::to_string(seed));
    }
    bool amorphic = is_amorphic(scheme, spec).amorphic;
    verdicts.push_back(id + (amorphic ? " amorphic" : " non-amorphic"));
    r.expect(!amorphic, id + " reported amorphic (d = " + std::to_string(scheme.d()) +
                            (scheme.d() <= 2 ? "; every 2-class scheme fuses trivially" : "") + ")");
  }
  r.summary = "H(3,2) path and non-amorphic; " + verdicts[0] + ", " + verdicts[1];
  return r;
}

const std::vector<std::function<Result()>> kCriteria = {
    amorphic_net,     two_sunflowers, complete_iff_amorphic, core_pairs_fuse,     contraction,
    triple_types,     overlap_cases,  oracle_equivalence,    spectral_identities, negative_controls,
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "usage: acceptance [criterion 1.." << kCriteria.size() << "]...\n";
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty()) {
    for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) selected.push_back(n);
  }
  int failed = 0;
  for (int n : selected) {
    Result r;
    try {
      r = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const bool pass = r.failures.empty();
    failed += !pass;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL");
    if (!r.summary.empty()) std::cout << " - " << r.summary;
    std::cout << '\n';
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) std::cout << "    " << r.failures[i] << '\n';
    if (r.failures.size() > 20) std::cout << "    ... " << r.failures.size() - 20 << " more\n";
  }
  return failed ? 1 : 0;
}
