#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "amorph/errors.hpp"
#include "amorph/fusion.hpp"
#include "amorph/generators.hpp"
#include "amorph/partition.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace amorph;
using testing::corpus_scheme;
using testing::matrix_of;
using testing::near;

TEST_SUITE("fusion") {

TEST_CASE("partition counts are Bell numbers") {
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  CHECK(enumerate_partitions(5).size() == 52);
  for (int d = 1; d <= 8; ++d) CHECK(static_cast<long long>(enumerate_partitions(d).size()) == oracle::bell(d));
}

TEST_CASE("enumeration yields every set partition once in restricted-growth order") {
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    auto parts = enumerate_partitions(d);
    for (std::size_t k = 1; k < parts.size(); ++k) CHECK(parts[k - 1].rgs() < parts[k].rgs());
    std::set<std::vector<int>> expected;
    for (const auto& blocks : oracle::set_partitions(d)) expected.insert(ClassPartition::from_blocks(d, blocks).rgs());
    std::set<std::vector<int>> got;
    for (const auto& p : parts) {
      got.insert(p.rgs());
      CHECK(p.block_of(0) == 0);
      CHECK(p.blocks()[0] == IndexSet{0});
    }
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(enumerate_partitions(9), LimitExceeded);
  CHECK(enumerate_partitions(9, 9).size() == 21147);
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
  int seen = 0;
  for_each_partition(5, [&](const ClassPartition&) { return ++seen < 7; });
  CHECK(seen == 7);
}

TEST_CASE("partition text syntax") {
  auto a = ClassPartition::parse("1,3|2", 3);
  auto b = ClassPartition::parse("0|1,3|2", 3);
  auto c = ClassPartition::parse(" 2 | 3,1 ", 3);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.rgs() == std::vector<int>{0, 1, 2, 1});
  CHECK(a.to_string() == "1,3|2");
  CHECK(a.to_string(true) == "0|1,3|2");
  CHECK(a.nontrivial_blocks() == std::vector<IndexSet>{{1, 3}});
  CHECK(ClassPartition::merging(4, {2, 4}).to_string() == "1|2,4|3");
  CHECK(ClassPartition::discrete(2).to_string() == "1|2");
  CHECK_THROWS_AS(ClassPartition::parse("1,1|2,3", 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::parse("0,1|2,3", 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::parse("1|2", 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::parse("1|2|4", 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::parse("1|x|3", 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::from_rgs({0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition::from_rgs({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("k-subsets") {
  CHECK(k_subsets(4, 2) == std::vector<IndexSet>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(k_subsets(6, 3).size() == 20);
  CHECK(k_subsets(1, 2).empty());
  CHECK(format_set({1, 2}) == "{1,2}");
}

TEST_CASE("cube fusions") {
  const auto& s = corpus_scheme("hamming3");
  auto spec = spectral_decomposition(s);

  auto good = ClassPartition::parse("0|1,3|2", 3);
  auto bm = bm_check(spec, good);
  REQUIRE(bm.fuses);
  CHECK(bm.rho->to_string(true) == "0|1,2|3");
  CHECK(near(bm.fused_P, matrix_of({{1, 4, 3}, {1, 0, -1}, {1, -4, 3}})));

  auto direct = fuse_direct(s, spec, good);
  REQUIRE(direct);
  CHECK(direct.outcome->fused.valencies() == std::vector<int>{1, 4, 3});
  CHECK(direct.outcome->rho.to_string() == "1,2|3");
  CHECK(near(direct.outcome->fused_P, bm.fused_P));

  auto bad = ClassPartition::parse("0|2,3|1", 3);
  CHECK_FALSE(bm_check(spec, bad).fuses);
  auto failed = fuse_direct(s, spec, bad);
  CHECK_FALSE(failed);
  REQUIRE(failed.failure.has_value());
  CHECK(failed.failure->axiom() == Axiom::Closure);
  CHECK(exact_fusion_failure(s, bad).has_value());
}

TEST_CASE("trivial fusions always succeed") {
  for (const auto& e : testing::corpus()) {
    CAPTURE(e.name);
    auto spec = spectral_decomposition(e.scheme);
    const int d = e.scheme.d();
    auto same = fuse_direct(e.scheme, spec, ClassPartition::discrete(d));
    REQUIRE(same);
    CHECK(same.outcome->fused.labels() == e.scheme.labels());
    CHECK(same.outcome->rho == ClassPartition::discrete(d));
    CHECK(near(same.outcome->fused_P, spec.P));

    IndexSet all(d);
    std::iota(all.begin(), all.end(), 1);
    auto one = fuse_direct(e.scheme, spec, ClassPartition::merging(d, all));
    REQUIRE(one);
    CHECK(one.outcome->fused.d() == 1);
  }
}

TEST_CASE("canonical-form Q pairs relation and idempotent triples") {
  // 9-point net, four singleton slope groups: 4-class amorphic, Q in canonical form.
  auto spec = spectral_decomposition(corpus_scheme("net9d4"));
  for (IndexSet triple : {IndexSet{1, 2, 3}, IndexSet{2, 3, 4}}) {
    auto on_q = bm_check(spec.Q, ClassPartition::merging(4, triple), spec.tol);
    REQUIRE(on_q.fuses);
    CHECK(on_q.rho->nontrivial_blocks() == std::vector<IndexSet>{triple});
    auto on_p = bm_check(spec, ClassPartition::merging(4, triple));
    REQUIRE(on_p.fuses);
    CHECK(on_p.rho->nontrivial_blocks() == std::vector<IndexSet>{triple});
  }
}

TEST_CASE("bm_check rho is stable across reruns and seeds") {
  const auto& s = corpus_scheme("hamming5");
  auto a = spectral_decomposition(s);
  SpectralOptions o;
  o.seed = 42;
  auto b = spectral_decomposition(s, o);
  for (const auto& pi : enumerate_partitions(5)) {
    auto x = bm_check(a, pi);
    auto y = bm_check(a, pi);
    auto z = bm_check(b, pi);
    CHECK(x.fuses == y.fuses);
    CHECK(x.fuses == z.fuses);
    if (x.fuses) {
      CHECK(*x.rho == *y.rho);
      CHECK(*x.rho == *z.rho);
    }
  }
}

TEST_CASE("exact fusion agrees with dense closure on small corpus schemes") {
  for (const auto& e : testing::corpus()) {
    if (e.scheme.d() > 4 || e.scheme.v() > 32) continue;
    CAPTURE(e.name);
    auto spec = spectral_decomposition(e.scheme);
    for (const auto& blocks : oracle::set_partitions(e.scheme.d())) {
      auto pi = ClassPartition::from_blocks(e.scheme.d(), blocks);
      CAPTURE(pi.to_string());
      const bool dense = oracle::dense_is_scheme(oracle::merge_labels(e.scheme.labels(), blocks));
      auto direct = fuse_direct(e.scheme, spec, pi);
      CHECK(static_cast<bool>(direct) == dense);
      CHECK(bm_check(spec, pi).fuses == dense);
    }
  }
}

TEST_CASE("oracle disagreement is fatal") {
  // Exact check on the cube against the eigenmatrix of an amorphic 3-class net.
  const auto& cube = corpus_scheme("hamming3");
  auto foreign = spectral_decomposition(corpus_scheme("net9d3_211"));
  CHECK_THROWS_AS(fuse_direct(cube, foreign, ClassPartition::parse("2,3|1", 3)), OracleDisagreement);
}

TEST_CASE("fusing tuples") {
  const auto& cube = corpus_scheme("hamming3");
  CHECK(enumerate_fusing_tuples(cube, spectral_decomposition(cube), 2) == std::vector<IndexSet>{{1, 2}, {1, 3}});

  const auto& net = corpus_scheme("net16d5");
  CHECK(enumerate_fusing_tuples(net, spectral_decomposition(net), 3) == k_subsets(5, 3));

  auto k5 = gen_complete(5);
  CHECK(enumerate_fusing_tuples(k5, spectral_decomposition(k5), 2).empty());

  const auto& h4 = corpus_scheme("hamming4");
  CHECK(enumerate_fusing_tuples(h4, spectral_decomposition(h4), 3) == std::vector<IndexSet>{{1, 2, 3}});
}

TEST_CASE("triple types") {
  auto net = spectral_decomposition(corpus_scheme("net16d5"));
  auto t = classify_triple(net, {1, 2, 3});
  CHECK(t.kind == TripleType::Kind::Type1);
  CHECK(t.dual_blocks == std::vector<IndexSet>{{1, 2, 3}});

  auto h4 = spectral_decomposition(corpus_scheme("hamming4"));
  auto u = classify_triple(h4, {1, 2, 3});
  CHECK(u.kind == TripleType::Kind::Type2);
  CHECK(u.dual_blocks == std::vector<IndexSet>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(classify_triple(h4, {1, 3, 4}), NotFusing);
}

TEST_CASE("contraction") {
  const auto& net16 = corpus_scheme("net16d5");
  auto s16 = spectral_decomposition(net16);
  CHECK(contraction_check(net16, s16, {1, 2, 3}, 4));
  CHECK(contraction_check(net16, s16, IndexSet{1, 2, 3}, IndexSet{2, 3, 4}));

  const auto& net25 = corpus_scheme("net25d6");
  auto s25 = spectral_decomposition(net25);
  CHECK(contraction_check(net25, s25, {2, 3, 4}, 5));

  const auto& h4 = corpus_scheme("hamming4");
  auto sh = spectral_decomposition(h4);
  CHECK_THROWS_AS(contraction_check(h4, sh, {1, 2, 3}, 4), PreconditionFailed);
  CHECK_THROWS_AS(contraction_check(net16, s16, {1, 2, 3}, 3), PreconditionFailed);
  CHECK_THROWS_AS(contraction_check(net16, s16, IndexSet{1, 2, 3}, IndexSet{3, 4, 5}), PreconditionFailed);
}

TEST_CASE("overlap case of amorphic triples") {
  auto spec = spectral_decomposition(corpus_scheme("net16d5"));
  auto c = overlap_case(spec, {1, 2, 3}, {2, 3, 4});
  CHECK(c.label == "I.3");
  CHECK_FALSE(c.ruled_out());
  CHECK(c.relation_map == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK_THROWS_AS(overlap_case(spec, {1, 2, 3}, {3, 4, 5}), PreconditionFailed);
  auto h4 = spectral_decomposition(corpus_scheme("hamming4"));
  CHECK_THROWS_AS(overlap_case(h4, {1, 2, 3}, {2, 3, 4}), PreconditionFailed);
}

TEST_CASE("every subcase representative matches its own label") {
  using K = TripleType::Kind;
  struct Rep {
    std::string label;
    TripleType first;
    TripleType second;
  };
  // I = first dual set(s), J = second, as listed for the 18 subcases.
  const std::vector<Rep> reps = {
      {"I.1", {K::Type1, {{1, 2, 3}}}, {K::Type1, {{4, 5, 6}}}},
      {"I.2", {K::Type1, {{1, 2, 3}}}, {K::Type1, {{3, 4, 5}}}},
      {"I.3", {K::Type1, {{1, 2, 3}}}, {K::Type1, {{2, 3, 4}}}},
      {"I.4", {K::Type1, {{1, 2, 3}}}, {K::Type1, {{1, 2, 3}}}},
      {"II.1", {K::Type1, {{1, 2, 3}}}, {K::Type2, {{4, 5}, {6, 7}}}},
      {"II.2", {K::Type1, {{1, 2, 3}}}, {K::Type2, {{3, 4}, {5, 6}}}},
      {"II.3", {K::Type1, {{1, 2, 3}}}, {K::Type2, {{2, 3}, {4, 5}}}},
      {"II.4", {K::Type1, {{2, 3, 4}}}, {K::Type2, {{1, 2}, {4, 5}}}},
      {"II.5", {K::Type1, {{1, 2, 3}}}, {K::Type2, {{1, 2}, {3, 4}}}},
      {"III.1", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{5, 6}, {7, 8}}}},
      {"III.2", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{4, 5}, {6, 7}}}},
      {"III.3", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{3, 4}, {5, 6}}}},
      {"III.4", {K::Type2, {{2, 3}, {4, 5}}}, {K::Type2, {{1, 2}, {5, 6}}}},
      {"III.5", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{2, 3}, {5, 6}}}},
      {"III.6", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{1, 2}, {4, 5}}}},
      {"III.7", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{2, 3}, {4, 5}}}},
      {"III.8", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{1, 2}, {3, 4}}}},
      {"III.9", {K::Type2, {{1, 2}, {3, 4}}}, {K::Type2, {{1, 4}, {2, 3}}}},
  };
  const std::set<std::string> surviving{"I.3", "II.3", "II.5", "III.6", "III.9"};
  std::mt19937 rng(7);
  for (const auto& rep : reps) {
    CAPTURE(rep.label);
    auto c = overlap_case_of_types(rep.first, rep.second);
    CHECK(c.label == rep.label);
    CHECK_FALSE(c.swapped);
    CHECK(c.ruled_out() == (surviving.count(rep.label) == 0));
    CHECK(overlap_case_of_types(rep.second, rep.first).label == rep.label);

    // Any renaming of the idempotents keeps the label.
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> perm(21);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      auto rename = [&](TripleType t) {
        for (auto& b : t.dual_blocks) {
          for (int& x : b) x = perm[x];
          std::sort(b.begin(), b.end());
        }
        std::sort(t.dual_blocks.begin(), t.dual_blocks.end());
        return t;
      };
      CHECK(overlap_case_of_types(rename(rep.first), rename(rep.second)).label == rep.label);
    }
  }
  const std::vector<std::string> expected(surviving.begin(), surviving.end());
  std::vector<std::string> listed = surviving_overlap_cases();
  std::sort(listed.begin(), listed.end());
  CHECK(listed == expected);
}

}  // TEST_SUITE
