#include "amorph/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "amorph/errors.hpp"

namespace amorph {

bool ClaimReport::falsified() const {
  return std::any_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.falsified(); });
}

const ClaimRecord* ClaimReport::find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::pair<IndexSet, IndexSet>> overlapping_triple_pairs(const std::vector<IndexSet>& triples) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  for (const auto& a : triples) {
    for (const auto& b : triples) {
      if (a == b) continue;
      IndexSet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.size() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::string join_sets(const std::vector<IndexSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += (out.empty() ? "" : " ") + format_set(s);
  return out.empty() ? "none" : out;
}

struct Outcome {
  bool applicable = false;
  bool verified = false;
  std::string witness;
};

ClaimRecord evaluate(const std::string& id, const std::function<Outcome()>& body) {
  ClaimRecord record;
  record.id = id;
  try {
    Outcome o = body();
    record.applicable = o.applicable;
    record.verified = o.applicable && o.verified;
    record.witness = o.witness;
  } catch (const LimitExceeded& e) {
    record.applicable = false;
    record.witness = std::string("limit exceeded: ") + e.what();
  } catch (const Error& e) {
    record.applicable = true;
    record.verified = false;
    record.witness = e.what();
  }
  return record;
}

// Idempotent-side hypergraphs for k = 2 and 3 from one pass over all partitions.
std::pair<UniformHypergraph, UniformHypergraph> idempotent_hypergraphs(const AssociationScheme& scheme,
                                                                       const SpectralData& spec,
                                                                       const HypergraphOptions& options) {
  const int d = scheme.d();
  UniformHypergraph graph(2, d, Side::Idempotents);
  UniformHypergraph triples(3, d, Side::Idempotents);
  const bool exact = scheme.v() <= options.fusion.exact_check_max_v;
  for_each_partition(
      d,
      [&](const ClassPartition& pi) {
        std::optional<ClassPartition> rho;
        if (exact) {
          auto direct = fuse_direct(scheme, spec, pi);
          if (direct) rho = direct.outcome->rho;
        } else {
          auto bm = bm_check(spec, pi);
          if (bm.fuses) rho = bm.rho;
        }
        if (!rho) return true;
        auto merged = rho->nontrivial_blocks();
        if (merged.size() == 1 && merged[0].size() == 2) graph.add_edge(merged[0]);
        if (merged.size() == 1 && merged[0].size() == 3) triples.add_edge(merged[0]);
        return true;
      },
      options.enumeration_limit);
  return {std::move(graph), std::move(triples)};
}

/// P = Q after ordering idempotents along the canonical-form row permutation.
bool self_dual_along(const SpectralData& spec, const CanonicalFormCertificate& cert) {
  const int n = spec.d + 1;
  Eigen::MatrixXd p(n, n);
  p.row(0) = spec.P.row(0);
  for (int c = 0; c < spec.d; ++c) p.row(c + 1) = spec.P.row(cert.row_perm[c]);
  Eigen::MatrixXd q = spec.v * p.inverse();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!spec.tol.equal(p(r, c), q(r, c))) return false;
    }
  }
  return true;
}

}  // namespace

SchemeAnalysis analyze_scheme(const AssociationScheme& scheme, const VerifyOptions& options) {
  const int d = scheme.d();
  SchemeAnalysis a;
  a.spectral = spectral_decomposition(scheme, options.spectral);
  const SpectralData& spec = a.spectral;
  const auto& fusion_opts = options.hypergraph.fusion;

  if (d >= 2) {
    a.fusing_pairs = enumerate_fusing_tuples(scheme, spec, 2, fusion_opts);
    a.relation_graph.emplace(2, d, Side::Relations);
    for (const auto& e : a.fusing_pairs) a.relation_graph->add_edge(e);
  }
  if (d >= 3) {
    a.fusing_triples = enumerate_fusing_tuples(scheme, spec, 3, fusion_opts);
    a.relation_hypergraph.emplace(3, d, Side::Relations);
    for (const auto& e : a.fusing_triples) a.relation_hypergraph->add_edge(e);
    a.cores = sunflower_cores(*a.relation_hypergraph);
  }
  std::optional<std::string> idempotent_limit;
  if (d >= 2) {
    try {
      auto [graph, triples] = idempotent_hypergraphs(scheme, spec, options.hypergraph);
      a.idempotent_graph = std::move(graph);
      if (d >= 3) {
        a.idempotent_hypergraph = std::move(triples);
        a.idempotent_cores = sunflower_cores(*a.idempotent_hypergraph);
      }
    } catch (const LimitExceeded& e) {
      idempotent_limit = e.what();
    }
  }
  for (int i = 1; i <= d; ++i) a.srg.push_back(srg_info(spec, i));

  std::optional<std::string> amorphic_limit;
  try {
    a.amorphic = is_amorphic(scheme, spec, options.hypergraph.enumeration_limit);
  } catch (const LimitExceeded& e) {
    amorphic_limit = e.what();
  }
  auto amorphic = [&]() -> bool {
    if (amorphic_limit) throw LimitExceeded(*amorphic_limit);
    return a.amorphic.amorphic;
  };
  auto require_idempotents = [&] {
    if (idempotent_limit) throw LimitExceeded(*idempotent_limit);
  };
  auto amorphic_witness = [&] { return std::string(amorphic() ? "amorphic" : "not amorphic"); };

  auto& claims = a.report.claims;

  claims.push_back(evaluate("two_sunflowers_imply_amorphic", [&] {
    Outcome o;
    o.applicable = d >= 5 && a.cores.size() >= 2;
    o.witness = "cores: " + join_sets(a.cores);
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("all_triples_fuse_implies_amorphic", [&] {
    Outcome o;
    o.applicable = d >= 5 && a.relation_hypergraph->is_complete();
    o.witness = std::to_string(a.fusing_triples.size()) + " fusing triples";
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("amorphic_implies_all_triples_fuse", [&] {
    Outcome o;
    o.applicable = d >= 5 && amorphic();
    if (o.applicable) {
      o.verified = a.relation_hypergraph->is_complete();
      o.witness = std::to_string(a.fusing_triples.size()) + " fusing triples";
    }
    return o;
  }));
  claims.push_back(evaluate("sunflower_core_fuses", [&] {
    Outcome o;
    o.applicable = d == 5 && !a.cores.empty();
    o.verified = true;
    if (!o.applicable) return o;
    for (const auto& core : a.cores) {
      if (exact_fusion_failure(scheme, ClassPartition::merging(d, core))) {
        o.verified = false;
        o.witness = "core " + format_set(core) + " does not fuse";
      }
    }
    if (o.applicable && o.verified) o.witness = "core pairs fuse: " + join_sets(a.cores);
    return o;
  }));

  claims.push_back(evaluate("two_sunflowers_imply_amorphic_dual", [&] {
    Outcome o;
    if (d < 5) return o;
    require_idempotents();
    o.applicable = a.idempotent_cores.size() >= 2;
    o.witness = "idempotent cores: " + join_sets(a.idempotent_cores);
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("all_triples_fuse_implies_amorphic_dual", [&] {
    Outcome o;
    if (d < 5) return o;
    require_idempotents();
    o.applicable = a.idempotent_hypergraph->is_complete();
    o.witness = std::to_string(a.idempotent_hypergraph->num_edges()) + " fusing idempotent triples";
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("sunflower_core_fuses_dual", [&] {
    Outcome o;
    if (d != 5) return o;
    require_idempotents();
    o.applicable = !a.idempotent_cores.empty();
    o.verified = true;
    for (const auto& core : a.idempotent_cores) {
      if (!a.idempotent_graph->has_edge(core)) {
        o.verified = false;
        o.witness = "idempotent core " + format_set(core) + " does not fuse";
      }
    }
    if (o.applicable && o.verified) o.witness = "idempotent core pairs fuse: " + join_sets(a.idempotent_cores);
    return o;
  }));

  const auto overlapping = overlapping_triple_pairs(a.fusing_triples);
  claims.push_back(evaluate("triple_contraction", [&] {
    Outcome o{true, true, ""};
    int checked = 0;
    for (const auto& [t1, t2] : overlapping) {
      ++checked;
      if (!contraction_check(scheme, spec, t1, t2, options.spectral)) {
        o.verified = false;
        o.witness = "contraction of " + format_set(t1) + " with " + format_set(t2) + " does not fuse";
        return o;
      }
    }
    o.witness = std::to_string(checked) + " admissible (T1, T2) pairs";
    return o;
  }));
  claims.push_back(evaluate("overlap_case_analysis", [&] {
    Outcome o{d >= 4, true, ""};
    if (!o.applicable) return o;
    std::map<std::string, int> histogram;
    for (const auto& [t1, t2] : overlapping) {
      if (t2 < t1) continue;
      auto c = overlap_case(spec, t1, t2);
      ++histogram[c.label];
      if (c.ruled_out()) {
        o.verified = false;
        o.witness = format_set(t1) + ", " + format_set(t2) + " realize ruled-out case " + c.label;
        return o;
      }
      if (a.amorphic.amorphic && !amorphic_limit && c.label != "I.3") {
        o.verified = false;
        o.witness = "amorphic scheme with case " + c.label + " at " + format_set(t1) + ", " + format_set(t2);
        return o;
      }
    }
    std::ostringstream os;
    for (const auto& [label, count] : histogram) os << (os.tellp() > 0 ? " " : "") << label << "x" << count;
    o.witness = histogram.empty() ? "no overlapping fusing triples" : os.str();
    return o;
  }));
  claims.push_back(evaluate("fusing_triple_type", [&] {
    Outcome o{true, true, ""};
    int type1 = 0;
    int type2 = 0;
    for (const auto& t : a.fusing_triples) {
      auto type = classify_triple(spec, t);
      (type.kind == TripleType::Kind::Type1 ? type1 : type2)++;
    }
    o.witness = std::to_string(type1) + " type-1, " + std::to_string(type2) + " type-2";
    return o;
  }));
  claims.push_back(evaluate("row_subset_rank", [&] {
    Outcome o;
    if (d > options.row_lemma_max_d) {
      throw LimitExceeded("row subsets exhausted only for d <= " + std::to_string(options.row_lemma_max_d));
    }
    o.applicable = true;
    o.verified = true;
    int subsets = 0;
    for (const auto& [name, m] : {std::pair{"P", spec.principal_P()}, std::pair{"Q", spec.principal_Q()}}) {
      for (int size = 2; size <= d; ++size) {
        for (const auto& rows : k_subsets(d, size)) {
          ++subsets;
          if (!row_lemma_check(m, rows, spec.tol)) {
            o.verified = false;
            o.witness = std::string(name) + " rows " + format_set(rows) + " have only " +
                        std::to_string(nonconstant_columns(m, rows, spec.tol)) + " non-constant columns";
            return o;
          }
        }
      }
    }
    o.witness = std::to_string(subsets) + " row subsets";
    return o;
  }));

  claims.push_back(evaluate("all_pairs_fuse_implies_amorphic", [&] {
    Outcome o;
    o.applicable = d >= 3 && a.relation_graph->is_complete();
    if (o.applicable) {
      o.verified = amorphic();
      o.witness = amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("connected_nonpath_graph_implies_amorphic", [&] {
    Outcome o;
    if (d < 3) return o;
    auto shape = graph_shape(*a.relation_graph);
    o.applicable = shape.connected && !shape.is_path;
    o.witness = std::string(shape.connected ? "connected" : "disconnected") + (shape.is_path ? ", path" : "");
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("latin_relations_imply_amorphic", [&] {
    Outcome o;
    if (d < 3) return o;
    int positive = 0;
    int negative = 0;
    for (const auto& s : a.srg) {
      if (s.latin) (s.latin->sign == LatinSign::Positive ? positive : negative)++;
    }
    o.applicable = std::max(positive, negative) >= d - 1;
    o.witness = std::to_string(positive) + " Latin, " + std::to_string(negative) + " negative Latin";
    if (o.applicable) {
      o.verified = amorphic();
      o.witness += "; " + amorphic_witness();
    }
    return o;
  }));
  claims.push_back(evaluate("amorphic_latin_self_dual", [&] {
    Outcome o;
    o.applicable = d >= 3 && amorphic();
    if (!o.applicable) return o;
    int positive = 0;
    int negative = 0;
    for (const auto& s : a.srg) {
      if (s.latin) (s.latin->sign == LatinSign::Positive ? positive : negative)++;
    }
    bool uniform = positive == d || negative == d;
    bool self_dual = a.amorphic.certificate && self_dual_along(spec, *a.amorphic.certificate);
    o.verified = uniform && self_dual;
    o.witness = std::string(positive == d ? "all Latin" : negative == d ? "all negative Latin" : "mixed types") +
                (self_dual ? ", P = Q" : ", P != Q");
    return o;
  }));
  return a;
}

ClaimReport verify_claims(const AssociationScheme& scheme, const VerifyOptions& options) {
  return analyze_scheme(scheme, options).report;
}

}  // namespace amorph
