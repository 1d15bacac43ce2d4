#include "amorph/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace amorph {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  if (std::abs(x) < 1e15 && x == std::round(x)) return std::to_string(static_cast<long long>(x));
  char buf[32];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c) == 0.0 ? 0.0 : m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json sets_json(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

Json hypergraph_json(const UniformHypergraph& h) {
  Json out;
  out["k"] = h.k();
  out["side"] = side_name(h.side());
  out["vertices"] = h.num_vertices();
  out["edges"] = sets_json({h.edges().begin(), h.edges().end()});
  out["complete"] = h.is_complete();
  return out;
}

Json spectral_json(const SpectralData& spec) {
  Json out;
  out["valencies"] = spec.valencies;
  out["multiplicities"] = spec.multiplicities;
  out["P"] = matrix_json(spec.P);
  out["Q"] = matrix_json(spec.Q);
  out["P_integral"] = spec.p_integral.all();
  out["Q_integral"] = spec.q_integral.all();
  return out;
}

Json certificate_json(const CanonicalFormCertificate& cert) {
  Json out;
  out["source"] = cert.source == EigenmatrixKind::P ? "P" : "Q";
  out["row_perm"] = cert.row_perm;
  out["a"] = cert.a;
  out["b"] = cert.b;
  out["n"] = cert.n ? Json(*cert.n) : Json(nullptr);
  out["t"] = cert.t;
  out["parameterized"] = cert.parameterized;
  return out;
}

Json verdict_json(const AmorphicVerdict& verdict) {
  Json out;
  out["amorphic"] = verdict.amorphic;
  out["certificate"] = verdict.certificate ? certificate_json(*verdict.certificate) : Json(nullptr);
  out["oracle"] = verdict.oracle ? Json(*verdict.oracle) : Json(nullptr);
  out["counterexample"] = verdict.counterexample ? Json(verdict.counterexample->to_string()) : Json(nullptr);
  return out;
}

Json claims_json(const ClaimReport& report) {
  Json out = Json::array();
  for (const auto& c : report.claims) {
    Json rec;
    rec["id"] = c.id;
    rec["applicable"] = c.applicable;
    rec["verified"] = c.verified;
    rec["witness"] = c.witness;
    out.push_back(std::move(rec));
  }
  return out;
}

Json analysis_json(const std::string& scheme_id, const SchemeAnalysis& a, const SpectralOptions& options) {
  const auto& spec = a.spectral;
  Json out;
  out["scheme"] = scheme_id;
  out["v"] = spec.v;
  out["d"] = spec.d;
  out["tolerance"] = {{"abs", spec.tol.abs}, {"rel", spec.tol.rel}};
  out["seed"] = options.seed;
  out["spectral"] = spectral_json(spec);
  out["fusing_pairs"] = sets_json(a.fusing_pairs);
  out["fusing_triples"] = sets_json(a.fusing_triples);
  auto optional_graph = [](const std::optional<UniformHypergraph>& h) {
    return h ? hypergraph_json(*h) : Json(nullptr);
  };
  out["relation_graph"] = optional_graph(a.relation_graph);
  if (a.relation_graph && a.relation_graph->num_vertices() >= 2) {
    auto shape = graph_shape(*a.relation_graph);
    out["relation_graph"]["connected"] = shape.connected;
    out["relation_graph"]["path"] = shape.is_path;
  }
  out["relation_hypergraph"] = optional_graph(a.relation_hypergraph);
  out["idempotent_graph"] = optional_graph(a.idempotent_graph);
  out["idempotent_hypergraph"] = optional_graph(a.idempotent_hypergraph);
  out["sunflower_cores"] = sets_json(a.cores);
  out["idempotent_sunflower_cores"] = sets_json(a.idempotent_cores);
  Json srg = Json::array();
  for (const auto& s : a.srg) {
    Json rec;
    rec["class"] = s.index;
    rec["restricted_eigenvalues"] = s.restricted_eigenvalues;
    rec["strongly_regular"] = s.strongly_regular;
    if (s.latin) {
      rec["latin"] = {{"n", s.latin->n},
                      {"t", s.latin->t},
                      {"sign", s.latin->sign == LatinSign::Positive ? "positive" : "negative"}};
    } else {
      rec["latin"] = nullptr;
    }
    srg.push_back(std::move(rec));
  }
  out["relations"] = std::move(srg);
  out["amorphic"] = verdict_json(a.amorphic);
  out["claims"] = claims_json(a.report);
  out["falsified"] = a.report.falsified();
  return out;
}

}  // namespace amorph
