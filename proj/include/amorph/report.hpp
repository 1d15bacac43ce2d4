#pragma once

#include <string>

#include <json.hpp>

#include "amorph/claims.hpp"
#include "amorph/classify.hpp"
#include "amorph/fusion.hpp"
#include "amorph/hypergraph.hpp"
#include "amorph/spectral.hpp"

namespace amorph {

/// Report records keep insertion order so serialization is deterministic.
using Json = nlohmann::ordered_json;

Json matrix_json(const Eigen::MatrixXd& m);
Json sets_json(const std::vector<IndexSet>& sets);
Json hypergraph_json(const UniformHypergraph& h);
Json spectral_json(const SpectralData& spec);
Json certificate_json(const CanonicalFormCertificate& cert);
Json verdict_json(const AmorphicVerdict& verdict);
Json claims_json(const ClaimReport& report);

/// Full per-scheme record written by `verify` and `corpus`.
Json analysis_json(const std::string& scheme_id, const SchemeAnalysis& analysis, const SpectralOptions& options);

/// Shortest text that reads back as the same number; integers print bare.
std::string format_number(double x);

}  // namespace amorph
