#pragma once

#include <json.hpp>

#include <string>

#include "tpline/curves.hpp"
#include "tpline/identity.hpp"
#include "tpline/totalpos.hpp"
#include "tpline/transversal.hpp"

namespace tpline::io {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Rational rational_from(const Json& j);

Json quad_json(const QuadNum& value);
QuadNum quad_from(const Json& j);

Json matrix_json(const MatQ& m);
MatQ matrix_from(const Json& j);
Json matrix_json(const MatK& m);
MatK quad_matrix_from(const Json& j);

Json index_set_json(const IndexSet& set);
IndexSet index_set_from(const Json& j);

Json config_json(const ConfigBlocks& blocks);
ConfigBlocks config_from(const Json& j);

Json params_json(const LWParams& params);
LWParams params_from(const Json& j);

Json tp_report_json(const TpReport& report, bool square);
TpReport tp_report_from(const Json& j);

Json solution_json(const TransversalSolution& solution);
TransversalSolution solution_from(const Json& j);

Json curve_json(const CurveSpec& curve);
CurveSpec curve_from(const Json& j);

Json sample_report_json(const CurveSpec& curve, const SampleReport& report,
                        const std::vector<ScalingRow>& scaling);
SampleReport sample_report_from(const Json& j);

Json certificate_json(const IdentityCertificate& cert);
IdentityCertificate certificate_from(const Json& j);

Json instance_json(const TpInstance& instance);
TpInstance instance_from(const Json& j);

/// Parses text, reporting syntax errors as input errors.
Json parse(const std::string& text);
std::string dump(const Json& j);

}  // namespace tpline::io
