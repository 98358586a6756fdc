#pragma once

#include <json.hpp>

#include <string>

#include "iwa/admissible.hpp"
#include "iwa/bounds.hpp"
#include "iwa/curve.hpp"
#include "iwa/lfunction.hpp"
#include "iwa/points.hpp"

namespace iwa::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "iw/1";

/// Parse failure or schema violation -> SchemaError. In strict mode any
/// unknown field is rejected.
json parse_document(const std::string& text, bool strict);
json load_file(const std::string& path, bool strict);
void save_file(const std::string& path, const json& doc);

/// Curve input: Weierstrass coefficients, conductor, discriminant, prime,
/// optional assertions block and declared reduction type.
struct CurveInput {
    WeierstrassCurve curve;
    u64 N = 0;
    i64 D_K = 0;
    u64 p = 0;
    CurveAssertions assertions;
    std::optional<ReductionType> reduction;
};

CurveInput curve_input_from_json(const json& j, bool strict);
json curve_input_to_json(const CurveInput& in);

json sequence_to_json(const PointSequence& seq);
PointSequence sequence_from_json(const json& j, bool strict);

json element_to_json(const IwasawaElement& e);
IwasawaElement element_from_json(const json& j, bool strict);

json tower_to_json(const LFunctionTower& t);
LFunctionTower tower_from_json(const json& j, bool strict);

json bound_report_to_json(const BoundReport& r, const CurveAssertions& assertions);

json clause_report_to_json(const ClauseReport& r);

}  // namespace iwa::io
