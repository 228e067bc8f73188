#pragma once

/// \file serialize.hpp
/// JSON input and output.
///
/// Shape files:
///   {"kind": "ellipse",      "params": {"R0": 3, "m": 2, "n": 1},       "resolution": 512}
///   {"kind": "disk",         "params": {"R0": 2, "rho0": 1}}
///   {"kind": "fourier-star", "params": {"R0": 3, "base_radius": 1, "coeffs": [0.1, 0.02]}}
///   {"kind": "polygon",      "params": {"vertices": [[1, -1], [2, 0], [1, 1]]}}
/// "resolution" is optional (default 512, smooth kinds only).
///
/// Family files for the residual search:
///   {"family": "thick-disk" | "ellipse" | "fourier-star",
///    "initial": [...], "resolution": 128}
///
/// Malformed input throws ShapeError with invariant "schema"; geometric
/// violations throw the ShapeError of the CrossSection constructor.

#include <string>

#include <json.hpp>

#include "bubblering/certify/bound.hpp"
#include "bubblering/geometry/cross_section.hpp"
#include "bubblering/geometry/functionals.hpp"
#include "bubblering/stream/minimize.hpp"
#include "bubblering/stream/residual.hpp"
#include "bubblering/stream/solver.hpp"

namespace bubblering::io {

using Json = nlohmann::ordered_json;

/// Units statement embedded in every report.
inline constexpr const char* kUnits = "normalized, a=1, beta=1";

geometry::CrossSection shape_from_json(const Json& j);
Json shape_to_json(const geometry::CrossSection& shape);

stream::ShapeFamily family_from_json(const Json& j);
Json family_to_json(const stream::ShapeFamily& family);

/// Parses `text` as JSON; ShapeError("schema") on syntax errors.
Json parse_json(const std::string& text, const std::string& origin);

Json to_json(const geometry::GeometryReport& r);
Json to_json(const certify::BoundCertificate& c);
Json to_json(const certify::BoundTerms& t);
/// `with_nodes` adds the per-node arrays.
Json to_json(const stream::BoundarySolution& s, bool with_nodes = true);
Json to_json(const stream::ResidualReport& r, bool with_pointwise = true);
Json to_json(const stream::SearchResult& r);

/// Flattens nested objects into "a.b.c,value" lines (arrays are skipped).
std::string flat_csv(const Json& j);

}  // namespace bubblering::io
