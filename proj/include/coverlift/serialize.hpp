#pragma once

// JSON forms of the library's values. Writers emit keys in a fixed order so
// identical values serialize to identical bytes.

#include <json.hpp>
#include <string>

#include "coverlift/arrangement.hpp"
#include "coverlift/cover.hpp"
#include "coverlift/curve_complex.hpp"

namespace coverlift {

using Json = nlohmann::ordered_json;

/// {"genus", "punctures", "triangles": [["t0.0","t0.1","t0.2"], ...],
///  "gluings": [["t0.0","t3.2"], ...]}; gluing i defines edge "e<i>".
Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

/// {"surface": {"genus", "punctures"}, "weights": {"e0": w, ...}}
Json curve_to_json(const Triangulation& t, const Coords& w);
/// Missing edges read as 0; unknown edges or a surface mismatch throw.
Coords coords_from_json(const Triangulation& t, const Json& j);
CurveClass curve_from_json(const Triangulation& t, const Json& j);

/// {"degree": d, "perms": {"e0": [..], ...}} with sheets numbered from 1.
Json to_json(const Triangulation& t, const CoverSpec& spec);
CoverSpec cover_spec_from_json(const Triangulation& t, const Json& j);

Json to_json(const DistanceCertificate& c);

/// Debug dump: crossings, chords, faces with puncture counts and boundary
/// cycles.
Json to_json(const Arrangement& arr);

/// Reads a whole file as JSON; throws std::runtime_error naming the path.
Json read_json_file(const std::string& path);

}  // namespace coverlift
