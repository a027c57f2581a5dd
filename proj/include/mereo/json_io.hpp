#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <json.hpp>

#include "mereo/boolean_algebra.hpp"
#include "mereo/caps.hpp"
#include "mereo/frames.hpp"
#include "mereo/labeled.hpp"
#include "mereo/report.hpp"
#include "mereo/representations.hpp"

namespace mereo {

/// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

enum class DocumentKind { topology, eca, frame };

/// Throws ParseError carrying the line and column of malformed input.
Json parse_json_text(const std::string& text);
/// Throws ParseError if the file cannot be read or parsed.
Json read_json_file(const std::string& path);

/// topology: has "universe"; eca: has "atoms"; frame: has "worlds".
DocumentKind detect_kind(const Json& doc);

/// {"universe": [label, ...], "subbasis": [[label, ...], ...]}. Labels may be
/// strings or integers. Errors name the offending JSON pointer.
LabeledSpace parse_topology(const Json& doc, const Caps& caps = {});
/// {"atoms": k, "covering": [[a, b, d], ...]} listing the true triples, or
/// {"atoms": k, "covering_mode": "discrete"}.
CoveringRelation parse_covering(const Json& doc);
/// {"worlds": n, "classes": [id, ...]} gives a type-1 frame; adding
/// "classes2" gives a type-2 frame with "classes" as R1 and "classes2" as R2.
Frame parse_frame(const Json& doc);

Json labels_json(const LabeledSpace& space, const PointSet& s);

/// Turns an element (as stored in a witness) into its JSON rendering.
using ElementRenderer = std::function<Json(std::uint64_t)>;

/// [{"name", "pass", "witness": [...] | null}, ...]. Witness entries go
/// through `render` when given.
Json checks_json(const Report& r, const ElementRenderer& render = {});

/// Renders an element of eca_from_rc(alg) as the labels of its regular closed set.
ElementRenderer region_renderer(const LabeledSpace& space, const RegularClosedAlgebra& alg);

/// {"pipeline", "checks", "frame", "embedding"} for each construction.
Json representation_json(const ParametrizedRepresentation& r, const Report& checks);
Json representation_json(const LabeledSpace& space, const Type1Representation& r, const Report& checks);
Json representation_json(const LabeledSpace& space, const Type2Representation& r, const Report& checks);

}  // namespace mereo
