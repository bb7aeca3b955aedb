#pragma once

#include <string>

#include <json.hpp>

#include "tracts/fmatroid.hpp"
#include "tracts/linalg.hpp"

namespace tracts {

// Insertion-ordered JSON so serialized documents are byte-deterministic.
using Json = nlohmann::ordered_json;

// {"tract": ..., "ground": [...], "circuits": ["(a, b, ...)", ...], "checked": ...}
Json fmatroid_to_json(const FMatroid& m);
// Rebuilds through from_circuit_reps; the document's "checked" level is
// re-verified on load, so a document cannot claim an unchecked axiom level.
FMatroid fmatroid_from_json(const Json& doc);

// {"tract": ..., "matrix": [["a", "b"], ...]}
Json matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const Json& doc);

// Canonical dump: two-space indent, trailing newline. serialize -> parse ->
// serialize is the identity on documents produced here.
std::string dump_json(const Json& doc);
// Throws ValidationError on malformed text.
Json parse_json(const std::string& text);

}  // namespace tracts
