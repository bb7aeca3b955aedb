#include "tracts/json_io.hpp"

#include <string>
#include <vector>

#include "tracts/errors.hpp"

namespace tracts {

namespace {

AxiomMode parse_axiom_mode(const std::string& s) {
  if (s == "unchecked") return AxiomMode::Unchecked;
  if (s == "weak") return AxiomMode::Weak;
  if (s == "strong") return AxiomMode::Strong;
  throw ValidationError("unknown axiom level '" + s + "'");
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ValidationError(std::string("document is missing the '") + key + "' field");
  return doc.at(key);
}

std::string string_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_string())
    throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

GroundSet ground_field(const Json& doc) {
  const Json& v = field(doc, "ground");
  if (!v.is_array()) throw ValidationError("field 'ground' must be an array of labels");
  std::vector<std::string> labels;
  for (const Json& l : v) {
    if (!l.is_string()) throw ValidationError("ground labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return make_ground(std::move(labels));
}

}  // namespace

Json fmatroid_to_json(const FMatroid& m) {
  Json doc;
  doc["tract"] = tract_name(m.tract);
  doc["ground"] = m.ground.labels;
  Json circuits = Json::array();
  for (const FVector& c : m.circuit_reps) circuits.push_back(format_fvector(c));
  doc["circuits"] = std::move(circuits);
  doc["checked"] = to_string(m.checked_mode);
  return doc;
}

FMatroid fmatroid_from_json(const Json& doc) {
  TractId t;
  try {
    t = parse_tract(string_field(doc, "tract"));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  GroundSet ground = ground_field(doc);
  const Json& circ = field(doc, "circuits");
  if (!circ.is_array()) throw ValidationError("field 'circuits' must be an array");
  std::vector<FVector> reps;
  for (const Json& c : circ) {
    if (!c.is_string()) throw ValidationError("circuit entries must be vector literals");
    try {
      reps.push_back(parse_fvector(t, ground, c.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  FMatroidOptions opts;
  if (doc.contains("checked")) opts.check_mode = parse_axiom_mode(string_field(doc, "checked"));
  return from_circuit_reps(t, ground, std::move(reps), opts);
}

Json matrix_to_json(const FieldMatrix& m) {
  Json doc;
  doc["tract"] = tract_name(m.tract);
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols; ++c) row.push_back(scalar_format(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

FieldMatrix matrix_from_json(const Json& doc) {
  TractId t;
  try {
    t = parse_tract(string_field(doc, "tract"));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  const Json& rows = field(doc, "matrix");
  if (!rows.is_array() || rows.empty())
    throw ValidationError("field 'matrix' must be a nonempty array of rows");
  size_t cols = 0;
  std::vector<Scalar> data;
  for (const Json& row : rows) {
    if (!row.is_array() || row.empty())
      throw ValidationError("matrix rows must be nonempty arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) throw ValidationError("matrix rows must have equal length");
    for (const Json& e : row) {
      if (!e.is_string()) throw ValidationError("matrix entries must be scalar literals");
      try {
        data.push_back(scalar_parse(t, e.get<std::string>()));
      } catch (const std::invalid_argument& ex) {
        throw ValidationError(ex.what());
      }
    }
  }
  return make_matrix(t, rows.size(), cols, std::move(data));
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed json: ") + e.what());
  }
}

}  // namespace tracts
