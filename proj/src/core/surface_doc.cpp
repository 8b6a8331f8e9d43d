#include "core/surface_doc.hpp"

#include <json.hpp>

namespace sepflux {

namespace {

using nlohmann::json;

std::int64_t read_count(const json& doc, const char* key) {
  const auto& value = doc.at(key);
  if (!value.is_number_integer()) {
    fail(Status::parse_error, std::string("key '") + key + "' must be an integer");
  }
  return value.get<std::int64_t>();
}

std::vector<std::string> read_ids(const json& doc, const char* key) {
  const auto& value = doc.at(key);
  if (!value.is_array()) {
    fail(Status::parse_error, std::string("key '") + key + "' must be a list of strings");
  }
  std::vector<std::string> ids;
  ids.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      fail(Status::parse_error, std::string("key '") + key + "' must be a list of strings");
    }
    ids.push_back(item.get<std::string>());
  }
  return ids;
}

}  // namespace

SurfaceSpec parse_surface_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Status::parse_error, std::string("invalid surface document: ") + e.what());
  }
  if (!doc.is_object()) {
    fail(Status::parse_error, "surface document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "core_genus" && key != "boundary" && key != "punctures" && key != "arms") {
      fail(Status::parse_error, "unknown key '" + key + "' in surface document");
    }
  }

  SurfaceSpec spec;
  if (doc.contains("core_genus")) {
    spec.core_genus = read_count(doc, "core_genus");
  }
  if (doc.contains("boundary")) {
    spec.boundary_count = read_count(doc, "boundary");
  }
  if (doc.contains("punctures")) {
    spec.puncture_ids = read_ids(doc, "punctures");
  }
  if (doc.contains("arms")) {
    spec.arm_ids = read_ids(doc, "arms");
  }
  validate(spec);
  return spec;
}

std::string surface_document_to_json(const SurfaceSpec& spec) {
  nlohmann::ordered_json doc;
  doc["core_genus"] = spec.core_genus;
  doc["boundary"] = spec.boundary_count;
  doc["punctures"] = spec.puncture_ids;
  doc["arms"] = spec.arm_ids;
  return doc.dump();
}

}  // namespace sepflux
