#pragma once

#include <string>

#include "core/surface.hpp"

namespace sepflux {

// Surface document: a flat JSON object with keys core_genus (integer >= 0),
// boundary (integer >= 0), punctures (list of strings) and arms (list of
// strings, in basis order). Missing keys default to zero or empty; unknown
// keys are rejected. Malformed JSON or wrong types are parse errors;
// negative counts or identifier collisions are invariant violations.
SurfaceSpec parse_surface_document(const std::string& text);

std::string surface_document_to_json(const SurfaceSpec& spec);

}  // namespace sepflux
