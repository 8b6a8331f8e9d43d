#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace sepflux {

// Finite description of an infinite-type surface: a finite-genus core that
// carries the boundary circles and punctures, plus finitely many arms. Each
// arm is a one-ended infinite-genus ray with one handle per integer level
// >= 1. A curve "cut at level l" crosses the arm between handles l and l+1;
// level 0 cuts at the arm root. The order of arm_ids fixes the basis order
// used by the homology layer.
struct SurfaceSpec {
  std::int64_t core_genus = 0;
  std::int64_t boundary_count = 0;
  std::vector<std::string> puncture_ids;
  std::vector<std::string> arm_ids;

  bool operator==(const SurfaceSpec&) const = default;

  [[nodiscard]] std::int64_t end_count() const;
  [[nodiscard]] std::int64_t arm_count() const {
    return static_cast<std::int64_t>(arm_ids.size());
  }
  [[nodiscard]] bool is_arm(const std::string& id) const;
  [[nodiscard]] bool is_puncture(const std::string& id) const;
  [[nodiscard]] std::optional<std::size_t> arm_index(const std::string& id) const;
};

// Rejects negative counts, empty identifiers and identifier collisions.
void validate(const SurfaceSpec& spec);

// (genus, boundary, |ends|, |ends accumulated by genus|). The genus is
// infinite exactly when the surface has an arm; `genus` is zeroed in that
// case so that equality comparison stays meaningful.
struct ClassificationQuadruple {
  bool genus_infinite = false;
  std::int64_t genus = 0;
  std::int64_t boundary_count = 0;
  std::int64_t end_count = 0;
  std::int64_t genus_end_count = 0;

  bool operator==(const ClassificationQuadruple&) const = default;
};

// Finite-type exhausting subsurface K_m: the core (punctures included) plus
// the handles at levels 1..depth of every arm. Every boundary circle of K_m
// that is not a boundary circle of the surface is separating, and each
// complement component is an infinite-genus arm tail.
struct Truncation {
  SurfaceSpec base;
  std::int64_t depth = 0;
};

ClassificationQuadruple classify(const SurfaceSpec& spec);

bool same_topological_type(const SurfaceSpec& a, const SurfaceSpec& b);

// The filled surface: planar ends forgotten and boundary capped. Idempotent.
SurfaceSpec fill_and_cap(const SurfaceSpec& spec);

// K_m of the principal exhaustion. Requires at least one arm; a surface
// without arms is of finite type and has no principal exhaustion.
Truncation truncation(const SurfaceSpec& spec, std::int64_t depth);

std::int64_t truncation_genus(const Truncation& k);

}  // namespace sepflux
