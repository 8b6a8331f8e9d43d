#include "core/surface.hpp"

#include <algorithm>
#include <unordered_set>

namespace sepflux {

std::int64_t SurfaceSpec::end_count() const {
  return static_cast<std::int64_t>(puncture_ids.size() + arm_ids.size());
}

bool SurfaceSpec::is_arm(const std::string& id) const {
  return std::find(arm_ids.begin(), arm_ids.end(), id) != arm_ids.end();
}

bool SurfaceSpec::is_puncture(const std::string& id) const {
  return std::find(puncture_ids.begin(), puncture_ids.end(), id) != puncture_ids.end();
}

std::optional<std::size_t> SurfaceSpec::arm_index(const std::string& id) const {
  const auto it = std::find(arm_ids.begin(), arm_ids.end(), id);
  if (it == arm_ids.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - arm_ids.begin());
}

void validate(const SurfaceSpec& spec) {
  if (spec.core_genus < 0) {
    fail(Status::invariant_violation, "core_genus must be nonnegative");
  }
  if (spec.boundary_count < 0) {
    fail(Status::invariant_violation, "boundary count must be nonnegative");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : spec.puncture_ids) {
    if (id.empty()) {
      fail(Status::invariant_violation, "empty puncture identifier");
    }
    if (!seen.insert(id).second) {
      fail(Status::invariant_violation, "duplicate end identifier: " + id);
    }
  }
  for (const auto& id : spec.arm_ids) {
    if (id.empty()) {
      fail(Status::invariant_violation, "empty arm identifier");
    }
    if (!seen.insert(id).second) {
      fail(Status::invariant_violation, "duplicate end identifier: " + id);
    }
  }
}

ClassificationQuadruple classify(const SurfaceSpec& spec) {
  ClassificationQuadruple q;
  q.genus_infinite = !spec.arm_ids.empty();
  q.genus = q.genus_infinite ? 0 : spec.core_genus;
  q.boundary_count = spec.boundary_count;
  q.end_count = spec.end_count();
  q.genus_end_count = spec.arm_count();
  return q;
}

bool same_topological_type(const SurfaceSpec& a, const SurfaceSpec& b) {
  return classify(a) == classify(b);
}

SurfaceSpec fill_and_cap(const SurfaceSpec& spec) {
  SurfaceSpec hat = spec;
  hat.boundary_count = 0;
  hat.puncture_ids.clear();
  return hat;
}

Truncation truncation(const SurfaceSpec& spec, std::int64_t depth) {
  if (spec.arm_ids.empty()) {
    fail(Status::hypothesis_violation, "finite-type surface");
  }
  if (depth < 0) {
    fail(Status::invariant_violation, "truncation depth must be nonnegative");
  }
  return Truncation{spec, depth};
}

std::int64_t truncation_genus(const Truncation& k) {
  return k.base.core_genus + k.depth * k.base.arm_count();
}

}  // namespace sepflux
