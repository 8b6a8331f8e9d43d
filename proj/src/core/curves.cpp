#include "core/curves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sepflux {

namespace {

bool is_subset(const std::vector<std::string>& small, const std::vector<std::string>& big) {
  return std::all_of(small.begin(), small.end(), [&](const std::string& id) {
    return std::find(big.begin(), big.end(), id) != big.end();
  });
}

bool is_subset(const std::vector<std::int64_t>& small, const std::vector<std::int64_t>& big) {
  return std::all_of(small.begin(), small.end(), [&](std::int64_t x) {
    return std::find(big.begin(), big.end(), x) != big.end();
  });
}

// side(inner) contained in side(outer): levels of inner all >= those of
// outer, enclosed sets of inner all subsets of outer's.
bool side_contained(const CurveShadow& inner, const CurveShadow& outer) {
  for (std::size_t i = 0; i < inner.levels.size(); ++i) {
    if (inner.levels[i] < outer.levels[i]) {
      return false;
    }
  }
  if (inner.core_handles > outer.core_handles) {
    return false;
  }
  if (!is_subset(inner.punctures_enclosed, outer.punctures_enclosed)) {
    return false;
  }
  if (!is_subset(inner.boundary_enclosed, outer.boundary_enclosed)) {
    return false;
  }
  return true;
}

}  // namespace

std::optional<std::int64_t> CurveShadow::level_of(const std::string& arm) const {
  for (std::size_t i = 0; i < arm_side.size(); ++i) {
    if (arm_side[i] == arm) {
      return levels[i];
    }
  }
  return std::nullopt;
}

std::int64_t CurveShadow::max_level() const {
  std::int64_t m = 0;
  for (const auto l : levels) {
    m = std::max(m, l);
  }
  return m;
}

CurveShadow make_shadow(SurfaceSpec surface,
                        std::vector<std::pair<std::string, std::int64_t>> arm_levels,
                        std::int64_t core_handles,
                        std::vector<std::string> punctures_enclosed,
                        std::vector<std::int64_t> boundary_enclosed,
                        int orientation) {
  validate(surface);
  CurveShadow c;
  c.core_handles = core_handles;
  c.orientation = orientation;
  if (orientation != 1 && orientation != -1) {
    fail(Status::invariant_violation, "orientation must be +1 or -1");
  }
  if (core_handles < 0 || core_handles > surface.core_genus) {
    fail(Status::invariant_violation, "core handle count out of range");
  }

  for (const auto& [arm, level] : arm_levels) {
    if (!surface.is_arm(arm)) {
      fail(Status::invariant_violation, "unknown arm: " + arm);
    }
    if (level < 0) {
      fail(Status::invariant_violation, "cut level must be nonnegative");
    }
  }
  std::sort(arm_levels.begin(), arm_levels.end(),
            [&](const auto& a, const auto& b) {
              return *surface.arm_index(a.first) < *surface.arm_index(b.first);
            });
  for (const auto& [arm, level] : arm_levels) {
    if (!c.arm_side.empty() && c.arm_side.back() == arm) {
      fail(Status::invariant_violation, "duplicate arm on the positive side: " + arm);
    }
    c.arm_side.push_back(arm);
    c.levels.push_back(level);
  }

  for (const auto& p : punctures_enclosed) {
    if (!surface.is_puncture(p)) {
      fail(Status::invariant_violation, "unknown puncture: " + p);
    }
  }
  std::sort(punctures_enclosed.begin(), punctures_enclosed.end(),
            [&](const std::string& a, const std::string& b) {
              const auto ia = std::find(surface.puncture_ids.begin(), surface.puncture_ids.end(), a);
              const auto ib = std::find(surface.puncture_ids.begin(), surface.puncture_ids.end(), b);
              return ia < ib;
            });
  for (const auto& p : punctures_enclosed) {
    if (!c.punctures_enclosed.empty() && c.punctures_enclosed.back() == p) {
      fail(Status::invariant_violation, "duplicate puncture: " + p);
    }
    c.punctures_enclosed.push_back(p);
  }

  std::sort(boundary_enclosed.begin(), boundary_enclosed.end());
  for (const auto b : boundary_enclosed) {
    if (b < 0 || b >= surface.boundary_count) {
      fail(Status::invariant_violation, "boundary circle index out of range");
    }
    if (!c.boundary_enclosed.empty() && c.boundary_enclosed.back() == b) {
      fail(Status::invariant_violation, "duplicate boundary circle");
    }
    c.boundary_enclosed.push_back(b);
  }

  c.surface = std::move(surface);
  return c;
}

SeparatingClass shadow_class(const CurveShadow& c) {
  auto v = class_of_partition(fill_and_cap(c.surface), EndPartition{c.arm_side});
  return c.orientation == 1 ? v : negate(v);
}

bool are_disjoint(const CurveShadow& a, const CurveShadow& b) {
  if (a.surface != b.surface) {
    fail(Status::invariant_violation, "shadows live on different surfaces");
  }
  if (a.arm_side != b.arm_side) {
    fail(Status::invariant_violation, "different partitions");
  }
  return side_contained(a, b) || side_contained(b, a);
}

std::int64_t genus_on_basepoint_side(const CurveShadow& c, const Truncation& k,
                                     const std::string& basepoint_end) {
  if (c.surface != k.base) {
    fail(Status::invariant_violation, "shadow and truncation on different surfaces");
  }
  if (!c.surface.is_arm(basepoint_end)) {
    fail(Status::invariant_violation, "basepoint end must be an arm end: " + basepoint_end);
  }
  if (std::find(c.arm_side.begin(), c.arm_side.end(), basepoint_end) != c.arm_side.end()) {
    fail(Status::invariant_violation, "basepoint end lies on the positive side");
  }
  std::int64_t positive_side = c.core_handles;
  for (const auto level : c.levels) {
    if (level > k.depth) {
      fail(Status::invariant_violation, "curve exceeds truncation");
    }
    positive_side += k.depth - level;
  }
  return truncation_genus(k) - positive_side;
}

std::int64_t color(const CurveShadow& gamma, const CurveShadow& c,
                   const std::string& basepoint_end, std::int64_t min_depth) {
  if (gamma.surface != c.surface) {
    fail(Status::invariant_violation, "shadows live on different surfaces");
  }
  if (gamma.arm_side != c.arm_side) {
    fail(Status::invariant_violation, "different partitions");
  }
  if (gamma.orientation != c.orientation) {
    fail(Status::invariant_violation, "different orientations");
  }
  const std::int64_t depth = std::max({min_depth, gamma.max_level(), c.max_level()});
  const auto shallow = truncation(c.surface, depth);
  const auto deep = truncation(c.surface, depth + 1);
  const auto at_shallow = genus_on_basepoint_side(c, shallow, basepoint_end) -
                          genus_on_basepoint_side(gamma, shallow, basepoint_end);
  const auto at_deep = genus_on_basepoint_side(c, deep, basepoint_end) -
                       genus_on_basepoint_side(gamma, deep, basepoint_end);
  if (at_shallow != at_deep) {
    fail(Status::internal_check, "color depends on the truncation depth");
  }
  return at_shallow;
}

std::int64_t color_distance(const CurveShadow& a, const CurveShadow& b,
                            const CurveShadow& gamma, const std::string& basepoint_end) {
  const auto da = color(gamma, a, basepoint_end);
  const auto db = color(gamma, b, basepoint_end);
  return da >= db ? da - db : db - da;
}

std::string default_basepoint_end(const SurfaceSpec& surface,
                                  const std::vector<std::string>& arm_side) {
  for (const auto& arm : surface.arm_ids) {
    if (std::find(arm_side.begin(), arm_side.end(), arm) == arm_side.end()) {
      return arm;
    }
  }
  fail(Status::bad_class, "every arm end lies on the positive side");
}

std::int64_t cobounded_genus(const CurveShadow& a, const CurveShadow& b) {
  if (a.arm_side != b.arm_side) {
    fail(Status::invariant_violation, "different partitions");
  }
  std::int64_t genus = 0;
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    genus += a.levels[i] >= b.levels[i] ? a.levels[i] - b.levels[i] : b.levels[i] - a.levels[i];
  }
  genus += a.core_handles >= b.core_handles ? a.core_handles - b.core_handles
                                            : b.core_handles - a.core_handles;
  return genus;
}

ColoredSlice build_slice(const SeparatingClass& v, std::int64_t depth,
                         const CurveShadow& gamma) {
  if (v.is_zero()) {
    fail(Status::bad_class, "zero class");
  }
  if (!is_simple(v)) {
    fail(Status::bad_class, "class not simple");
  }
  if (depth < 0) {
    fail(Status::invariant_violation, "slice depth must be nonnegative");
  }
  if (fill_and_cap(gamma.surface) != v.base) {
    fail(Status::invariant_violation, "basepoint curve does not live over the class surface");
  }
  if (shadow_class(gamma) != v) {
    fail(Status::bad_class, "basepoint curve not in the given class");
  }

  const auto basepoint = default_basepoint_end(gamma.surface, gamma.arm_side);

  ColoredSlice slice;
  slice.cls = v;
  slice.depth = depth;

  // All level assignments <= depth on gamma's arms, all core-handle counts;
  // the remaining partition data is shared with gamma.
  const std::size_t arms = gamma.arm_side.size();
  std::vector<std::int64_t> levels(arms, 0);
  while (true) {
    for (std::int64_t h = 0; h <= gamma.surface.core_genus; ++h) {
      CurveShadow c = gamma;
      c.levels = levels;
      c.core_handles = h;
      slice.vertices.push_back(std::move(c));
    }
    std::size_t i = arms;
    while (i > 0 && levels[i - 1] == depth) {
      levels[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++levels[i - 1];
  }

  for (std::size_t a = 0; a < slice.vertices.size(); ++a) {
    slice.colors.push_back(color(gamma, slice.vertices[a], basepoint, depth));
    for (std::size_t b = a + 1; b < slice.vertices.size(); ++b) {
      if (are_disjoint(slice.vertices[a], slice.vertices[b])) {
        slice.edges.emplace_back(a, b);
      }
    }
  }
  std::sort(slice.edges.begin(), slice.edges.end());
  return slice;
}

ColoringReport verify_proper_coloring(const ColoredSlice& slice) {
  ColoringReport report;
  for (const auto& [a, b] : slice.edges) {
    if (a >= slice.vertices.size() || b >= slice.vertices.size()) {
      report.violations.push_back({a, b, "edge endpoint out of range"});
      continue;
    }
    const auto gap = slice.colors[a] >= slice.colors[b]
                         ? slice.colors[a] - slice.colors[b]
                         : slice.colors[b] - slice.colors[a];
    if (gap == 0) {
      report.violations.push_back({a, b, "adjacent vertices share a color"});
      continue;
    }
    const auto genus = cobounded_genus(slice.vertices[a], slice.vertices[b]);
    if (gap != genus) {
      std::ostringstream msg;
      msg << "color gap " << gap << " differs from cobounded genus " << genus;
      report.violations.push_back({a, b, msg.str()});
    }
  }
  report.proper = report.violations.empty();
  return report;
}

namespace {

void append_id_set(std::ostream& out, const std::vector<std::string>& ids) {
  out << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ',';
    out << ids[i];
  }
  out << '}';
}

void append_profile(std::ostream& out, const CurveShadow& c) {
  out << "P=";
  append_id_set(out, c.arm_side);
  out << ";l=";
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    if (i > 0) out << ',';
    out << c.levels[i];
  }
  out << ";h=" << c.core_handles << ";Q=";
  append_id_set(out, c.punctures_enclosed);
  out << ";B={";
  for (std::size_t i = 0; i < c.boundary_enclosed.size(); ++i) {
    if (i > 0) out << ',';
    out << c.boundary_enclosed[i];
  }
  out << '}';
}

}  // namespace

std::string export_slice(const ColoredSlice& slice) {
  std::ostringstream out;
  out << "slice v=";
  for (std::size_t i = 0; i < slice.cls.coords.size(); ++i) {
    if (i > 0) out << ',';
    out << slice.cls.coords[i];
  }
  out << " m=" << slice.depth << '\n';
  for (std::size_t i = 0; i < slice.vertices.size(); ++i) {
    out << "v " << i << " profile=";
    append_profile(out, slice.vertices[i]);
    out << " color=" << slice.colors[i] << '\n';
  }
  for (const auto& [a, b] : slice.edges) {
    out << "e " << a << ' ' << b << '\n';
  }
  return out.str();
}

}  // namespace sepflux
