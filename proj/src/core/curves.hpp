#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/homology.hpp"
#include "core/surface.hpp"

namespace sepflux {

// Bookkeeping profile of a canonical separating curve. The positive side of
// the curve holds, for each arm in arm_side, the arm tail above the recorded
// cut level, plus `core_handles` core handles taken as an initial segment of
// a fixed handle order, plus the listed punctures and boundary circles. This
// is exactly the data the genus ledger can see; two shadows with equal
// profiles are isotopic representatives of the same curve.
struct CurveShadow {
  SurfaceSpec surface;
  std::vector<std::string> arm_side;            // sorted by the surface arm order
  std::vector<std::int64_t> levels;             // parallel to arm_side, >= 0
  std::int64_t core_handles = 0;                // in [0, core_genus]
  std::vector<std::string> punctures_enclosed;  // sorted by the puncture order
  std::vector<std::int64_t> boundary_enclosed;  // circle indices, sorted
  int orientation = 1;                          // +1 or -1

  bool operator==(const CurveShadow&) const = default;

  [[nodiscard]] std::optional<std::int64_t> level_of(const std::string& arm) const;
  [[nodiscard]] std::int64_t max_level() const;
};

// Validates and normalizes a profile (sorts arm/puncture entries into the
// surface order, keeping levels aligned).
CurveShadow make_shadow(SurfaceSpec surface,
                        std::vector<std::pair<std::string, std::int64_t>> arm_levels,
                        std::int64_t core_handles = 0,
                        std::vector<std::string> punctures_enclosed = {},
                        std::vector<std::int64_t> boundary_enclosed = {},
                        int orientation = 1);

// Homology class of the shadow on the filled surface. Depends only on
// (arm_side, orientation).
SeparatingClass shadow_class(const CurveShadow& c);

// Decidable disjointness for the canonical family: true iff the positive
// sides are nested (levels of one all >= with enclosed sets all subsets of
// the other's, or the mirror image). Both shadows must share arm_side.
bool are_disjoint(const CurveShadow& a, const CurveShadow& b);

// The genus ledger: genus of the component of K cut along c that contains
// the truncation boundary circle toward `basepoint_end`. The basepoint end
// must be an arm end outside arm_side and every level of c must fit in K.
std::int64_t genus_on_basepoint_side(const CurveShadow& c, const Truncation& k,
                                     const std::string& basepoint_end);

// Coloring relative to a basepoint curve: ledger(c) - ledger(gamma),
// computed in a truncation of depth at least `min_depth` and re-checked one
// level deeper. Both curves must share arm_side and orientation.
std::int64_t color(const CurveShadow& gamma, const CurveShadow& c,
                   const std::string& basepoint_end, std::int64_t min_depth = 0);

// |color(gamma, a) - color(gamma, b)|. Independent of gamma; a pseudo
// distance on the canonical family.
std::int64_t color_distance(const CurveShadow& a, const CurveShadow& b,
                            const CurveShadow& gamma, const std::string& basepoint_end);

// First arm end outside the given positive side, in the surface arm order.
std::string default_basepoint_end(const SurfaceSpec& surface,
                                  const std::vector<std::string>& arm_side);

// Genus of the subsurface cobounded by two nested shadows of one family:
// the level gaps plus the core-handle gap.
std::int64_t cobounded_genus(const CurveShadow& a, const CurveShadow& b);

// Finite slice of the curve graph induced on one homology class: every
// canonical shadow sharing the partition data of the basepoint curve, with
// levels <= depth and all core-handle counts, colored relative to the
// basepoint curve and with edges given by disjointness.
struct ColoredSlice {
  SeparatingClass cls;
  std::int64_t depth = 0;
  std::vector<CurveShadow> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b
  std::vector<std::int64_t> colors;                        // parallel to vertices
};

ColoredSlice build_slice(const SeparatingClass& v, std::int64_t depth,
                         const CurveShadow& gamma);

struct ColoringViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string reason;
};

struct ColoringReport {
  bool proper = true;
  std::vector<ColoringViolation> violations;
};

// Checks that every edge joins distinct colors and that each edge's color
// gap equals the genus of the cobounded subsurface.
ColoringReport verify_proper_coloring(const ColoredSlice& slice);

// Plain-text graph export: one header line, one line per vertex, one line
// per edge. Documented in the README.
std::string export_slice(const ColoredSlice& slice);

}  // namespace sepflux
