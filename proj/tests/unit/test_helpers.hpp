#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/curves.hpp"
#include "core/homology.hpp"
#include "core/mcg.hpp"
#include "core/surface.hpp"

namespace sepflux::testing {

inline SurfaceSpec ladder() {
  return SurfaceSpec{0, 0, {}, {"e1", "e2"}};
}

inline SurfaceSpec z_surface(std::int64_t boundary) {
  return SurfaceSpec{0, boundary, {}, {"a"}};
}

inline SurfaceSpec arms_surface(std::size_t n, std::int64_t core_genus = 0) {
  SurfaceSpec spec;
  spec.core_genus = core_genus;
  for (std::size_t i = 0; i < n; ++i) {
    spec.arm_ids.push_back("e" + std::to_string(i + 1));
  }
  return spec;
}

// Brute-force simplicity oracle: enumerate every partition of the ends and
// compare coordinates.
inline std::optional<EndPartition> simple_oracle(const SeparatingClass& v) {
  const auto n = v.base.arm_ids.size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    EndPartition partition;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ull << i)) {
        partition.positive_side.push_back(v.base.arm_ids[i]);
      }
    }
    if (class_of_partition(v.base, partition) == v) {
      return partition;
    }
  }
  return std::nullopt;
}

// Explicit handle census inside a truncation: the positive-side atoms of a
// shadow, listed one by one.
struct SideAtoms {
  std::set<std::pair<std::string, std::int64_t>> arm_handles;
  std::set<std::int64_t> core_handles;
  std::set<std::string> punctures;
  std::set<std::int64_t> boundary;
};

inline SideAtoms positive_side_atoms(const CurveShadow& c, std::int64_t depth) {
  SideAtoms atoms;
  for (std::size_t i = 0; i < c.arm_side.size(); ++i) {
    for (std::int64_t level = c.levels[i] + 1; level <= depth; ++level) {
      atoms.arm_handles.insert({c.arm_side[i], level});
    }
  }
  for (std::int64_t h = 1; h <= c.core_handles; ++h) {
    atoms.core_handles.insert(h);
  }
  atoms.punctures.insert(c.punctures_enclosed.begin(), c.punctures_enclosed.end());
  atoms.boundary.insert(c.boundary_enclosed.begin(), c.boundary_enclosed.end());
  return atoms;
}

template <typename T>
bool subset_of(const std::set<T>& a, const std::set<T>& b) {
  for (const auto& x : a) {
    if (!b.count(x)) {
      return false;
    }
  }
  return true;
}

inline bool atoms_contained(const SideAtoms& a, const SideAtoms& b) {
  return subset_of(a.arm_handles, b.arm_handles) && subset_of(a.core_handles, b.core_handles) &&
         subset_of(a.punctures, b.punctures) && subset_of(a.boundary, b.boundary);
}

// Disjointness oracle: containment of explicit positive sides either way,
// checked inside a truncation deep enough to see every difference.
inline bool disjoint_oracle(const CurveShadow& a, const CurveShadow& b) {
  const auto depth = std::max(a.max_level(), b.max_level()) + 1;
  const auto sa = positive_side_atoms(a, depth);
  const auto sb = positive_side_atoms(b, depth);
  return atoms_contained(sa, sb) || atoms_contained(sb, sa);
}

// Ledger oracle: count atoms of the truncation on the basepoint side.
inline std::int64_t ledger_census(const CurveShadow& c, std::int64_t depth) {
  std::int64_t total = c.surface.core_genus + depth * c.surface.arm_count();
  const auto side = positive_side_atoms(c, depth);
  return total - static_cast<std::int64_t>(side.arm_handles.size() + side.core_handles.size());
}

// Random words over shifts and small twists.
inline MappingWord random_word(const SurfaceSpec& base, std::mt19937_64& rng,
                               std::int64_t max_weight, bool twists_only = false) {
  auto word = identity_word(base);
  std::uniform_int_distribution<int> exp_dist(1, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::int64_t budget = std::uniform_int_distribution<std::int64_t>(0, max_weight)(rng);
  while (budget > 0) {
    std::int64_t exponent = std::min<std::int64_t>(exp_dist(rng), budget);
    if (sign_dist(rng)) {
      exponent = -exponent;
    }
    const bool use_twist = twists_only || base.arm_count() < 2 ||
                           std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    if (use_twist) {
      std::vector<std::pair<std::string, std::int64_t>> arm_levels;
      for (const auto& arm : base.arm_ids) {
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
          arm_levels.emplace_back(arm, std::uniform_int_distribution<std::int64_t>(0, 3)(rng));
        }
      }
      const auto handles =
          std::uniform_int_distribution<std::int64_t>(0, base.core_genus)(rng);
      append_letter(word, make_shadow(base, std::move(arm_levels), handles), exponent);
    } else {
      const auto n = base.arm_ids.size();
      std::uniform_int_distribution<std::size_t> arm_dist(0, n - 1);
      const auto from = arm_dist(rng);
      auto to = arm_dist(rng);
      while (to == from) {
        to = arm_dist(rng);
      }
      append_letter(word, ShiftGen{base.arm_ids[from], base.arm_ids[to]}, exponent);
    }
    budget -= exponent >= 0 ? exponent : -exponent;
  }
  return word;
}

// Per-letter flux oracle, independent of the shadow-action route: each
// shift letter moves `exponent` handles into its target arm and out of its
// source arm; twists move none.
inline std::int64_t per_letter_flux(const MappingWord& word,
                                    const std::vector<std::string>& positive_side) {
  const auto in_side = [&](const std::string& arm) {
    return std::find(positive_side.begin(), positive_side.end(), arm) != positive_side.end();
  };
  std::int64_t flux = 0;
  for (const auto& letter : word.letters) {
    if (const auto* shift = std::get_if<ShiftGen>(&letter.gen)) {
      const std::int64_t delta = (in_side(shift->to_end) ? 1 : 0) - (in_side(shift->from_end) ? 1 : 0);
      flux += delta * letter.exponent;
    }
  }
  return flux;
}

}  // namespace sepflux::testing
