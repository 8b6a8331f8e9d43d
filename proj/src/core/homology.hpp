#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/surface.hpp"

namespace sepflux {

// A subset of the ends: the side v+ of a separating class. The complement
// is the side v-. Order and duplicates are irrelevant.
struct EndPartition {
  std::vector<std::string> positive_side;

  bool operator==(const EndPartition&) const = default;
};

// Element of the separating first homology of the filled surface, written
// in coordinates over the basis v_1..v_{n-1}, where v_i is the class of a
// curve whose positive side is exactly the i-th arm end and where
// v_n = -(v_1 + ... + v_{n-1}).
struct SeparatingClass {
  SurfaceSpec base;                  // filled: no punctures, no boundary
  std::vector<std::int64_t> coords;  // length max(n-1, 0)

  bool operator==(const SeparatingClass&) const = default;

  [[nodiscard]] bool is_zero() const;
};

SeparatingClass zero_class(const SurfaceSpec& filled);

// v_{index+1}; index is 0-based and must be < n-1.
SeparatingClass basis_class(const SurfaceSpec& filled, std::size_t index);

SeparatingClass negate(const SeparatingClass& v);
SeparatingClass add(const SeparatingClass& a, const SeparatingClass& b);

// Sum of v_i over the ends of the partition, with the dependent class v_n
// substituted. The surface must be filled; unknown ids are rejected.
SeparatingClass class_of_partition(const SurfaceSpec& filled, const EndPartition& partition);

// Pushforward from an unfilled surface: punctures are dropped from the
// partition, then the class is taken on the filled surface.
SeparatingClass class_of_partition_on(const SurfaceSpec& spec, const EndPartition& partition);

// Engaged exactly when v is representable by a single separating curve, in
// which case the returned partition is the positive side for the + sign.
// The zero class is simple with empty positive side.
std::optional<EndPartition> is_simple(const SeparatingClass& v);

// Coordinate expansion [(a_k, k)] with zero entries omitted; k is a 0-based
// index into the basis v_1..v_{n-1}.
std::vector<std::pair<std::int64_t, std::size_t>> decompose(const SeparatingClass& v);

// Rank of the separating homology lattice of the filled surface.
std::int64_t sep_rank(const SurfaceSpec& spec);

// Whether the handle shift with repelling end `from_end` and attracting end
// `to_end` has its two ends on opposite sides of v. Requires v simple and
// nonzero; the answer does not depend on the orientation of v.
bool cuts(const SeparatingClass& v, const std::string& from_end, const std::string& to_end);

}  // namespace sepflux
