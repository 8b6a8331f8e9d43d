#pragma once

#include <cstdint>
#include <vector>

#include "core/homology.hpp"
#include "core/mcg.hpp"

namespace sepflux {

// Image of a word in the free abelian quotient, in the coordinates induced
// by the basis classes: entry i is the flux of the word through v_{i+1}.
// Additive under concatenation and zero on twist-only words.
struct FluxVector {
  SurfaceSpec surface;
  std::vector<std::int64_t> values;  // length max(arms - 1, 0)

  bool operator==(const FluxVector&) const = default;

  [[nodiscard]] bool is_zero() const;
};

// Handle shifts h_1..h_{n-1}, all sourced at the last arm end, pairing
// delta-wise with the basis classes.
struct DualBasis {
  SurfaceSpec surface;
  std::vector<ShiftGen> shifts;
};

// A representative of v deep enough that acting by w never drives a cut
// level below zero: every level equals the word weight plus one, with no
// core handles.
CurveShadow deep_representative(const SeparatingClass& v, const MappingWord& w);

// Flux of w through a simple nonzero class: the color of the image of a
// deep representative relative to the representative itself, evaluated in a
// truncation of depth 2*weight + 2.
std::int64_t phi_simple(const SeparatingClass& v, const MappingWord& w);

// Same value computed from a customized representative: levels padded by
// `level_pad`, `core_handles` on the positive side, and the evaluation
// truncations deepened by `depth_pad`. Exposed so well-definedness can be
// checked across representatives and exhaustions.
std::int64_t phi_simple_at(const SeparatingClass& v, const MappingWord& w,
                           std::int64_t level_pad, std::int64_t core_handles,
                           std::int64_t depth_pad);

// Linear extension over the basis decomposition; defined for every class.
std::int64_t phi(const SeparatingClass& v, const MappingWord& w);

// Requires at least two arms.
DualBasis dual_basis(const SurfaceSpec& spec);

// One-letter words for the dual-basis shifts, in basis order.
std::vector<MappingWord> dual_basis_words(const SurfaceSpec& spec);

// The basis classes v_1..v_{n-1} of the filled surface.
std::vector<SeparatingClass> basis_classes(const SurfaceSpec& filled);

// Entry (i, j) is phi(classes[i], words[j]).
std::vector<std::vector<std::int64_t>> pairing_matrix(
    const std::vector<SeparatingClass>& classes,
    const std::vector<MappingWord>& words);

// Coordinates of the word in the quotient by the closure of the twist
// subgroup.
FluxVector project_to_A(const MappingWord& w);

// The dual-basis word with the given exponents, in fixed basis order.
MappingWord kappa_word(const SurfaceSpec& spec, const std::vector<std::int64_t>& exponents);

struct Factorization {
  MappingWord kappa_word;
  MappingWord residual;
};

// Splits w as (kappa part) * (flux-free part): the kappa word realizes the
// flux vector of w and the residual is w times its inverse. Verifies that
// the residual has zero flux before returning.
Factorization factor(const MappingWord& w);

// True when every flux coordinate of w vanishes; by the kernel
// characterization this puts w in the closure of the twist subgroup.
bool in_closure_test(const MappingWord& w);

// Rank of the first cohomology of the pure mapping class group. Requires
// genus at least two.
std::int64_t h1_rank(const SurfaceSpec& spec);

}  // namespace sepflux
