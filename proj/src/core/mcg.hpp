#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/curves.hpp"
#include "core/surface.hpp"

namespace sepflux {

// Handle shift with repelling end `from_end` and attracting end `to_end`:
// one application carries one handle per period from the source arm across
// the core to the target arm, along a strip avoiding the core handles and
// the punctures.
struct ShiftGen {
  std::string from_end;
  std::string to_end;

  bool operator==(const ShiftGen&) const = default;
};

// Dehn twist about a canonical curve, or a handle shift. Twists are
// compactly supported; shifts are not.
using Generator = std::variant<CurveShadow, ShiftGen>;

struct Letter {
  Generator gen;
  std::int64_t exponent = 1;  // nonzero

  bool operator==(const Letter&) const = default;
};

// Formal word over the generators; represents a pure mapping class. The
// rightmost letter acts first.
struct MappingWord {
  SurfaceSpec base;
  std::vector<Letter> letters;

  bool operator==(const MappingWord&) const = default;
};

MappingWord identity_word(const SurfaceSpec& base);

// Validates the letter against the word's base surface and appends it
// without any reduction. Exponent must be nonzero.
void append_letter(MappingWord& word, Generator gen, std::int64_t exponent);

MappingWord make_word(const SurfaceSpec& base, std::vector<Letter> letters);

// Reversed letter order with negated exponents.
MappingWord invert(const MappingWord& word);

// u * w: the letters of w act first.
MappingWord concat(const MappingWord& u, const MappingWord& w);

// Cancels adjacent letters with identical generators by summing exponents,
// dropping letters that reach exponent zero. No other reduction is done.
MappingWord reduce_adjacent(const MappingWord& word);

// Sum of |exponent| over the letters.
std::int64_t word_weight(const MappingWord& word);

struct SupportProfile {
  bool compact = true;
  std::vector<std::string> arms_touched;         // shift endpoints, arm order
  std::optional<std::int64_t> minimal_depth;     // empty when unbounded
};

SupportProfile support_profile(const MappingWord& word);

// Letter-by-letter update of a shadow profile, rightmost letter first.
// Twists leave the profile unchanged; a shift moves the cut level on its
// source arm down and on its target arm up by the exponent, when those arms
// lie on the positive side. Reports a general-position violation when a
// level would cross below zero.
CurveShadow act(const MappingWord& word, const CurveShadow& c);

// Image of the word under the forgetful map to the filled surface: twist
// curves lose their enclosed punctures and boundary circles.
MappingWord pushforward_to_filled(const MappingWord& word);

}  // namespace sepflux
