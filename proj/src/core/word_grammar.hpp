#pragma once

#include <string>
#include <string_view>

#include "core/mcg.hpp"

namespace sepflux {

// Word grammar:
//
//   word := term ('*' term)*
//   term := gen ('^' int)?
//   gen  := 'S(' id ',' id ')'
//        |  'T(P={' ids '}; l=' levels '; h=' int ')'
//        |  '1'
//
// Whitespace is insignificant between tokens. Arm ids may be names or
// 1-based basis indices; names win on ambiguity. '1' is the identity and a
// zero exponent drops its letter. Parse failures carry the offending column.
MappingWord parse_word(const SurfaceSpec& base, std::string_view text);

// Inverse of parse_word up to letter merging: printing and re-parsing gives
// an equal word. The empty word prints as "1".
std::string print_word(const MappingWord& word);

}  // namespace sepflux
