#include "core/mcg.hpp"

#include <algorithm>
#include <set>

namespace sepflux {

namespace {

void check_letter(const SurfaceSpec& base, const Generator& gen, std::int64_t exponent) {
  if (exponent == 0) {
    fail(Status::invariant_violation, "letter exponent must be nonzero");
  }
  if (const auto* twist = std::get_if<CurveShadow>(&gen)) {
    if (twist->surface != base) {
      fail(Status::invariant_violation, "twist curve lives on a different surface");
    }
  } else {
    const auto& shift = std::get<ShiftGen>(gen);
    if (!base.is_arm(shift.from_end)) {
      fail(Status::invariant_violation, "unknown arm: " + shift.from_end);
    }
    if (!base.is_arm(shift.to_end)) {
      fail(Status::invariant_violation, "unknown arm: " + shift.to_end);
    }
    if (shift.from_end == shift.to_end) {
      fail(Status::invariant_violation, "shift endpoints must differ");
    }
  }
}

}  // namespace

MappingWord identity_word(const SurfaceSpec& base) {
  validate(base);
  return MappingWord{base, {}};
}

void append_letter(MappingWord& word, Generator gen, std::int64_t exponent) {
  check_letter(word.base, gen, exponent);
  word.letters.push_back(Letter{std::move(gen), exponent});
}

MappingWord make_word(const SurfaceSpec& base, std::vector<Letter> letters) {
  auto word = identity_word(base);
  for (auto& letter : letters) {
    append_letter(word, std::move(letter.gen), letter.exponent);
  }
  return word;
}

MappingWord invert(const MappingWord& word) {
  MappingWord out{word.base, {}};
  out.letters.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    out.letters.push_back(Letter{it->gen, -it->exponent});
  }
  return out;
}

MappingWord concat(const MappingWord& u, const MappingWord& w) {
  if (u.base != w.base) {
    fail(Status::invariant_violation, "words live on different surfaces");
  }
  MappingWord out = u;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

MappingWord reduce_adjacent(const MappingWord& word) {
  MappingWord out{word.base, {}};
  for (const auto& letter : word.letters) {
    if (!out.letters.empty() && out.letters.back().gen == letter.gen) {
      out.letters.back().exponent += letter.exponent;
      if (out.letters.back().exponent == 0) {
        out.letters.pop_back();
      }
      continue;
    }
    out.letters.push_back(letter);
  }
  return out;
}

std::int64_t word_weight(const MappingWord& word) {
  std::int64_t weight = 0;
  for (const auto& letter : word.letters) {
    weight += letter.exponent >= 0 ? letter.exponent : -letter.exponent;
  }
  return weight;
}

SupportProfile support_profile(const MappingWord& word) {
  SupportProfile profile;
  std::set<std::string> touched;
  std::int64_t depth = 0;
  for (const auto& letter : word.letters) {
    if (const auto* twist = std::get_if<CurveShadow>(&letter.gen)) {
      depth = std::max(depth, twist->max_level());
    } else {
      const auto& shift = std::get<ShiftGen>(letter.gen);
      profile.compact = false;
      touched.insert(shift.from_end);
      touched.insert(shift.to_end);
    }
  }
  if (profile.compact) {
    profile.minimal_depth = depth;
  } else {
    for (const auto& arm : word.base.arm_ids) {
      if (touched.count(arm)) {
        profile.arms_touched.push_back(arm);
      }
    }
  }
  return profile;
}

CurveShadow act(const MappingWord& word, const CurveShadow& c) {
  if (word.base != c.surface) {
    fail(Status::invariant_violation, "word and shadow live on different surfaces");
  }
  CurveShadow out = c;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const auto* shift = std::get_if<ShiftGen>(&it->gen);
    if (shift == nullptr) {
      continue;  // twists preserve the whole ledger profile
    }
    for (std::size_t i = 0; i < out.arm_side.size(); ++i) {
      if (out.arm_side[i] == shift->from_end) {
        out.levels[i] -= it->exponent;
      } else if (out.arm_side[i] == shift->to_end) {
        out.levels[i] += it->exponent;
      }
      if (out.levels[i] < 0) {
        fail(Status::invariant_violation, "general position violated");
      }
    }
  }
  return out;
}

MappingWord pushforward_to_filled(const MappingWord& word) {
  MappingWord out{fill_and_cap(word.base), {}};
  out.letters.reserve(word.letters.size());
  for (const auto& letter : word.letters) {
    if (const auto* twist = std::get_if<CurveShadow>(&letter.gen)) {
      CurveShadow filled = *twist;
      filled.surface = out.base;
      filled.punctures_enclosed.clear();
      filled.boundary_enclosed.clear();
      out.letters.push_back(Letter{std::move(filled), letter.exponent});
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

}  // namespace sepflux
