#include "core/engine.hpp"

#include <algorithm>

namespace sepflux {

namespace {

void require_word_over_class(const SeparatingClass& v, const MappingWord& w) {
  if (fill_and_cap(w.base) != v.base) {
    fail(Status::invariant_violation, "word surface does not fill to the class surface");
  }
}

CurveShadow representative(const SeparatingClass& v, const MappingWord& w,
                           std::int64_t level_pad, std::int64_t core_handles) {
  if (v.is_zero()) {
    fail(Status::bad_class, "zero class");
  }
  const auto side = is_simple(v);
  if (!side) {
    fail(Status::bad_class, "class not simple");
  }
  const std::int64_t level = word_weight(w) + 1 + level_pad;
  std::vector<std::pair<std::string, std::int64_t>> arm_levels;
  arm_levels.reserve(side->positive_side.size());
  for (const auto& arm : side->positive_side) {
    arm_levels.emplace_back(arm, level);
  }
  return make_shadow(v.base, std::move(arm_levels), core_handles);
}

}  // namespace

bool FluxVector::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](std::int64_t x) { return x == 0; });
}

CurveShadow deep_representative(const SeparatingClass& v, const MappingWord& w) {
  return representative(v, w, 0, 0);
}

std::int64_t phi_simple_at(const SeparatingClass& v, const MappingWord& w,
                           std::int64_t level_pad, std::int64_t core_handles,
                           std::int64_t depth_pad) {
  require_word_over_class(v, w);
  if (level_pad < 0 || depth_pad < 0) {
    fail(Status::invariant_violation, "padding must be nonnegative");
  }
  const auto gamma = representative(v, w, level_pad, core_handles);
  const auto filled = pushforward_to_filled(w);
  const auto image = act(filled, gamma);
  const auto basepoint = default_basepoint_end(v.base, gamma.arm_side);
  const std::int64_t depth = 2 * word_weight(w) + 2 + depth_pad;
  return color(gamma, image, basepoint, depth);
}

std::int64_t phi_simple(const SeparatingClass& v, const MappingWord& w) {
  return phi_simple_at(v, w, 0, 0, 0);
}

std::int64_t phi(const SeparatingClass& v, const MappingWord& w) {
  require_word_over_class(v, w);
  std::int64_t total = 0;
  for (const auto& [coefficient, index] : decompose(v)) {
    total += coefficient * phi_simple(basis_class(v.base, index), w);
  }
  return total;
}

DualBasis dual_basis(const SurfaceSpec& spec) {
  const auto n = spec.arm_ids.size();
  if (n < 2) {
    fail(Status::hypothesis_violation, "fewer than two ends accumulated by genus");
  }
  DualBasis basis{spec, {}};
  basis.shifts.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis.shifts.push_back(ShiftGen{spec.arm_ids[n - 1], spec.arm_ids[i]});
  }
  return basis;
}

std::vector<MappingWord> dual_basis_words(const SurfaceSpec& spec) {
  std::vector<MappingWord> words;
  for (const auto& shift : dual_basis(spec).shifts) {
    auto word = identity_word(spec);
    append_letter(word, shift, 1);
    words.push_back(std::move(word));
  }
  return words;
}

std::vector<SeparatingClass> basis_classes(const SurfaceSpec& filled) {
  std::vector<SeparatingClass> classes;
  const auto rank = sep_rank(filled);
  classes.reserve(static_cast<std::size_t>(rank));
  for (std::int64_t i = 0; i < rank; ++i) {
    classes.push_back(basis_class(filled, static_cast<std::size_t>(i)));
  }
  return classes;
}

std::vector<std::vector<std::int64_t>> pairing_matrix(
    const std::vector<SeparatingClass>& classes,
    const std::vector<MappingWord>& words) {
  std::vector<std::vector<std::int64_t>> matrix;
  matrix.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<std::int64_t> row;
    row.reserve(words.size());
    for (const auto& word : words) {
      row.push_back(phi(cls, word));
    }
    matrix.push_back(std::move(row));
  }
  return matrix;
}

FluxVector project_to_A(const MappingWord& w) {
  FluxVector flux{w.base, {}};
  const auto filled = fill_and_cap(w.base);
  for (const auto& cls : basis_classes(filled)) {
    flux.values.push_back(phi_simple(cls, w));
  }
  return flux;
}

MappingWord kappa_word(const SurfaceSpec& spec, const std::vector<std::int64_t>& exponents) {
  auto word = identity_word(spec);
  if (exponents.empty()) {
    return word;
  }
  const auto basis = dual_basis(spec);
  if (exponents.size() != basis.shifts.size()) {
    fail(Status::invariant_violation, "flux vector length does not match the basis");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) {
      append_letter(word, basis.shifts[i], exponents[i]);
    }
  }
  return word;
}

Factorization factor(const MappingWord& w) {
  if (w.base.arm_count() < 2) {
    return Factorization{identity_word(w.base), w};
  }
  const auto flux = project_to_A(w);
  auto kappa = kappa_word(w.base, flux.values);
  auto residual = concat(w, invert(kappa));
  if (!in_closure_test(residual)) {
    fail(Status::internal_check, "residual flux is not zero");
  }
  return Factorization{std::move(kappa), std::move(residual)};
}

bool in_closure_test(const MappingWord& w) {
  return project_to_A(w).is_zero();
}

std::int64_t h1_rank(const SurfaceSpec& spec) {
  if (spec.arm_ids.empty() && spec.core_genus < 2) {
    fail(Status::hypothesis_violation, "hypothesis violated: genus at least 2 required");
  }
  return sep_rank(spec);
}

}  // namespace sepflux
