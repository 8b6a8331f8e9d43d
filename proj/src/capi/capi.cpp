#include "sepflux/sepflux.h"

#include <cstring>
#include <string>

#include "core/curves.hpp"
#include "core/engine.hpp"
#include "core/error.hpp"
#include "core/homology.hpp"
#include "core/surface.hpp"
#include "core/surface_doc.hpp"
#include "core/word_grammar.hpp"

struct sfx_surface {
  sepflux::SurfaceSpec spec;
};

struct sfx_word {
  sepflux::MappingWord word;
};

struct sfx_slice {
  sepflux::ColoredSlice slice;
  sepflux::ColoringReport report;
};

namespace {

thread_local std::string g_last_error;

sfx_status set_error(sfx_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
sfx_status guarded(Fn&& fn) {
  try {
    fn();
    return SFX_OK;
  } catch (const sepflux::Error& e) {
    return set_error(static_cast<sfx_status>(e.status()), e.what());
  } catch (const std::exception& e) {
    return set_error(SFX_ERR_INTERNAL, e.what());
  }
}

sfx_status require(bool ok, const char* what) {
  return ok ? SFX_OK : set_error(SFX_ERR_ARGUMENT, what);
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

sepflux::EndPartition partition_from(const char* const* end_ids, size_t n_ends) {
  sepflux::EndPartition partition;
  partition.positive_side.reserve(n_ends);
  for (size_t i = 0; i < n_ends; ++i) {
    if (end_ids[i] == nullptr) {
      sepflux::fail(sepflux::Status::argument, "null end identifier");
    }
    partition.positive_side.emplace_back(end_ids[i]);
  }
  return partition;
}

sfx_status fill_values(const std::vector<std::int64_t>& values,
                       int64_t* out, size_t cap, size_t* len) {
  if (len != nullptr) {
    *len = values.size();
  }
  if (out != nullptr) {
    const size_t count = cap < values.size() ? cap : values.size();
    for (size_t i = 0; i < count; ++i) {
      out[i] = values[i];
    }
  }
  return SFX_OK;
}

sfx_status check_word_surface(const sfx_surface* s, const sfx_word* w) {
  if (w->word.base != s->spec) {
    return set_error(SFX_ERR_ARGUMENT, "word was parsed for a different surface");
  }
  return SFX_OK;
}

}  // namespace

extern "C" {

const char* sfx_status_name(sfx_status status) {
  switch (status) {
    case SFX_OK: return "ok";
    case SFX_ERR_ARGUMENT: return "argument error";
    case SFX_ERR_PARSE: return "parse error";
    case SFX_ERR_INVARIANT: return "invariant violation";
    case SFX_ERR_HYPOTHESIS: return "hypothesis violation";
    case SFX_ERR_CLASS: return "bad class";
    case SFX_ERR_INTERNAL: return "internal check failure";
  }
  return "unknown status";
}

const char* sfx_last_error(void) {
  return g_last_error.c_str();
}

sfx_status sfx_surface_from_json(const char* json_text, sfx_surface** out) {
  if (auto bad = require(json_text != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] {
    *out = new sfx_surface{sepflux::parse_surface_document(json_text)};
  });
}

sfx_status sfx_surface_fill_and_cap(const sfx_surface* s, sfx_surface** out) {
  if (auto bad = require(s != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new sfx_surface{sepflux::fill_and_cap(s->spec)}; });
}

void sfx_surface_free(sfx_surface* s) {
  delete s;
}

sfx_status sfx_surface_classify(const sfx_surface* s, sfx_classification* out) {
  if (auto bad = require(s != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] {
    const auto q = sepflux::classify(s->spec);
    out->genus_is_infinite = q.genus_infinite ? 1 : 0;
    out->genus = q.genus;
    out->boundary = q.boundary_count;
    out->ends = q.end_count;
    out->genus_ends = q.genus_end_count;
  });
}

sfx_status sfx_surface_same_type(const sfx_surface* a, const sfx_surface* b, int* out) {
  if (auto bad = require(a != nullptr && b != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = sepflux::same_topological_type(a->spec, b->spec) ? 1 : 0; });
}

sfx_status sfx_surface_arm_count(const sfx_surface* s, int64_t* out) {
  if (auto bad = require(s != nullptr && out != nullptr, "null argument")) return bad;
  *out = s->spec.arm_count();
  return SFX_OK;
}

sfx_status sfx_sep_rank(const sfx_surface* s, int64_t* out) {
  if (auto bad = require(s != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = sepflux::sep_rank(s->spec); });
}

sfx_status sfx_h1_rank(const sfx_surface* s, int64_t* out) {
  if (auto bad = require(s != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = sepflux::h1_rank(s->spec); });
}

sfx_status sfx_class_of_partition(const sfx_surface* s,
                                  const char* const* end_ids, size_t n_ends,
                                  int64_t* coords, size_t cap, size_t* len) {
  if (auto bad = require(s != nullptr && (end_ids != nullptr || n_ends == 0), "null argument")) return bad;
  return guarded([&] {
    const auto cls = sepflux::class_of_partition_on(s->spec, partition_from(end_ids, n_ends));
    fill_values(cls.coords, coords, cap, len);
  });
}

sfx_status sfx_word_parse(const sfx_surface* s, const char* text, sfx_word** out) {
  if (auto bad = require(s != nullptr && text != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = new sfx_word{sepflux::parse_word(s->spec, text)}; });
}

void sfx_word_free(sfx_word* w) {
  delete w;
}

sfx_status sfx_word_print(const sfx_word* w, char** out) {
  if (auto bad = require(w != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = copy_string(sepflux::print_word(w->word)); });
}

void sfx_string_free(char* s) {
  delete[] s;
}

sfx_status sfx_phi_coords(const sfx_surface* s,
                          const int64_t* coords, size_t n_coords,
                          const sfx_word* w, int64_t* out) {
  if (auto bad = require(s != nullptr && w != nullptr && out != nullptr &&
                             (coords != nullptr || n_coords == 0),
                         "null argument")) {
    return bad;
  }
  if (auto bad = check_word_surface(s, w)) return bad;
  return guarded([&] {
    auto cls = sepflux::zero_class(sepflux::fill_and_cap(s->spec));
    if (n_coords != cls.coords.size()) {
      sepflux::fail(sepflux::Status::bad_class,
                    "class coordinate vector must have length " + std::to_string(cls.coords.size()));
    }
    for (size_t i = 0; i < n_coords; ++i) {
      cls.coords[i] = coords[i];
    }
    *out = sepflux::phi(cls, w->word);
  });
}

sfx_status sfx_phi_partition(const sfx_surface* s,
                             const char* const* end_ids, size_t n_ends,
                             const sfx_word* w, int64_t* out) {
  if (auto bad = require(s != nullptr && w != nullptr && out != nullptr &&
                             (end_ids != nullptr || n_ends == 0),
                         "null argument")) {
    return bad;
  }
  if (auto bad = check_word_surface(s, w)) return bad;
  return guarded([&] {
    const auto cls = sepflux::class_of_partition_on(s->spec, partition_from(end_ids, n_ends));
    *out = sepflux::phi(cls, w->word);
  });
}

sfx_status sfx_flux_vector(const sfx_surface* s, const sfx_word* w,
                           int64_t* values, size_t cap, size_t* len) {
  if (auto bad = require(s != nullptr && w != nullptr, "null argument")) return bad;
  if (auto bad = check_word_surface(s, w)) return bad;
  return guarded([&] {
    const auto flux = sepflux::project_to_A(w->word);
    fill_values(flux.values, values, cap, len);
  });
}

sfx_status sfx_in_closure(const sfx_surface* s, const sfx_word* w, int* out) {
  if (auto bad = require(s != nullptr && w != nullptr && out != nullptr, "null argument")) return bad;
  if (auto bad = check_word_surface(s, w)) return bad;
  return guarded([&] { *out = sepflux::in_closure_test(w->word) ? 1 : 0; });
}

sfx_status sfx_pairing_matrix(const sfx_surface* s,
                              int64_t* entries, size_t cap, size_t* dim) {
  if (auto bad = require(s != nullptr, "null argument")) return bad;
  return guarded([&] {
    const auto words = sepflux::dual_basis_words(s->spec);
    const auto classes = sepflux::basis_classes(sepflux::fill_and_cap(s->spec));
    const auto matrix = sepflux::pairing_matrix(classes, words);
    if (dim != nullptr) {
      *dim = matrix.size();
    }
    if (entries != nullptr) {
      size_t written = 0;
      for (const auto& row : matrix) {
        for (const auto entry : row) {
          if (written >= cap) {
            return;
          }
          entries[written++] = entry;
        }
      }
    }
  });
}

sfx_status sfx_factor(const sfx_surface* s, const sfx_word* w,
                      sfx_word** kappa, sfx_word** residual) {
  if (auto bad = require(s != nullptr && w != nullptr && kappa != nullptr && residual != nullptr,
                         "null argument")) {
    return bad;
  }
  if (auto bad = check_word_surface(s, w)) return bad;
  return guarded([&] {
    auto parts = sepflux::factor(w->word);
    *kappa = new sfx_word{std::move(parts.kappa_word)};
    *residual = new sfx_word{std::move(parts.residual)};
  });
}

sfx_status sfx_slice_build(const sfx_surface* s,
                           const char* const* end_ids, size_t n_ends,
                           int64_t depth, sfx_slice** out) {
  if (auto bad = require(s != nullptr && out != nullptr && (end_ids != nullptr || n_ends == 0),
                         "null argument")) {
    return bad;
  }
  return guarded([&] {
    const auto partition = partition_from(end_ids, n_ends);
    const auto cls = sepflux::class_of_partition_on(s->spec, partition);

    // Level-zero basepoint curve carrying the partition data on the
    // original surface: arms at level 0, no core handles, the listed
    // punctures enclosed.
    std::vector<std::pair<std::string, std::int64_t>> arm_levels;
    std::vector<std::string> punctures;
    for (const auto& id : partition.positive_side) {
      if (s->spec.is_arm(id)) {
        arm_levels.emplace_back(id, 0);
      } else {
        punctures.push_back(id);
      }
    }
    const auto gamma = sepflux::make_shadow(s->spec, std::move(arm_levels), 0,
                                            std::move(punctures));
    auto slice = sepflux::build_slice(cls, depth, gamma);
    auto report = sepflux::verify_proper_coloring(slice);
    *out = new sfx_slice{std::move(slice), std::move(report)};
  });
}

void sfx_slice_free(sfx_slice* sl) {
  delete sl;
}

sfx_status sfx_slice_counts(const sfx_slice* sl, size_t* n_vertices, size_t* n_edges) {
  if (auto bad = require(sl != nullptr, "null argument")) return bad;
  if (n_vertices != nullptr) {
    *n_vertices = sl->slice.vertices.size();
  }
  if (n_edges != nullptr) {
    *n_edges = sl->slice.edges.size();
  }
  return SFX_OK;
}

sfx_status sfx_slice_is_proper(const sfx_slice* sl, int* out) {
  if (auto bad = require(sl != nullptr && out != nullptr, "null argument")) return bad;
  *out = sl->report.proper ? 1 : 0;
  return SFX_OK;
}

sfx_status sfx_slice_export_text(const sfx_slice* sl, char** out) {
  if (auto bad = require(sl != nullptr && out != nullptr, "null argument")) return bad;
  return guarded([&] { *out = copy_string(sepflux::export_slice(sl->slice)); });
}

}  // extern "C"
