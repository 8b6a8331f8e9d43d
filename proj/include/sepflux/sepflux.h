/* sepflux: separating-homology flux machinery for infinite-type surfaces.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * destroyed through this interface; every fallible call returns an
 * sfx_status and leaves a diagnostic retrievable via sfx_last_error().
 * Handles are immutable after creation and safe to share across threads;
 * the error message is thread-local.
 */
#ifndef SEPFLUX_H
#define SEPFLUX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SEPFLUX_API __declspec(dllexport)
#else
#  define SEPFLUX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Matches the CLI exit-code contract. */
typedef enum sfx_status {
  SFX_OK = 0,
  SFX_ERR_ARGUMENT = 1,   /* null handle or bad buffer */
  SFX_ERR_PARSE = 2,      /* malformed document or word */
  SFX_ERR_INVARIANT = 3,  /* structural invariant violated */
  SFX_ERR_HYPOTHESIS = 4, /* theorem hypothesis not met */
  SFX_ERR_CLASS = 5,      /* class missing, zero or not simple */
  SFX_ERR_INTERNAL = 6    /* internal consistency check failed */
} sfx_status;

typedef struct sfx_surface sfx_surface;
typedef struct sfx_word sfx_word;
typedef struct sfx_slice sfx_slice;

/* Static name for a status value. */
SEPFLUX_API const char* sfx_status_name(sfx_status status);

/* Diagnostic for the most recent failing call on this thread. */
SEPFLUX_API const char* sfx_last_error(void);

/* ---- surfaces ---------------------------------------------------------- */

/* Parses a surface document: a flat JSON object with keys core_genus,
 * boundary, punctures and arms. */
SEPFLUX_API sfx_status sfx_surface_from_json(const char* json_text, sfx_surface** out);
SEPFLUX_API sfx_status sfx_surface_fill_and_cap(const sfx_surface* s, sfx_surface** out);
SEPFLUX_API void sfx_surface_free(sfx_surface* s);

typedef struct sfx_classification {
  int genus_is_infinite;
  int64_t genus; /* meaningful only when genus_is_infinite == 0 */
  int64_t boundary;
  int64_t ends;
  int64_t genus_ends;
} sfx_classification;

SEPFLUX_API sfx_status sfx_surface_classify(const sfx_surface* s, sfx_classification* out);
SEPFLUX_API sfx_status sfx_surface_same_type(const sfx_surface* a, const sfx_surface* b, int* out);
SEPFLUX_API sfx_status sfx_surface_arm_count(const sfx_surface* s, int64_t* out);

/* Rank of the separating homology lattice of the filled surface. */
SEPFLUX_API sfx_status sfx_sep_rank(const sfx_surface* s, int64_t* out);

/* Rank of the first cohomology of the pure mapping class group; requires
 * genus at least two. */
SEPFLUX_API sfx_status sfx_h1_rank(const sfx_surface* s, int64_t* out);

/* ---- homology classes -------------------------------------------------- */

/* Coordinates of the class of a partition of the ends (punctures are
 * dropped by the pushforward). Writes min(cap, n-1) entries and stores the
 * full length in *len; call with coords == NULL and cap == 0 to query. */
SEPFLUX_API sfx_status sfx_class_of_partition(const sfx_surface* s,
                                              const char* const* end_ids, size_t n_ends,
                                              int64_t* coords, size_t cap, size_t* len);

/* ---- words ------------------------------------------------------------- */

/* Parses the word grammar: terms S(i,j), T(P={...}; l=...; h=...) or 1,
 * joined by '*', with optional '^' exponents. The rightmost term acts
 * first. */
SEPFLUX_API sfx_status sfx_word_parse(const sfx_surface* s, const char* text, sfx_word** out);
SEPFLUX_API void sfx_word_free(sfx_word* w);

/* Prints the word in the same grammar. Free the string with
 * sfx_string_free. */
SEPFLUX_API sfx_status sfx_word_print(const sfx_word* w, char** out);
SEPFLUX_API void sfx_string_free(char* s);

/* ---- flux evaluation ---------------------------------------------------- */

/* Flux of the word through the class with the given coordinates (length
 * must be n-1). */
SEPFLUX_API sfx_status sfx_phi_coords(const sfx_surface* s,
                                      const int64_t* coords, size_t n_coords,
                                      const sfx_word* w, int64_t* out);

/* Flux through the class of a partition of the ends. */
SEPFLUX_API sfx_status sfx_phi_partition(const sfx_surface* s,
                                         const char* const* end_ids, size_t n_ends,
                                         const sfx_word* w, int64_t* out);

/* Full flux vector of the word: entry i is the flux through the i-th basis
 * class. Same buffer convention as sfx_class_of_partition. */
SEPFLUX_API sfx_status sfx_flux_vector(const sfx_surface* s, const sfx_word* w,
                                       int64_t* values, size_t cap, size_t* len);

/* Whether every flux coordinate vanishes. */
SEPFLUX_API sfx_status sfx_in_closure(const sfx_surface* s, const sfx_word* w, int* out);

/* Pairing of the basis classes against the dual handle-shift basis, row
 * major; *dim receives n-1 and at most cap entries are written. Requires at
 * least two arms. */
SEPFLUX_API sfx_status sfx_pairing_matrix(const sfx_surface* s,
                                          int64_t* entries, size_t cap, size_t* dim);

/* Splits the word into a dual-basis kappa word realizing its flux and a
 * flux-free residual. */
SEPFLUX_API sfx_status sfx_factor(const sfx_surface* s, const sfx_word* w,
                                  sfx_word** kappa, sfx_word** residual);

/* ---- colored slices ----------------------------------------------------- */

/* Builds the colored slice of the curve graph for the class of the given
 * partition, over cut levels 0..depth, colored relative to the level-zero
 * basepoint curve. The class must be simple and nonzero. */
SEPFLUX_API sfx_status sfx_slice_build(const sfx_surface* s,
                                       const char* const* end_ids, size_t n_ends,
                                       int64_t depth, sfx_slice** out);
SEPFLUX_API void sfx_slice_free(sfx_slice* sl);
SEPFLUX_API sfx_status sfx_slice_counts(const sfx_slice* sl, size_t* n_vertices, size_t* n_edges);
SEPFLUX_API sfx_status sfx_slice_is_proper(const sfx_slice* sl, int* out);

/* Plain-text graph export; free with sfx_string_free. */
SEPFLUX_API sfx_status sfx_slice_export_text(const sfx_slice* sl, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEPFLUX_H */
