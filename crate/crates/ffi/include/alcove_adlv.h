#ifndef ALCOVE_ADLV_H
#define ALCOVE_ADLV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Capacity of [`AdlvEntry::word`], including the terminating NUL.
 */
#define ADLV_WORD_CAPACITY 32

typedef enum AdlvGroup {
  ADLV_GROUP_A1 = 0,
  ADLV_GROUP_A2 = 1,
  ADLV_GROUP_C2 = 2,
} AdlvGroup;

typedef enum AdlvMode {
  ADLV_MODE_ALL_VERTICES = 0,
  ADLV_MODE_FUNDAMENTAL_DOMAIN = 1,
} AdlvMode;

/**
 * Status codes returned by every fallible function.
 */
typedef enum AdlvStatus {
  ADLV_STATUS_OK = 0,
  ADLV_STATUS_NULL_POINTER = 1,
  ADLV_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The map changed between radius R-1 and R.
   */
  ADLV_STATUS_UNSTABLE = 3,
  /**
   * The alcove lies outside the computed window.
   */
  ADLV_STATUS_OUTSIDE_WINDOW = 4,
  ADLV_STATUS_NOT_IN_SHRUNKEN_REGION = 5,
  ADLV_STATUS_PARSE_ERROR = 6,
  ADLV_STATUS_INTERNAL = 7,
} AdlvStatus;

/**
 * Opaque dimension map handle.
 */
typedef struct AdlvDimensionMap AdlvDimensionMap;

/**
 * Opaque root system handle.
 */
typedef struct AdlvRootSystem AdlvRootSystem;

/**
 * One map entry. `dim` is meaningful only when `nonempty` is true.
 */
typedef struct AdlvEntry {
  int64_t lambda[2];
  int64_t length;
  bool nonempty;
  int64_t dim;
  /**
   * Reduced word of the finite part, such as `s1s2`, NUL terminated.
   */
  char word[ADLV_WORD_CAPACITY];
} AdlvEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread; empty if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *adlv_last_error(void);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum AdlvStatus adlv_root_system_new(enum AdlvGroup group, struct AdlvRootSystem **out);

/**
 * # Safety
 * `rs` must come from [`adlv_root_system_new`] and not be freed twice.
 */
void adlv_root_system_free(struct AdlvRootSystem *rs);

/**
 * Order of the finite Weyl group, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t adlv_root_system_order(const struct AdlvRootSystem *rs);

/**
 * Length of the longest finite Weyl element, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t adlv_root_system_delta(const struct AdlvRootSystem *rs);

/**
 * Computes the map for `l(w) <= window` from vertices with `l(Q1) <= radius`.
 * Unless `allow_unstable` is set, a map that changes between radius R-1
 * and R is rejected with [`AdlvStatus::Unstable`].
 *
 * # Safety
 * `rs` must be a live handle and `out` valid for one write.
 */
enum AdlvStatus adlv_map_compute(const struct AdlvRootSystem *rs,
                                 int64_t radius,
                                 int64_t window,
                                 enum AdlvMode mode,
                                 bool allow_unstable,
                                 struct AdlvDimensionMap **out);

/**
 * # Safety
 * `map` must come from [`adlv_map_compute`] and not be freed twice.
 */
void adlv_map_free(struct AdlvDimensionMap *map);

/**
 * Number of entries, or 0 for a null handle.
 *
 * # Safety
 * `map` must be null or a live handle.
 */
size_t adlv_map_len(const struct AdlvDimensionMap *map);

/**
 * # Safety
 * `map` must be null or a live handle.
 */
bool adlv_map_is_stable(const struct AdlvDimensionMap *map);

/**
 * Entry `index` in canonical order (length, then lambda, then Weyl element).
 *
 * # Safety
 * `map` must be a live handle and `out` valid for one write.
 */
enum AdlvStatus adlv_map_entry_at(const struct AdlvDimensionMap *map,
                                  size_t index,
                                  struct AdlvEntry *out);

/**
 * Looks up the alcove `(lambda, word)`. Writes whether the variety is
 * non-empty and, if so, its dimension.
 *
 * # Safety
 * `map` must be a live handle, `word` a NUL-terminated string and the
 * outputs valid for one write each.
 */
enum AdlvStatus adlv_map_get(const struct AdlvDimensionMap *map,
                             int64_t lambda1,
                             int64_t lambda2,
                             const char *word,
                             bool *out_nonempty,
                             int64_t *out_dim);

/**
 * The closed formula on the shrunken region.
 *
 * # Safety
 * As for [`adlv_map_get`], with a root system handle.
 */
enum AdlvStatus adlv_formula_eval(const struct AdlvRootSystem *rs,
                                  int64_t lambda1,
                                  int64_t lambda2,
                                  const char *word,
                                  bool *out_nonempty,
                                  int64_t *out_dim);

/**
 * Dimension at hyperspecial level for the dominant coweight `mu`, in
 * coroot coordinates.
 *
 * # Safety
 * `map` must be a live handle and `out` valid for one write.
 */
enum AdlvStatus adlv_k_level_dimension(const struct AdlvDimensionMap *map,
                                       int64_t mu1,
                                       int64_t mu2,
                                       int64_t *out);

/**
 * The map as a JSON document, or null on failure. Release the string with
 * [`adlv_string_free`].
 *
 * # Safety
 * `map` must be null or a live handle.
 */
char *adlv_map_to_json(const struct AdlvDimensionMap *map);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void adlv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALCOVE_ADLV_H */
