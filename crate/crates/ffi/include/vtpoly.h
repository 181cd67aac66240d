/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef VTPOLY_H
#define VTPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VtpStatus {
  VTP_STATUS_OK = 0,
  /**
   * The call succeeded but the answer is negative (not embedded, not
   * isomorphic, nothing found).
   */
  VTP_STATUS_NEGATIVE = 1,
  VTP_STATUS_NULL_POINTER = 2,
  VTP_STATUS_INVALID_UTF8 = 3,
  VTP_STATUS_PARSE = 4,
  VTP_STATUS_INVALID_MAP = 5,
  VTP_STATUS_INVALID_ARGUMENT = 6,
  VTP_STATUS_NOT_EMBEDDED = 7,
  VTP_STATUS_OUT_OF_RANGE = 8,
  VTP_STATUS_PANIC = 9,
} VtpStatus;

typedef enum VtpGroup {
  VTP_GROUP_TETRAHEDRAL = 0,
  VTP_GROUP_OCTAHEDRAL = 1,
  VTP_GROUP_ICOSAHEDRAL = 2,
} VtpGroup;

/**
 * Opaque result of an enumeration run.
 */
typedef struct VtpEnumeration VtpEnumeration;

/**
 * Opaque candidate map.
 */
typedef struct VtpMap VtpMap;

/**
 * Counts and genus of a map.
 */
typedef struct VtpSummary {
  uint32_t vertices;
  uint32_t edges;
  uint32_t faces;
  int64_t genus;
  uint32_t degree;
} VtpSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Free with
 * [`vtp_string_free`].
 */
char *vtp_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void vtp_string_free(char *s);

/**
 * Parses map text (one symbol per line) and builds the map over `T`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum VtpStatus vtp_map_parse(const char *text, struct VtpMap **out);

/**
 * # Safety
 * `map` must come from this library and not be freed twice. Null is ignored.
 */
void vtp_map_free(struct VtpMap *map);

/**
 * # Safety
 * `map` must be a live handle; `out` must be writable.
 */
enum VtpStatus vtp_map_summary(const struct VtpMap *map, struct VtpSummary *out);

/**
 * Map text of the handle, one symbol per line.
 *
 * # Safety
 * `map` must be a live handle; `out` must be writable.
 */
enum VtpStatus vtp_map_to_text(const struct VtpMap *map, char **out);

/**
 * Verifies the realization with the base vertex at `base` ("a,b,c", each an
 * integer or p/q). Returns `Ok` when embedded and `Negative` otherwise; the
 * line-oriented report goes to `report` unless it is null.
 *
 * # Safety
 * `map` must be a live handle, `base` a NUL-terminated string, `report`
 * null or writable.
 */
enum VtpStatus vtp_verify(const struct VtpMap *map, const char *base, char **report);

/**
 * OFF text of an embedded realization; `NotEmbedded` otherwise.
 *
 * # Safety
 * `map` must be a live handle, `base` a NUL-terminated string, `out` writable.
 */
enum VtpStatus vtp_export_off(const struct VtpMap *map, const char *base, char **out);

/**
 * Enumerates candidate maps over `T`. `min_genus` is ignored when negative.
 *
 * # Safety
 * `out` must be writable.
 */
enum VtpStatus vtp_enumerate(bool tucker,
                             bool schewe,
                             int64_t min_genus,
                             struct VtpEnumeration **out);

/**
 * Number of classes in the enumeration, 0 for null.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t vtp_enumeration_len(const struct VtpEnumeration *e);

/**
 * A new map handle for class `index`; free it with [`vtp_map_free`].
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum VtpStatus vtp_enumeration_get(const struct VtpEnumeration *e,
                                   size_t index,
                                   struct VtpMap **out);

/**
 * # Safety
 * `e` must come from this library and not be freed twice. Null is ignored.
 */
void vtp_enumeration_free(struct VtpEnumeration *e);

/**
 * Grid search; writes the embedded bases one per line ("a,b,c") and their
 * count. Returns `Negative` when none is found.
 *
 * # Safety
 * `map` must be a live handle; `out` and `count` must be writable.
 */
enum VtpStatus vtp_search(const struct VtpMap *map,
                          int64_t bound,
                          uint32_t workers,
                          char **out,
                          size_t *count);

/**
 * Writes a row-major witness matrix when the maps are geometrically
 * isomorphic (`Ok`); returns `Negative` otherwise.
 *
 * # Safety
 * Both handles must be live; `witness` must point to 9 writable ints or be null.
 */
enum VtpStatus vtp_isomorphic(const struct VtpMap *a, const struct VtpMap *b, int32_t *witness);

bool vtp_tucker_admissible(enum VtpGroup group, uint64_t genus);

uint64_t vtp_heawood_min_vertices(uint64_t genus);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VTPOLY_H */
