#ifndef MCKAY_H
#define MCKAY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum MckayStatus {
  MCKAY_STATUS_OK = 0,
  MCKAY_STATUS_NULL_ARGUMENT = 1,
  MCKAY_STATUS_INVALID_INPUT = 2,
  MCKAY_STATUS_INTERNAL = 3,
  MCKAY_STATUS_PANIC = 4,
  MCKAY_STATUS_INVALID_UTF8 = 5,
} MckayStatus;

/**
 * A finite matrix group. Opaque to C.
 */
typedef struct MckayGroup MckayGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a catalog group such as `"binary-dihedral:3"`, exploring at most
 * `cap` elements.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum MckayStatus mckay_group_from_catalog(const char *name, size_t cap, struct MckayGroup **out);

/**
 * Builds a group from a JSON group document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MckayStatus mckay_group_from_json(const char *json, size_t cap, struct MckayGroup **out);

/**
 * Releases a group. Null is ignored.
 *
 * # Safety
 * `g` must come from a `mckay_group_from_*` call and not be freed twice.
 */
void mckay_group_free(struct MckayGroup *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_group_order(const struct MckayGroup *g, size_t *out);

/**
 * Matrix size of the group.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_group_dimension(const struct MckayGroup *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_group_class_count(const struct MckayGroup *g, size_t *out);

/**
 * Number of conjugacy classes of the group modulo its scalars.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_group_projective_class_count(const struct MckayGroup *g, size_t *out);

/**
 * Stringy E-function as JSON `{"polynomial": [{p, q, coeff}], "rendered", "euler"}`.
 * With `cotangent`, the group is first replaced by its action on `V ⊕ V*`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable. Free the result with
 * `mckay_string_free`.
 */
enum MckayStatus mckay_stringy_e_json(const struct MckayGroup *g, bool cotangent, char **out);

/**
 * Hodge polynomial of a resolution of `T*Pⁿ/G` as JSON, with the class table.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable. Free the result with
 * `mckay_string_free`.
 */
enum MckayStatus mckay_hodge_tpn_json(const struct MckayGroup *g, char **out);

/**
 * `(n+1)` times the number of projective classes.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_euler_tpn(const struct MckayGroup *g, int64_t *out);

/**
 * Whether nontrivial fixed loci have pure codimension 2. The group must
 * preserve the standard symplectic form.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_passes_pure_codim2(const struct MckayGroup *g, bool *out);

/**
 * Whether the group is generated by pseudo-reflections.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MckayStatus mckay_generated_by_pseudo_reflections(const struct MckayGroup *g, bool *out);

/**
 * Poincaré polynomials of `Hilbⁿ(T*Σ)`, `n ≤ terms`, for a genus-`genus`
 * curve, as JSON `{"series": [[c_0, c_1, ...], ...]}` with decimal strings.
 *
 * # Safety
 * `out` must be writable. Free the result with `mckay_string_free`.
 */
enum MckayStatus mckay_hilb_series_json(int64_t genus, int64_t terms, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void mckay_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *mckay_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCKAY_H */
