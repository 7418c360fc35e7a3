#ifndef EXACT2_H
#define EXACT2_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call. Values 0 to 3 match the exit codes of the command line.
typedef enum Exact2Status {
  EXACT2_STATUS_OK = 0,
  // The computation ran and a mathematical check failed.
  EXACT2_STATUS_CHECK_FAILED = 1,
  EXACT2_STATUS_INVALID_INPUT = 2,
  EXACT2_STATUS_SIZE_BOUND = 3,
  EXACT2_STATUS_NULL_POINTER = 4,
  // A Rust panic was caught at the boundary.
  EXACT2_STATUS_PANIC = 5,
} Exact2Status;

typedef enum Exact2System {
  EXACT2_SYSTEM_BO = 0,
  EXACT2_SYSTEM_SO = 1,
  EXACT2_SYSTEM_BOF = 2,
} Exact2System;

// A functor between finite categories.
typedef struct Exact2Functor Exact2Functor;

// Kernel data (a catead, so-data or bof-data).
typedef struct Exact2Kernel Exact2Kernel;

// Mirrors the library's size bound; pass NULL where accepted for the default.
typedef struct Exact2SizeBound {
  size_t construct_objects;
  size_t construct_morphisms;
  size_t enumerate_objects;
  size_t enumerate_morphisms;
} Exact2SizeBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string.
const char *exact2_version(void);

// Message describing the last failure on this thread; empty after success.
// The pointer stays valid until the next call into the library on this thread.
const char *exact2_last_error(void);

// The default size bound, with `EXACT2_SIZE_BOUND` applied.
struct Exact2SizeBound exact2_size_bound_default(void);

// Release a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void exact2_string_free(char *s);

// Parse a `fincat-functor/v1` document. The functor and its categories must
// satisfy their laws.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum Exact2Status exact2_functor_from_json(const char *json, struct Exact2Functor **out);

// # Safety
// `f` must be NULL or a handle from this library, not yet freed.
void exact2_functor_free(struct Exact2Functor *f);

// # Safety
// `f` must be a live handle and `out` writable.
enum Exact2Status exact2_functor_to_json(const struct Exact2Functor *f, char **out);

// Class membership flags of `f`, as JSON.
//
// # Safety
// `f` must be a live handle, `bound` NULL or valid, and `out` writable.
enum Exact2Status exact2_classify(const struct Exact2Functor *f,
                                  const struct Exact2SizeBound *bound,
                                  char **out);

// Factor `f` through `system`; the JSON holds the middle category and both legs.
//
// # Safety
// `f` must be a live handle and `out` writable.
enum Exact2Status exact2_factor(const struct Exact2Functor *f,
                                enum Exact2System system,
                                char **out);

// Whether `f` is orthogonal to `g`; the JSON carries a witness when not.
//
// # Safety
// `f` and `g` must be live handles, `bound` NULL or valid, and `out` NULL or writable.
enum Exact2Status exact2_orthogonal(const struct Exact2Functor *f,
                                    const struct Exact2Functor *g,
                                    const struct Exact2SizeBound *bound,
                                    char **out);

// Kernel data of `f` in `system`.
//
// # Safety
// `f` must be a live handle, `bound` NULL or valid, and `out` writable.
enum Exact2Status exact2_kernel(const struct Exact2Functor *f,
                                enum Exact2System system,
                                const struct Exact2SizeBound *bound,
                                struct Exact2Kernel **out);

// Parse a `kernel/v1` document; its simplicial identities must hold.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum Exact2Status exact2_kernel_from_json(const char *json, struct Exact2Kernel **out);

// # Safety
// `k` must be NULL or a handle from this library, not yet freed.
void exact2_kernel_free(struct Exact2Kernel *k);

// # Safety
// `k` must be a live handle and `out` writable.
enum Exact2Status exact2_kernel_to_json(const struct Exact2Kernel *k, char **out);

// Congruence verdict for `k`; `EXACT2_STATUS_CHECK_FAILED` when some condition fails.
//
// # Safety
// `k` must be a live handle and `out` NULL or writable.
enum Exact2Status exact2_is_congruence(const struct Exact2Kernel *k, char **out);

// Effectivity of the congruence `k`. A non-congruence is invalid input.
//
// # Safety
// `k` must be a live handle, `bound` NULL or valid, and `out` NULL or writable.
enum Exact2Status exact2_check_effective(const struct Exact2Kernel *k,
                                         const struct Exact2SizeBound *bound,
                                         char **out);

// The ring counterexample report as JSON.
//
// # Safety
// `out` must be writable.
enum Exact2Status exact2_abcat_demo(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXACT2_H */
