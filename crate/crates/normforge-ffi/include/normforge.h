#ifndef NORMFORGE_H
#define NORMFORGE_H

/* Generated by cbindgen from the normforge-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call in this interface.
typedef enum {
  // The call succeeded and all of its assertions passed.
  NF_STATUS_OK = 0,
  // A required pointer was null.
  NF_STATUS_NULL_POINTER = 1,
  // An argument failed validation; details via `nf_last_error`.
  NF_STATUS_INVALID_ARGUMENT = 2,
  // A string argument was not valid UTF-8.
  NF_STATUS_UTF8 = 3,
  // The computation itself failed; details via `nf_last_error`.
  NF_STATUS_COMPUTE = 4,
  // The computation ran but one of its checked assertions failed.
  NF_STATUS_ASSERTION_FAILED = 5,
  // A fixed-point verdict came back unknown.
  NF_STATUS_UNKNOWN_VERDICT = 6,
} NfStatus;

// A finite group together with its canonical subgroup lattice.
typedef struct NfGroup NfGroup;

// One transfer system over the lattice of the group it was built from.
typedef struct NfTransferSystem NfTransferSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of this library as a static string; never freed.
const char *nf_version(void);

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread; never freed by the
// caller.
const char *nf_last_error(void);

// Releases a string returned through an out-parameter.
//
// # Safety
// `s` must be a pointer returned by this library's out-parameters, or null,
// and must not be freed twice.
void nf_string_free(char *s);

// Builds a group from a preset name such as `C4`, `S3`, or `C2xC2`.
//
// # Safety
// `name` must be a valid NUL-terminated string and `out` a valid pointer;
// on success `*out` owns a handle to release with [`nf_group_free`].
NfStatus nf_group_preset(const char *name, NfGroup **out);

// Builds a group from the JSON shape produced by [`nf_group_to_json`]: a
// name, a multiplication table, and optional element names.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer;
// on success `*out` owns a handle to release with [`nf_group_free`].
NfStatus nf_group_from_json(const char *json, NfGroup **out);

// Releases a group handle; null is a no-op.
//
// # Safety
// `group` must come from a group constructor and must not be freed twice.
void nf_group_free(NfGroup *group);

// Number of elements of the group.
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_group_order(const NfGroup *group, uint32_t *out);

// Name of the group; release with [`nf_string_free`].
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_group_name(const NfGroup *group, char **out);

// JSON for the group's multiplication table; release with
// [`nf_string_free`].
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_group_to_json(const NfGroup *group, char **out);

// Number of subgroups in the canonical lattice order.
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_subgroup_count(const NfGroup *group, uint32_t *out);

// Display name of the subgroup at a lattice index; release with
// [`nf_string_free`].
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_subgroup_name(const NfGroup *group, uint32_t index, char **out);

// Resolves a subgroup name such as `e`, `C2`, or `<s^2>` to its lattice
// index.
//
// # Safety
// `group` must be a live group handle, `name` a valid NUL-terminated
// string, and `out` a valid pointer.
NfStatus nf_subgroup_parse(const NfGroup *group, const char *name, uint32_t *out);

// Parses a transfer-system expression: `trivial`, `complete`, or `K->H`
// generator pairs separated by commas or semicolons. Generator pairs are
// saturated to the least transfer system containing them.
//
// # Safety
// `group` must be a live group handle, `expr` a valid NUL-terminated
// string, and `out` a valid pointer; on success `*out` owns a handle to
// release with [`nf_transfer_system_free`].
NfStatus nf_transfer_system_parse(const NfGroup *group, const char *expr, NfTransferSystem **out);

// Number of transfer systems on the group; enumerated on every call.
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer.
NfStatus nf_transfer_system_count(const NfGroup *group, uint32_t *out);

// The transfer system at an index of the enumeration, ordered by pair
// count then pair list.
//
// # Safety
// `group` must be a live group handle and `out` a valid pointer; on
// success `*out` owns a handle to release with
// [`nf_transfer_system_free`].
NfStatus nf_transfer_system_at(const NfGroup *group, uint32_t index, NfTransferSystem **out);

// Releases a transfer-system handle; null is a no-op.
//
// # Safety
// `ts` must come from a transfer-system constructor and must not be freed
// twice.
void nf_transfer_system_free(NfTransferSystem *ts);

// Short description such as `{e->C2, e->C4}`; release with
// [`nf_string_free`].
//
// # Safety
// `ts` must be a live transfer-system handle and `out` a valid pointer.
NfStatus nf_transfer_system_describe(const NfTransferSystem *ts, char **out);

// JSON for the system's strict pairs; release with [`nf_string_free`].
//
// # Safety
// `ts` must be a live transfer-system handle and `out` a valid pointer.
NfStatus nf_transfer_system_to_json(const NfTransferSystem *ts, char **out);

// Whether the system admits the transfer from lattice index `k` up to
// lattice index `h`; reflexive pairs are always admitted.
//
// # Safety
// `ts` must be a live transfer-system handle and `out` a valid pointer.
NfStatus nf_transfer_system_admits(const NfTransferSystem *ts, uint32_t k, uint32_t h, bool *out);

// Realizes the transfer system as the fixed points of the suboperad it
// cuts out and checks it comes back unchanged. The full certificate JSON
// is written even when the check fails; release it with
// [`nf_string_free`]. `monoid` names the label monoid: `dyadic`,
// `rational-embedding`, or `fat-dyadic` (`trivial` is rejected since it
// has no disjoint pair).
//
// # Safety
// `ts` must be a live transfer-system handle, `monoid` a valid
// NUL-terminated string, and `out_report` a valid pointer.
NfStatus nf_realize(const NfTransferSystem *ts,
                    const char *monoid,
                    uint32_t bound,
                    char **out_report);

// Decides fixed-point nonemptiness for every graph subgroup of the group
// at one arity, against this transfer system, and reports each verdict
// with its witness or obstruction as JSON; release the report with
// [`nf_string_free`].
//
// # Safety
// `ts` must be a live transfer-system handle, `monoid` a valid
// NUL-terminated string, and `out_report` a valid pointer.
NfStatus nf_admissibles(const NfTransferSystem *ts,
                        const char *monoid,
                        uint32_t arity,
                        uint32_t bound,
                        char **out_report);

// Re-runs a pinned worked example (`warning` or `appendix-b`) and writes
// its certificate JSON; release the report with [`nf_string_free`].
//
// # Safety
// `which` must be a valid NUL-terminated string and `out_report` a valid
// pointer.
NfStatus nf_reproduce(const char *which, char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NORMFORGE_H */
