//! C ABI for the normforge library.
//!
//! Handles are opaque pointers created and destroyed by paired functions.
//! Every fallible call returns an [`NfStatus`]; on failure a thread-local
//! message is available through [`nf_last_error`]. Strings returned through
//! out-parameters are heap allocations that must be released with
//! [`nf_string_free`]. A transfer-system handle keeps its group alive
//! internally, so the group handle may be freed first.

use normforge_core::group::{FiniteGroup, SubgroupLattice};
use normforge_core::monoid::{Dyadic, FatDyadic, IntersectionMonoid, RationalCubes, Trivial};
use normforge_core::realize::{
    admissible_sets, outcome_json, realized_transfer_system, reproduce_appendix_b,
    reproduce_warning,
};
use normforge_core::transfer::{
    enumerate_transfer_systems, parse_transfer_system, TransferSystem,
};
use normforge_core::Error;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::sync::Arc;

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfStatus {
    /// The call succeeded and all of its assertions passed.
    Ok = 0,
    /// A required pointer was null.
    NullPointer = 1,
    /// An argument failed validation; details via `nf_last_error`.
    InvalidArgument = 2,
    /// A string argument was not valid UTF-8.
    Utf8 = 3,
    /// The computation itself failed; details via `nf_last_error`.
    Compute = 4,
    /// The computation ran but one of its checked assertions failed.
    AssertionFailed = 5,
    /// A fixed-point verdict came back unknown.
    UnknownVerdict = 6,
}

/// A finite group together with its canonical subgroup lattice.
pub struct NfGroup {
    lattice: Arc<SubgroupLattice>,
}

/// One transfer system over the lattice of the group it was built from.
pub struct NfTransferSystem {
    system: TransferSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let owned = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn fail(e: &Error) -> NfStatus {
    set_error(&e.to_string());
    match e {
        Error::InvalidGroup(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidSubgroup(_)
        | Error::IndexOutOfRange(_)
        | Error::InvalidTransferPair(_)
        | Error::InvalidMonoidValue(_)
        | Error::InvalidLabels(_)
        | Error::Parse(_)
        | Error::TrivialMonoid => NfStatus::InvalidArgument,
        Error::AssertionFailed(_) => NfStatus::AssertionFailed,
        _ => NfStatus::Compute,
    }
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, NfStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(NfStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        NfStatus::Utf8
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> NfStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NfStatus::NullPointer;
    }
    out.write(value);
    NfStatus::Ok
}

unsafe fn group_ref<'a>(group: *const NfGroup) -> Result<&'a NfGroup, NfStatus> {
    group.as_ref().ok_or_else(|| {
        set_error("null group handle");
        NfStatus::NullPointer
    })
}

unsafe fn system_ref<'a>(ts: *const NfTransferSystem) -> Result<&'a NfTransferSystem, NfStatus> {
    ts.as_ref().ok_or_else(|| {
        set_error("null transfer-system handle");
        NfStatus::NullPointer
    })
}

macro_rules! ffi_try {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Runs the body with the monoid named by `$name`, or returns
/// `InvalidArgument` for an unrecognized name.
macro_rules! with_monoid {
    ($name:expr, $m:ident, $body:expr) => {
        match $name {
            "dyadic" => {
                let $m = Dyadic;
                $body
            }
            "rational-embedding" => {
                let $m = RationalCubes;
                $body
            }
            "fat-dyadic" => {
                let $m = FatDyadic;
                $body
            }
            "trivial" => {
                let $m = Trivial;
                $body
            }
            other => {
                set_error(&format!(
                    "unknown monoid {other:?}; expected dyadic, rational-embedding, fat-dyadic, or trivial"
                ));
                NfStatus::InvalidArgument
            }
        }
    };
}

/// Version of this library as a static string; never freed.
#[no_mangle]
pub extern "C" fn nf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; never freed by the
/// caller.
#[no_mangle]
pub extern "C" fn nf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned through an out-parameter.
///
/// # Safety
/// `s` must be a pointer returned by this library's out-parameters, or null,
/// and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from a preset name such as `C4`, `S3`, or `C2xC2`.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer;
/// on success `*out` owns a handle to release with [`nf_group_free`].
#[no_mangle]
pub unsafe extern "C" fn nf_group_preset(name: *const c_char, out: *mut *mut NfGroup) -> NfStatus {
    let name = ffi_try!(read_str(name));
    match normforge_core::group::preset(name) {
        Ok(group) => write_out(
            out,
            Box::into_raw(Box::new(NfGroup {
                lattice: SubgroupLattice::new(group),
            })),
        ),
        Err(e) => fail(&e),
    }
}

/// Builds a group from the JSON shape produced by [`nf_group_to_json`]: a
/// name, a multiplication table, and optional element names.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer;
/// on success `*out` owns a handle to release with [`nf_group_free`].
#[no_mangle]
pub unsafe extern "C" fn nf_group_from_json(
    json: *const c_char,
    out: *mut *mut NfGroup,
) -> NfStatus {
    let text = ffi_try!(read_str(json));
    let value: serde_json::Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return fail(&Error::Json(e)),
    };
    match FiniteGroup::from_json(&value) {
        Ok(group) => write_out(
            out,
            Box::into_raw(Box::new(NfGroup {
                lattice: SubgroupLattice::new(group),
            })),
        ),
        Err(e) => fail(&e),
    }
}

/// Releases a group handle; null is a no-op.
///
/// # Safety
/// `group` must come from a group constructor and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nf_group_free(group: *mut NfGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Number of elements of the group.
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_group_order(group: *const NfGroup, out: *mut u32) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    write_out(out, g.lattice.group().order() as u32)
}

/// Name of the group; release with [`nf_string_free`].
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_group_name(group: *const NfGroup, out: *mut *mut c_char) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    write_out(out, into_c_string(g.lattice.group().name().to_string()))
}

/// JSON for the group's multiplication table; release with
/// [`nf_string_free`].
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_group_to_json(
    group: *const NfGroup,
    out: *mut *mut c_char,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    write_out(out, into_c_string(g.lattice.group().to_json().to_string()))
}

/// Number of subgroups in the canonical lattice order.
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_subgroup_count(group: *const NfGroup, out: *mut u32) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    write_out(out, g.lattice.count() as u32)
}

/// Display name of the subgroup at a lattice index; release with
/// [`nf_string_free`].
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_subgroup_name(
    group: *const NfGroup,
    index: u32,
    out: *mut *mut c_char,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    if index as usize >= g.lattice.count() {
        set_error(&format!(
            "subgroup index {index} outside 0..{}",
            g.lattice.count()
        ));
        return NfStatus::InvalidArgument;
    }
    write_out(out, into_c_string(g.lattice.name(index as usize)))
}

/// Resolves a subgroup name such as `e`, `C2`, or `<s^2>` to its lattice
/// index.
///
/// # Safety
/// `group` must be a live group handle, `name` a valid NUL-terminated
/// string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_subgroup_parse(
    group: *const NfGroup,
    name: *const c_char,
    out: *mut u32,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    let name = ffi_try!(read_str(name));
    match g.lattice.parse(name) {
        Ok(index) => write_out(out, index as u32),
        Err(e) => fail(&e),
    }
}

/// Parses a transfer-system expression: `trivial`, `complete`, or `K->H`
/// generator pairs separated by commas or semicolons. Generator pairs are
/// saturated to the least transfer system containing them.
///
/// # Safety
/// `group` must be a live group handle, `expr` a valid NUL-terminated
/// string, and `out` a valid pointer; on success `*out` owns a handle to
/// release with [`nf_transfer_system_free`].
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_parse(
    group: *const NfGroup,
    expr: *const c_char,
    out: *mut *mut NfTransferSystem,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    let expr = ffi_try!(read_str(expr));
    match parse_transfer_system(&g.lattice, expr) {
        Ok(system) => write_out(out, Box::into_raw(Box::new(NfTransferSystem { system }))),
        Err(e) => fail(&e),
    }
}

/// Number of transfer systems on the group; enumerated on every call.
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_count(
    group: *const NfGroup,
    out: *mut u32,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    write_out(out, enumerate_transfer_systems(&g.lattice).len() as u32)
}

/// The transfer system at an index of the enumeration, ordered by pair
/// count then pair list.
///
/// # Safety
/// `group` must be a live group handle and `out` a valid pointer; on
/// success `*out` owns a handle to release with
/// [`nf_transfer_system_free`].
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_at(
    group: *const NfGroup,
    index: u32,
    out: *mut *mut NfTransferSystem,
) -> NfStatus {
    let g = ffi_try!(group_ref(group));
    let mut systems = enumerate_transfer_systems(&g.lattice);
    if index as usize >= systems.len() {
        set_error(&format!(
            "transfer-system index {index} outside 0..{}",
            systems.len()
        ));
        return NfStatus::InvalidArgument;
    }
    let system = systems.swap_remove(index as usize);
    write_out(out, Box::into_raw(Box::new(NfTransferSystem { system })))
}

/// Releases a transfer-system handle; null is a no-op.
///
/// # Safety
/// `ts` must come from a transfer-system constructor and must not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_free(ts: *mut NfTransferSystem) {
    if !ts.is_null() {
        drop(Box::from_raw(ts));
    }
}

/// Short description such as `{e->C2, e->C4}`; release with
/// [`nf_string_free`].
///
/// # Safety
/// `ts` must be a live transfer-system handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_describe(
    ts: *const NfTransferSystem,
    out: *mut *mut c_char,
) -> NfStatus {
    let t = ffi_try!(system_ref(ts));
    write_out(out, into_c_string(t.system.describe()))
}

/// JSON for the system's strict pairs; release with [`nf_string_free`].
///
/// # Safety
/// `ts` must be a live transfer-system handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_to_json(
    ts: *const NfTransferSystem,
    out: *mut *mut c_char,
) -> NfStatus {
    let t = ffi_try!(system_ref(ts));
    write_out(out, into_c_string(t.system.to_json().to_string()))
}

/// Whether the system admits the transfer from lattice index `k` up to
/// lattice index `h`; reflexive pairs are always admitted.
///
/// # Safety
/// `ts` must be a live transfer-system handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_transfer_system_admits(
    ts: *const NfTransferSystem,
    k: u32,
    h: u32,
    out: *mut bool,
) -> NfStatus {
    let t = ffi_try!(system_ref(ts));
    let count = t.system.lattice().count();
    if k as usize >= count || h as usize >= count {
        set_error(&format!("subgroup index outside 0..{count}"));
        return NfStatus::InvalidArgument;
    }
    write_out(out, t.system.admits(k as usize, h as usize))
}

fn realize_with<M>(
    monoid: &M,
    monoid_name: &str,
    system: &TransferSystem,
    bound: usize,
    out: *mut *mut c_char,
) -> NfStatus
where
    M: IntersectionMonoid + Send + Sync,
    M::Elem: Send + Sync,
{
    let outcome = match realized_transfer_system(system, monoid, bound) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let cert = outcome.to_certificate(monoid_name, bound);
    let report = into_c_string(cert.to_json().to_string());
    let status = unsafe { write_out(out, report) };
    if status != NfStatus::Ok {
        return status;
    }
    if outcome.unknown > 0 {
        set_error("at least one fixed-point verdict is unknown");
        NfStatus::UnknownVerdict
    } else if !cert.passed() {
        set_error("realized transfer system differs from its input");
        NfStatus::AssertionFailed
    } else {
        NfStatus::Ok
    }
}

/// Realizes the transfer system as the fixed points of the suboperad it
/// cuts out and checks it comes back unchanged. The full certificate JSON
/// is written even when the check fails; release it with
/// [`nf_string_free`]. `monoid` names the label monoid: `dyadic`,
/// `rational-embedding`, or `fat-dyadic` (`trivial` is rejected since it
/// has no disjoint pair).
///
/// # Safety
/// `ts` must be a live transfer-system handle, `monoid` a valid
/// NUL-terminated string, and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_realize(
    ts: *const NfTransferSystem,
    monoid: *const c_char,
    bound: u32,
    out_report: *mut *mut c_char,
) -> NfStatus {
    let t = ffi_try!(system_ref(ts));
    let monoid = ffi_try!(read_str(monoid));
    if bound == 0 {
        set_error("bound must be at least 1");
        return NfStatus::InvalidArgument;
    }
    with_monoid!(monoid, m, {
        realize_with(&m, monoid, &t.system, bound as usize, out_report)
    })
}

fn admissibles_with<M>(
    monoid: &M,
    monoid_name: &str,
    system: &TransferSystem,
    arity: usize,
    bound: usize,
    out: *mut *mut c_char,
) -> NfStatus
where
    M: IntersectionMonoid + Send + Sync,
    M::Elem: Send + Sync,
{
    let lattice = system.lattice();
    let verdicts = match admissible_sets(system, arity, monoid, bound) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let mut rows = Vec::with_capacity(verdicts.len());
    let mut unknown = 0usize;
    for v in &verdicts {
        if !v.outcome.is_nonempty() && !v.outcome.is_empty() {
            unknown += 1;
        }
        let h_index = match v.gamma.h_index(lattice) {
            Ok(i) => i,
            Err(e) => return fail(&e),
        };
        rows.push(serde_json::json!({
            "subgroup": lattice.name(h_index),
            "predicted": v.predicted,
            "admissible": v.outcome.is_nonempty(),
            "certificate": outcome_json(lattice, &v.outcome),
        }));
    }
    let report = serde_json::json!({
        "group": lattice.group().name(),
        "tau": system.to_json(),
        "arity": arity,
        "monoid": monoid_name,
        "bound": bound,
        "verdicts": rows,
    });
    let status = unsafe { write_out(out, into_c_string(report.to_string())) };
    if status != NfStatus::Ok {
        return status;
    }
    if unknown > 0 {
        set_error("at least one fixed-point verdict is unknown");
        NfStatus::UnknownVerdict
    } else {
        NfStatus::Ok
    }
}

/// Decides fixed-point nonemptiness for every graph subgroup of the group
/// at one arity, against this transfer system, and reports each verdict
/// with its witness or obstruction as JSON; release the report with
/// [`nf_string_free`].
///
/// # Safety
/// `ts` must be a live transfer-system handle, `monoid` a valid
/// NUL-terminated string, and `out_report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_admissibles(
    ts: *const NfTransferSystem,
    monoid: *const c_char,
    arity: u32,
    bound: u32,
    out_report: *mut *mut c_char,
) -> NfStatus {
    let t = ffi_try!(system_ref(ts));
    let monoid = ffi_try!(read_str(monoid));
    let order = t.system.lattice().group().order();
    if arity == 0 || arity as usize > order + 2 {
        set_error(&format!("arity {arity} outside the accepted range 1..={}", order + 2));
        return NfStatus::InvalidArgument;
    }
    if bound == 0 {
        set_error("bound must be at least 1");
        return NfStatus::InvalidArgument;
    }
    with_monoid!(monoid, m, {
        admissibles_with(&m, monoid, &t.system, arity as usize, bound as usize, out_report)
    })
}

/// Re-runs a pinned worked example (`warning` or `appendix-b`) and writes
/// its certificate JSON; release the report with [`nf_string_free`].
///
/// # Safety
/// `which` must be a valid NUL-terminated string and `out_report` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn nf_reproduce(
    which: *const c_char,
    out_report: *mut *mut c_char,
) -> NfStatus {
    let which = ffi_try!(read_str(which));
    let cert = match which {
        "warning" => reproduce_warning(),
        "appendix-b" => reproduce_appendix_b(),
        other => {
            set_error(&format!(
                "unknown reproduction {other:?}; expected warning or appendix-b"
            ));
            return NfStatus::InvalidArgument;
        }
    };
    let cert = match cert {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let status = write_out(out_report, into_c_string(cert.to_json().to_string()));
    if status != NfStatus::Ok {
        return status;
    }
    if cert.passed() {
        NfStatus::Ok
    } else {
        set_error("reproduction certificate has failing assertions");
        NfStatus::AssertionFailed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::path::Path;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn preset_group(name: &str) -> *mut NfGroup {
        let mut group = ptr::null_mut();
        assert_eq!(
            nf_group_preset(cstr(name).as_ptr(), &mut group),
            NfStatus::Ok
        );
        group
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let text = CStr::from_ptr(p).to_str().unwrap().to_string();
        nf_string_free(p);
        text
    }

    #[test]
    fn group_lifecycle_and_metadata() {
        unsafe {
            let group = preset_group("C4");
            let mut order = 0u32;
            assert_eq!(nf_group_order(group, &mut order), NfStatus::Ok);
            assert_eq!(order, 4);

            let mut count = 0u32;
            assert_eq!(nf_subgroup_count(group, &mut count), NfStatus::Ok);
            assert_eq!(count, 3);

            let mut name = ptr::null_mut();
            assert_eq!(nf_subgroup_name(group, 0, &mut name), NfStatus::Ok);
            assert_eq!(take_string(name), "e");
            assert_eq!(
                nf_subgroup_name(group, 9, &mut name),
                NfStatus::InvalidArgument
            );

            let mut index = 99u32;
            assert_eq!(
                nf_subgroup_parse(group, cstr("C2").as_ptr(), &mut index),
                NfStatus::Ok
            );
            assert_eq!(index, 1);

            let mut json = ptr::null_mut();
            assert_eq!(nf_group_to_json(group, &mut json), NfStatus::Ok);
            let text = take_string(json);
            let mut rebuilt = ptr::null_mut();
            assert_eq!(
                nf_group_from_json(cstr(&text).as_ptr(), &mut rebuilt),
                NfStatus::Ok
            );
            assert_eq!(nf_group_order(rebuilt, &mut order), NfStatus::Ok);
            assert_eq!(order, 4);
            nf_group_free(rebuilt);
            nf_group_free(group);
        }
    }

    #[test]
    fn bad_inputs_set_errors() {
        unsafe {
            let mut group = ptr::null_mut();
            assert_eq!(
                nf_group_preset(cstr("C999").as_ptr(), &mut group),
                NfStatus::InvalidArgument
            );
            let message = CStr::from_ptr(nf_last_error()).to_str().unwrap();
            assert!(!message.is_empty());

            assert_eq!(
                nf_group_preset(ptr::null(), &mut group),
                NfStatus::NullPointer
            );
            let mut order = 0u32;
            assert_eq!(nf_group_order(ptr::null(), &mut order), NfStatus::NullPointer);
        }
    }

    #[test]
    fn systems_enumerate_and_parse() {
        unsafe {
            let group = preset_group("C4");
            let mut count = 0u32;
            assert_eq!(nf_transfer_system_count(group, &mut count), NfStatus::Ok);
            assert_eq!(count, 5);

            let mut ts = ptr::null_mut();
            assert_eq!(
                nf_transfer_system_parse(group, cstr("e->C2").as_ptr(), &mut ts),
                NfStatus::Ok
            );
            let mut text = ptr::null_mut();
            assert_eq!(nf_transfer_system_describe(ts, &mut text), NfStatus::Ok);
            assert_eq!(take_string(text), "{e->C2}");

            let mut admits = false;
            assert_eq!(nf_transfer_system_admits(ts, 0, 1, &mut admits), NfStatus::Ok);
            assert!(admits);
            assert_eq!(nf_transfer_system_admits(ts, 1, 2, &mut admits), NfStatus::Ok);
            assert!(!admits);
            assert_eq!(
                nf_transfer_system_admits(ts, 7, 1, &mut admits),
                NfStatus::InvalidArgument
            );
            nf_transfer_system_free(ts);

            // freeing the group first must leave the system usable
            let mut last = ptr::null_mut();
            assert_eq!(nf_transfer_system_at(group, 4, &mut last), NfStatus::Ok);
            nf_group_free(group);
            assert_eq!(nf_transfer_system_describe(last, &mut text), NfStatus::Ok);
            assert!(take_string(text).contains("C2->C4"));
            nf_transfer_system_free(last);
        }
    }

    #[test]
    fn realization_reports_round_trip() {
        unsafe {
            let group = preset_group("C4");
            let mut ts = ptr::null_mut();
            assert_eq!(
                nf_transfer_system_parse(group, cstr("e->C2").as_ptr(), &mut ts),
                NfStatus::Ok
            );

            let mut report = ptr::null_mut();
            assert_eq!(
                nf_realize(ts, cstr("dyadic").as_ptr(), 3, &mut report),
                NfStatus::Ok
            );
            let parsed: serde_json::Value =
                serde_json::from_str(&take_string(report)).unwrap();
            assert_eq!(parsed["passed"], true);
            assert_eq!(parsed["inputs"]["monoid"], "dyadic");

            assert_eq!(
                nf_realize(ts, cstr("trivial").as_ptr(), 3, &mut report),
                NfStatus::InvalidArgument
            );
            assert_eq!(
                nf_realize(ts, cstr("octonion").as_ptr(), 3, &mut report),
                NfStatus::InvalidArgument
            );
            assert_eq!(
                nf_realize(ts, cstr("dyadic").as_ptr(), 0, &mut report),
                NfStatus::InvalidArgument
            );

            nf_transfer_system_free(ts);
            nf_group_free(group);
        }
    }

    #[test]
    fn admissibles_and_reproductions_report() {
        unsafe {
            let group = preset_group("C2");
            let mut ts = ptr::null_mut();
            assert_eq!(
                nf_transfer_system_parse(group, cstr("complete").as_ptr(), &mut ts),
                NfStatus::Ok
            );
            let mut report = ptr::null_mut();
            assert_eq!(
                nf_admissibles(ts, cstr("dyadic").as_ptr(), 2, 3, &mut report),
                NfStatus::Ok
            );
            let parsed: serde_json::Value =
                serde_json::from_str(&take_string(report)).unwrap();
            let verdicts = parsed["verdicts"].as_array().unwrap();
            assert!(!verdicts.is_empty());
            assert!(verdicts.iter().all(|v| v["admissible"] == v["predicted"]));
            assert_eq!(
                nf_admissibles(ts, cstr("dyadic").as_ptr(), 99, 3, &mut report),
                NfStatus::InvalidArgument
            );
            nf_transfer_system_free(ts);
            nf_group_free(group);

            for which in ["warning", "appendix-b"] {
                let mut report = ptr::null_mut();
                assert_eq!(
                    nf_reproduce(cstr(which).as_ptr(), &mut report),
                    NfStatus::Ok
                );
                let parsed: serde_json::Value =
                    serde_json::from_str(&take_string(report)).unwrap();
                assert_eq!(parsed["passed"], true);
            }
            let mut report = ptr::null_mut();
            assert_eq!(
                nf_reproduce(cstr("other").as_ptr(), &mut report),
                NfStatus::InvalidArgument
            );
        }
    }

    #[test]
    fn header_is_generated() {
        let header = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("normforge.h");
        let text = std::fs::read_to_string(header).unwrap();
        for needle in [
            "typedef struct NfGroup NfGroup;",
            "typedef struct NfTransferSystem NfTransferSystem;",
            "NF_STATUS_OK",
            "nf_realize",
            "nf_last_error",
        ] {
            assert!(text.contains(needle), "header is missing {needle}");
        }
    }

    #[test]
    fn version_is_exposed() {
        let version = unsafe { CStr::from_ptr(nf_version()) };
        assert_eq!(version.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
