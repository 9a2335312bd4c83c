//! C ABI over `morphcheck`.
//!
//! Conventions:
//! * every fallible function returns a [`MorphcheckStatus`]; results go
//!   through out-pointers;
//! * exact rationals cross the boundary as NUL-terminated strings (`"p"` or
//!   `"p/q"`) owned by the caller and released with [`morphcheck_string_free`];
//! * case reports are opaque handles released with
//!   [`morphcheck_case_report_free`];
//! * the message of the last failure on the calling thread is available from
//!   [`morphcheck_last_error_message`].
//!
//! The header `include/morphcheck.h` is generated by `build.rs`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use morphcheck::bounds;
use morphcheck::chow::{twisted_top_chern, CompleteIntersectionSpec};
use morphcheck::feasibility::{classify_case, CaseReport, CharMode, CharProfile, Overall, Status};
use morphcheck::golden::verify_paper_tables;
use morphcheck::numerics::render;
use morphcheck::render::to_json;
use morphcheck::{Error, Rational};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphcheckStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    IndexOutOfRange = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphcheckCharMode {
    Zero = 0,
    Positive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphcheckOverall {
    ExtensionHolds = 0,
    NoMorphism = 1,
    Undetermined = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphcheckVerdictStatus {
    Excluded = 0,
    ExtensionForced = 1,
    Survives = 2,
}

/// Opaque classification of `(n, d, e)`.
pub struct MorphcheckCaseReport {
    inner: CaseReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: MorphcheckStatus, message: impl Into<String>) -> MorphcheckStatus {
    set_last_error(message.into());
    status
}

fn from_error(err: Error) -> MorphcheckStatus {
    fail(MorphcheckStatus::InvalidArgument, err.to_string())
}

fn guard<F: FnOnce() -> MorphcheckStatus + UnwindSafe>(f: F) -> MorphcheckStatus {
    match catch_unwind(f) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(MorphcheckStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> MorphcheckStatus {
    if out.is_null() {
        return fail(MorphcheckStatus::NullPointer, "output pointer is null");
    }
    out.write(value);
    MorphcheckStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> MorphcheckStatus {
    let c = CString::new(text).expect("rendered numbers contain no NUL");
    write_out(out, c.into_raw())
}

unsafe fn write_rational(out: *mut *mut c_char, value: &Rational) -> MorphcheckStatus {
    write_string(out, render(value))
}

fn profile(mode: MorphcheckCharMode, strict: bool) -> CharProfile {
    let mode = match mode {
        MorphcheckCharMode::Zero => CharMode::Zero,
        MorphcheckCharMode::Positive => CharMode::Positive,
    };
    CharProfile::new(mode, strict)
}

/// Message of the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn morphcheck_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `deg c_{n-1}(Ω¹_X(2m))` for a degree-`d` hypersurface in `Pⁿ`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_c_top_x(n: u32, d: u32, m: u32, out: *mut *mut c_char) -> MorphcheckStatus {
    guard(|| {
        if n < 2 || d < 1 || m < 1 {
            return fail(
                MorphcheckStatus::InvalidArgument,
                format!("need n >= 2, d >= 1, m >= 1; got n={n} d={d} m={m}"),
            );
        }
        write_rational(out, &bounds::c_top_x(n, d, m))
    })
}

/// `deg f^* c_{n-1}(Ω¹_Y(2))`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_c_top_pullback_y(
    n: u32,
    d: u32,
    e: u32,
    m: u32,
    out: *mut *mut c_char,
) -> MorphcheckStatus {
    guard(|| {
        if n < 2 || d < 1 || e < 1 || m < 1 {
            return fail(
                MorphcheckStatus::InvalidArgument,
                format!("need n >= 2 and positive d, e, m; got n={n} d={d} e={e} m={m}"),
            );
        }
        write_rational(out, &bounds::c_top_pullback_y(n, d, e, m))
    })
}

/// Both sides of the Hurwitz inequality. `lhs` and `rhs` may be NULL when
/// only `holds` is wanted.
///
/// # Safety
/// Non-null pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_hurwitz_check(
    n: u32,
    d: u32,
    e: u32,
    m: u32,
    lhs: *mut *mut c_char,
    rhs: *mut *mut c_char,
    holds: *mut bool,
) -> MorphcheckStatus {
    guard(|| {
        if let Err(err) = bounds::check_morphism_params(n, d, e, m) {
            return from_error(err);
        }
        if holds.is_null() {
            return fail(MorphcheckStatus::NullPointer, "holds pointer is null");
        }
        let sides = bounds::hurwitz_check(n, d, e, m);
        if !lhs.is_null() {
            write_rational(lhs, &sides.lhs);
        }
        if !rhs.is_null() {
            write_rational(rhs, &sides.rhs);
        }
        write_out(holds, sides.holds)
    })
}

/// Largest admissible polynomial degree `M` and the relaxed threshold `m0`.
///
/// # Safety
/// Both pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_max_poly_degree(
    n: u32,
    d: u32,
    e: u32,
    max_degree: *mut u32,
    relaxed_threshold: *mut u32,
) -> MorphcheckStatus {
    guard(|| {
        if let Err(err) = bounds::check_pair_params(n, d, e) {
            return from_error(err);
        }
        if max_degree.is_null() || relaxed_threshold.is_null() {
            return fail(MorphcheckStatus::NullPointer, "output pointer is null");
        }
        let bound = bounds::max_poly_degree(n, d, e);
        write_out(max_degree, bound.max_degree);
        write_out(relaxed_threshold, bound.relaxed_threshold)
    })
}

/// Degree of `c_top(Ω¹_X(t))` for the complete intersection of multidegree
/// `degrees[0..len]` in `Pⁿ`.
///
/// # Safety
/// `degrees` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_twisted_top_chern(
    n: u32,
    degrees: *const u32,
    len: usize,
    twist: i64,
    out: *mut *mut c_char,
) -> MorphcheckStatus {
    guard(|| {
        if degrees.is_null() && len > 0 {
            return fail(MorphcheckStatus::NullPointer, "degrees pointer is null");
        }
        let degrees = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(degrees, len).to_vec()
        };
        match CompleteIntersectionSpec::new(n, degrees) {
            Ok(spec) => write_rational(out, &twisted_top_chern(&spec, twist)),
            Err(err) => from_error(err),
        }
    })
}

/// Classifies `(n, d, e)`; the handle must be released with
/// [`morphcheck_case_report_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_classify_case(
    n: u32,
    d: u32,
    e: u32,
    mode: MorphcheckCharMode,
    strict: bool,
    out: *mut *mut MorphcheckCaseReport,
) -> MorphcheckStatus {
    guard(|| {
        if out.is_null() {
            return fail(MorphcheckStatus::NullPointer, "output pointer is null");
        }
        match classify_case(n, d, e, profile(mode, strict)) {
            Ok(inner) => write_out(out, Box::into_raw(Box::new(MorphcheckCaseReport { inner }))),
            Err(err) => from_error(err),
        }
    })
}

/// # Safety
/// `report` must come from [`morphcheck_classify_case`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_case_report_free(report: *mut MorphcheckCaseReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn with_report<F>(report: *const MorphcheckCaseReport, f: F) -> MorphcheckStatus
where
    F: FnOnce(&CaseReport) -> MorphcheckStatus + UnwindSafe,
{
    if report.is_null() {
        return fail(MorphcheckStatus::NullPointer, "report handle is null");
    }
    let inner = &(*report).inner;
    guard(move || f(inner))
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_case_report_overall(
    report: *const MorphcheckCaseReport,
    out: *mut MorphcheckOverall,
) -> MorphcheckStatus {
    with_report(report, |r| {
        let overall = match r.overall {
            Overall::ExtensionHolds => MorphcheckOverall::ExtensionHolds,
            Overall::NoMorphism => MorphcheckOverall::NoMorphism,
            Overall::Undetermined => MorphcheckOverall::Undetermined,
        };
        write_out(out, overall)
    })
}

/// `M`, which is also the number of verdicts in the report.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_case_report_max_degree(
    report: *const MorphcheckCaseReport,
    out: *mut u32,
) -> MorphcheckStatus {
    with_report(report, |r| write_out(out, r.max_degree))
}

/// Status of the verdict for polynomial degree `m` (1-based, `m <= M`).
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_case_report_verdict_status(
    report: *const MorphcheckCaseReport,
    m: u32,
    out: *mut MorphcheckVerdictStatus,
) -> MorphcheckStatus {
    with_report(report, |r| {
        let Some(v) = r.verdicts.iter().find(|v| v.m == m) else {
            return fail(
                MorphcheckStatus::IndexOutOfRange,
                format!("no verdict for m={m}; report covers 1..={}", r.max_degree),
            );
        };
        let status = match v.status {
            Status::Excluded => MorphcheckVerdictStatus::Excluded,
            Status::ExtensionForced => MorphcheckVerdictStatus::ExtensionForced,
            Status::Survives => MorphcheckVerdictStatus::Survives,
        };
        write_out(out, status)
    })
}

/// The report in the CLI's JSON schema.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_case_report_to_json(
    report: *const MorphcheckCaseReport,
    out: *mut *mut c_char,
) -> MorphcheckStatus {
    with_report(report, |r| write_string(out, to_json(r)))
}

/// Regenerates the built-in `P^4` tables; `passed` receives the verdict.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_verify_paper_tables(passed: *mut bool) -> MorphcheckStatus {
    guard(|| write_out(passed, verify_paper_tables().passed))
}

/// Copies the library version into a caller-owned string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn morphcheck_version(out: *mut *mut c_char) -> MorphcheckStatus {
    write_string(out, env!("CARGO_PKG_VERSION").to_string())
}
