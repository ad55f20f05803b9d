//! C ABI for `polya-gate`.
//!
//! Rationals cross the boundary as NUL-terminated strings (`"3/2"`,
//! `"52.4865"`) and come back the same way. Reports are opaque handles
//! released with their `*_free` function; strings returned by this library
//! are released with [`pg_string_free`]. Every entry point returns a
//! [`PgStatus`]; on failure [`pg_last_error`] describes the cause.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use libc::c_char;
use polya_gate::hyper::HyperParams;
use polya_gate::scan::{alpha_sign_at, threshold_bisect, ThresholdResult};
use polya_gate::sfrac::{lp_plus_report, LpReport, Verdict};
use polya_gate::symbolic::conjecture6b_check;
use polya_gate::{Error, Rat};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// A rational or parameter string did not parse, or a parameter is out
    /// of range.
    InvalidInput = 3,
    /// Threshold endpoints do not bracket a sign change.
    BadBracket = 4,
    /// A pivot vanished identically.
    Degenerate = 5,
    /// Any other library error.
    Failed = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// Verdict kind of a [`PgVerdict`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgVerdictKind {
    StieltjesUpTo = 0,
    FirstNegativeAlpha = 1,
    Degenerate = 2,
}

/// Opaque sign-test report.
pub struct PgVerdict {
    report: LpReport,
}

/// Opaque threshold bracket.
pub struct PgThreshold {
    result: ThresholdResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PgStatus {
    match e {
        Error::Parse { .. }
        | Error::InvalidParams(_)
        | Error::InvalidArgument(_)
        | Error::TooFewMoments { .. } => PgStatus::InvalidInput,
        Error::BadBracket { .. } => PgStatus::BadBracket,
        Error::DegeneratePivot(_) => PgStatus::Degenerate,
        _ => PgStatus::Failed,
    }
}

/// Runs `f`, mapping errors and panics to a status and the last-error slot.
fn guard(f: impl FnOnce() -> Result<(), (PgStatus, String)> + UnwindSafe) -> PgStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PgStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (PgStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (PgStatus, String)> {
    if p.is_null() {
        return Err((PgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (PgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_rat(p: *const c_char, what: &str) -> Result<Rat, (PgStatus, String)> {
    read_str(p, what)?.parse::<Rat>().map_err(lib_err)
}

fn out_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn check_out<T>(out: *mut T) -> Result<(), (PgStatus, String)> {
    if out.is_null() {
        Err((PgStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn pg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sign test of `pFq` with parameters like `"3/2;1,60"` through `depth`.
///
/// # Safety
/// `params` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_check(
    params: *const c_char,
    depth: u32,
    out: *mut *mut PgVerdict,
) -> PgStatus {
    guard(|| {
        check_out(out)?;
        let p: HyperParams = read_str(params, "params")?.parse().map_err(lib_err)?;
        if depth == 0 {
            return Err((PgStatus::InvalidInput, "depth must be at least 1".into()));
        }
        let report = lp_plus_report(&p, depth as usize).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(PgVerdict { report }));
        Ok(())
    })
}

/// # Safety
/// `v` must be a live handle from [`pg_check`].
#[no_mangle]
pub unsafe extern "C" fn pg_verdict_kind(v: *const PgVerdict) -> PgVerdictKind {
    match &(*v).report.verdict {
        Verdict::StieltjesUpTo(_) => PgVerdictKind::StieltjesUpTo,
        Verdict::FirstNegativeAlpha { .. } => PgVerdictKind::FirstNegativeAlpha,
        Verdict::Degenerate(_) => PgVerdictKind::Degenerate,
    }
}

/// Index of the failing coefficient, or the certified depth for
/// `STIELTJES_UP_TO`.
///
/// # Safety
/// `v` must be a live handle from [`pg_check`].
#[no_mangle]
pub unsafe extern "C" fn pg_verdict_index(v: *const PgVerdict) -> u32 {
    match &(*v).report.verdict {
        Verdict::StieltjesUpTo(d) => *d as u32,
        Verdict::FirstNegativeAlpha { k, .. } | Verdict::Degenerate(k) => *k as u32,
    }
}

/// The negative coefficient as a rational string, or NULL for other kinds.
///
/// # Safety
/// `v` must be a live handle from [`pg_check`].
#[no_mangle]
pub unsafe extern "C" fn pg_verdict_alpha(v: *const PgVerdict) -> *mut c_char {
    match &(*v).report.verdict {
        Verdict::FirstNegativeAlpha { alpha, .. } => out_string(alpha.to_string()),
        _ => ptr::null_mut(),
    }
}

/// JSON rendering `{"kind","depth","k"?,"alpha"?,"s0"}`.
///
/// # Safety
/// `v` must be a live handle from [`pg_check`].
#[no_mangle]
pub unsafe extern "C" fn pg_verdict_json(v: *const PgVerdict) -> *mut c_char {
    out_string(serde_json::to_string(&(*v).report).unwrap_or_default())
}

/// # Safety
/// `v` must come from [`pg_check`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pg_verdict_free(v: *mut PgVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Exact sign of `alpha_n` for `1F2(b1 + gamma; b1, b2)`, written to
/// `sign_out` as -1, 0 or 1.
///
/// # Safety
/// String arguments must be NUL-terminated; `sign_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_alpha_sign(
    b1: *const c_char,
    gamma: *const c_char,
    b2: *const c_char,
    n: u32,
    sign_out: *mut i8,
) -> PgStatus {
    guard(|| {
        check_out(sign_out)?;
        let (b1, gamma, b2) = (
            read_rat(b1, "b1")?,
            read_rat(gamma, "gamma")?,
            read_rat(b2, "b2")?,
        );
        let n = n as usize;
        let (sign, _) = alpha_sign_at(&b1, &gamma, &b2, n, n).map_err(lib_err)?;
        *sign_out = sign;
        Ok(())
    })
}

/// Bisection in `b2` for the sign change of `alpha_n` inside `[lo, hi]`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_threshold(
    b1: *const c_char,
    gamma: *const c_char,
    n: u32,
    lo: *const c_char,
    hi: *const c_char,
    precision: *const c_char,
    out: *mut *mut PgThreshold,
) -> PgStatus {
    guard(|| {
        check_out(out)?;
        let result = threshold_bisect(
            &read_rat(b1, "b1")?,
            &read_rat(gamma, "gamma")?,
            n as usize,
            &read_rat(lo, "lo")?,
            &read_rat(hi, "hi")?,
            &read_rat(precision, "precision")?,
        )
        .map_err(lib_err)?;
        *out = Box::into_raw(Box::new(PgThreshold { result }));
        Ok(())
    })
}

/// Lower bracket end, where `alpha_n >= 0`.
///
/// # Safety
/// `t` must be a live handle from [`pg_threshold`].
#[no_mangle]
pub unsafe extern "C" fn pg_threshold_lo(t: *const PgThreshold) -> *mut c_char {
    out_string((*t).result.bracket_lo.to_string())
}

/// Upper bracket end, where `alpha_n < 0`.
///
/// # Safety
/// `t` must be a live handle from [`pg_threshold`].
#[no_mangle]
pub unsafe extern "C" fn pg_threshold_hi(t: *const PgThreshold) -> *mut c_char {
    out_string((*t).result.bracket_hi.to_string())
}

/// JSON rendering `{"b1","gamma","n","lo","hi","width"}`.
///
/// # Safety
/// `t` must be a live handle from [`pg_threshold`].
#[no_mangle]
pub unsafe extern "C" fn pg_threshold_json(t: *const PgThreshold) -> *mut c_char {
    out_string(serde_json::to_string(&(*t).result).unwrap_or_default())
}

/// # Safety
/// `t` must come from [`pg_threshold`] and not have been freed. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn pg_threshold_free(t: *mut PgThreshold) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Leading-coefficient check of the `alpha_n` numerator in `b2`. Writes 1
/// to `matches_out` when the check passes and, if `json_out` is not NULL,
/// the full row as a JSON string.
///
/// # Safety
/// String arguments must be NUL-terminated; `matches_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_symbolic_check(
    n: u32,
    gamma: *const c_char,
    b1: *const c_char,
    matches_out: *mut i32,
    json_out: *mut *mut c_char,
) -> PgStatus {
    guard(|| {
        check_out(matches_out)?;
        let row = conjecture6b_check(n as usize, &read_rat(gamma, "gamma")?, &read_rat(b1, "b1")?)
            .map_err(lib_err)?;
        *matches_out = row.matches as i32;
        if !json_out.is_null() {
            *json_out = out_string(serde_json::to_string(&row).unwrap_or_default());
        }
        Ok(())
    })
}
