//! C ABI over `narayana-core`.
//!
//! Big integers cross the boundary as NUL-terminated decimal strings that the
//! caller releases with [`narayana_string_free`]. Engines are opaque handles
//! from [`narayana_engine_new`]; a handle must not be used from two threads at
//! once. Every fallible call returns a [`NarayanaStatus`] and, on failure,
//! leaves a message retrievable with [`narayana_last_error`] on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use narayana::{
    build_table, coefficients, fast_narayana, mirror, partial_sum, reduce_to_base, render, verify_all, BigInt,
    ColumnSumSpec, Error, Ranges, SequenceEngine, Strategy, TableFormat,
};

/// Opaque evaluation engine.
pub struct NarayanaEngine {
    inner: SequenceEngine,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NarayanaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Internal = 4,
    VerifyFailed = 5,
}

/// Values accepted by the `strategy` argument of [`narayana_compute`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NarayanaStrategy {
    Naive = 0,
    Matrix = 1,
    Thirds = 2,
}

/// Values accepted by the `format` argument of [`narayana_table_render`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NarayanaTableFormat {
    Text = 0,
    Csv = 1,
    Json = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> NarayanaStatus {
    match e {
        Error::Argument(_) => NarayanaStatus::InvalidArgument,
        Error::IndexOutOfRange { .. } => NarayanaStatus::OutOfRange,
        Error::Internal(_) => NarayanaStatus::Internal,
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guarded(body: impl FnOnce() -> Result<(), (NarayanaStatus, String)>) -> NarayanaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            NarayanaStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside narayana");
            NarayanaStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (NarayanaStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (NarayanaStatus, String) {
    (NarayanaStatus::NullPointer, format!("{what} is null"))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Writes `value` into `*out` as a decimal string.
///
/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_big(out: *mut *mut c_char, value: &BigInt, what: &str) -> Result<(), (NarayanaStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    *out = into_c(value.to_string());
    Ok(())
}

/// # Safety
/// `engine` must be null or a live handle from [`narayana_engine_new`].
unsafe fn engine_mut<'a>(engine: *mut NarayanaEngine) -> Result<&'a mut SequenceEngine, (NarayanaStatus, String)> {
    engine.as_mut().map(|e| &mut e.inner).ok_or_else(|| null("engine"))
}

/// Creates an engine whose memo serves `|m| <= index_cap`; 0 selects the
/// default cap.
#[no_mangle]
pub extern "C" fn narayana_engine_new(index_cap: u64) -> *mut NarayanaEngine {
    let inner = if index_cap == 0 { SequenceEngine::new() } else { SequenceEngine::with_cap(index_cap) };
    Box::into_raw(Box::new(NarayanaEngine { inner }))
}

/// # Safety
/// `engine` must be null or a handle from [`narayana_engine_new`] that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn narayana_engine_free(engine: *mut NarayanaEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn narayana_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn narayana_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// `N_m` through `strategy` (a [`NarayanaStrategy`] value).
///
/// # Safety
/// `engine` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn narayana_compute(
    engine: *mut NarayanaEngine,
    m: i64,
    strategy: u32,
    out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        let strategy = match strategy {
            0 => Strategy::Naive,
            1 => Strategy::Matrix,
            2 => Strategy::Thirds,
            other => return Err((NarayanaStatus::InvalidArgument, format!("unknown strategy {other}"))),
        };
        let v = fast_narayana(engine, m, strategy).map_err(lib_err)?;
        write_big(out, &v, "out")
    })
}

/// `(p_a, q_a)`.
///
/// # Safety
/// `engine` must be a live handle; `p_out` and `q_out` must be valid for
/// pointer writes.
#[no_mangle]
pub unsafe extern "C" fn narayana_coefficients(
    engine: *mut NarayanaEngine,
    a: i64,
    p_out: *mut *mut c_char,
    q_out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        if p_out.is_null() || q_out.is_null() {
            return Err(null("output pointer"));
        }
        let pair = coefficients::coefficient_pair(engine, a).map_err(lib_err)?;
        write_big(p_out, &pair.p, "p_out")?;
        write_big(q_out, &pair.q, "q_out")
    })
}

/// Column `b` and the triple with `N_m = alpha N_{2a+b} + beta N_{a+b} + gamma N_b`.
///
/// # Safety
/// `engine` must be a live handle; every output pointer must be valid for a
/// write.
#[no_mangle]
pub unsafe extern "C" fn narayana_reduce(
    engine: *mut NarayanaEngine,
    m: i64,
    a: i64,
    b_out: *mut i64,
    alpha_out: *mut *mut c_char,
    beta_out: *mut *mut c_char,
    gamma_out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        if b_out.is_null() || alpha_out.is_null() || beta_out.is_null() || gamma_out.is_null() {
            return Err(null("output pointer"));
        }
        let t = reduce_to_base(engine, m, a).map_err(lib_err)?;
        *b_out = t.b;
        write_big(alpha_out, &t.alpha, "alpha_out")?;
        write_big(beta_out, &t.beta, "beta_out")?;
        write_big(gamma_out, &t.gamma, "gamma_out")
    })
}

/// `P_{N,m}` and `Q_{N,m}`.
///
/// # Safety
/// `engine` must be a live handle; `p_out` and `q_out` must be valid for
/// pointer writes.
#[no_mangle]
pub unsafe extern "C" fn narayana_mirror(
    engine: *mut NarayanaEngine,
    m: i64,
    p_out: *mut *mut c_char,
    q_out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        if p_out.is_null() || q_out.is_null() {
            return Err(null("output pointer"));
        }
        let pair = mirror(engine, m).map_err(lib_err)?;
        write_big(p_out, &pair.p, "p_out")?;
        write_big(q_out, &pair.q, "q_out")
    })
}

/// `sum_{k=0..r} N_{ak+b}`.
///
/// # Safety
/// `engine` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn narayana_partial_sum(
    engine: *mut NarayanaEngine,
    a: i64,
    b: i64,
    r: i64,
    out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        let spec = ColumnSumSpec::new(a, b, r).map_err(lib_err)?;
        let v = partial_sum(engine, spec).map_err(lib_err)?;
        write_big(out, &v, "out")
    })
}

/// The `a`-column table rendered as text, CSV or JSON (a
/// [`NarayanaTableFormat`] value).
///
/// # Safety
/// `engine` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn narayana_table_render(
    engine: *mut NarayanaEngine,
    a: i64,
    rows: i64,
    format: u32,
    out: *mut *mut c_char,
) -> NarayanaStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let format = match format {
            0 => TableFormat::Text,
            1 => TableFormat::Csv,
            2 => TableFormat::Json,
            other => return Err((NarayanaStatus::InvalidArgument, format!("unknown table format {other}"))),
        };
        let table = build_table(engine, a, rows).map_err(lib_err)?;
        *out = into_c(render(&table, format));
        Ok(())
    })
}

/// Runs every identity checker and writes the report array as JSON.
/// Returns [`NarayanaStatus::VerifyFailed`] when any identity has failures;
/// the JSON is written either way.
///
/// # Safety
/// `json_out` must be valid for a pointer write; `failures_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn narayana_verify_all_json(
    m_lo: i64,
    m_hi: i64,
    a_lo: i64,
    a_hi: i64,
    r_lo: i64,
    r_hi: i64,
    json_out: *mut *mut c_char,
    failures_out: *mut u64,
) -> NarayanaStatus {
    let mut failed = false;
    let status = guarded(|| {
        if json_out.is_null() {
            return Err(null("json_out"));
        }
        let ranges = Ranges { m: (m_lo, m_hi), a: (a_lo, a_hi), r: (r_lo, r_hi) };
        let reports = verify_all(&ranges).map_err(lib_err)?;
        let failures: u64 = reports.iter().map(|r| r.failures).sum();
        if let Some(slot) = failures_out.as_mut() {
            *slot = failures;
        }
        failed = failures > 0;
        let json = serde_json::to_string(&reports).map_err(|e| (NarayanaStatus::Internal, e.to_string()))?;
        *json_out = into_c(json);
        Ok(())
    });
    if status == NarayanaStatus::Ok && failed {
        set_last_error("identity verification reported failures");
        return NarayanaStatus::VerifyFailed;
    }
    status
}

/// Borrowed view of a C string, for tests and callers on the Rust side.
///
/// # Safety
/// `s` must be null or a valid NUL-terminated string.
pub unsafe fn c_str_to_string(s: *const c_char) -> Option<String> {
    if s.is_null() {
        None
    } else {
        Some(CStr::from_ptr(s).to_string_lossy().into_owned())
    }
}
