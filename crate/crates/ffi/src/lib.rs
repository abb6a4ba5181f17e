//! C ABI over `sccodes`.
//!
//! Every function returns an [`ScStatus`]; results come back through out
//! pointers. Handles (`ScSpec`, `ScEnumerator`) are opaque and must be
//! released with their `_free` function. Strings returned through `char **`
//! are owned by the caller and released with [`sc_string_free`]. After a
//! failure, [`sc_last_error_message`] describes it until the next failing
//! call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sccodes::codes::{tenengolts, Budget, CodeSpec, TenengoltsVariant, Word};
use sccodes::enumerators::{extended_enumerator, lc_hamming, variant_cardinality, Enumerator, Kind};
use sccodes::macwilliams::{build_code, parse_matrix, verify_macwilliams};
use sccodes::numtheory::ramanujan_sum;
use sccodes::Error;

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    BudgetExceeded = 3,
    /// An exact computation produced a non-integer or failed a divisibility check.
    Integrality = 4,
    Unsupported = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Which specialization to compute.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScKind {
    Extended = 0,
    Complete = 1,
    Hamming = 2,
}

impl From<ScKind> for Kind {
    fn from(k: ScKind) -> Kind {
        match k {
            ScKind::Extended => Kind::Extended,
            ScKind::Complete => Kind::Complete,
            ScKind::Hamming => Kind::Hamming,
        }
    }
}

/// Opaque code specification.
pub struct ScSpec(CodeSpec);

/// Opaque weight enumerator.
pub struct ScEnumerator(Enumerator);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::InvalidParameter(_) | Error::LengthMismatch { .. } => ScStatus::InvalidArgument,
        Error::Parse(_) => ScStatus::Parse,
        Error::BudgetExceeded { .. } | Error::ExponentOverflow => ScStatus::BudgetExceeded,
        Error::NotAnInteger | Error::NonDivisible { .. } | Error::OrderMismatch { .. } => ScStatus::Integrality,
        Error::Unsupported(_) => ScStatus::Unsupported,
    }
}

struct Fail(ScStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(ScStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ScStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(ScStatus::Parse, "string is not UTF-8".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(ScStatus::InvalidArgument, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

fn budget(b: u64) -> Budget {
    if b == 0 {
        Budget::DEFAULT
    } else {
        Budget(b)
    }
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on this thread; do not free it.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a CodeSpec JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_from_json(json: *const c_char, out: *mut *mut ScSpec) -> ScStatus {
    guard(|| {
        let spec = CodeSpec::from_json(read_str(json)?)?;
        write_out(out, Box::into_raw(Box::new(ScSpec(spec))))
    })
}

/// Builds `T^{(variant)}_{a1,a2}(n, r)`; `variant` is one of gt, ge, lt, le
/// (NULL means gt).
///
/// # Safety
/// `variant` must be NULL or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_tenengolts(
    n: usize,
    r: u32,
    a1: u64,
    a2: u64,
    variant: *const c_char,
    out: *mut *mut ScSpec,
) -> ScStatus {
    guard(|| {
        let v = parse_variant(variant)?;
        write_out(out, Box::into_raw(Box::new(ScSpec(tenengolts(n, r, a1, a2, v)?))))
    })
}

unsafe fn parse_variant(variant: *const c_char) -> Result<TenengoltsVariant, Fail> {
    if variant.is_null() {
        return Ok(TenengoltsVariant::Gt);
    }
    Ok(read_str(variant)?.parse()?)
}

/// Serializes a spec to JSON.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_to_json(spec: *const ScSpec, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let spec = spec.as_ref().ok_or_else(null)?;
        write_string(out, spec.0.to_json()?)
    })
}

/// # Safety
/// `spec` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_free(spec: *mut ScSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Tests membership of the word `symbols[0..len]`.
///
/// # Safety
/// `spec` must be live, `symbols` must point to `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_is_member(
    spec: *const ScSpec,
    symbols: *const u32,
    len: usize,
    out: *mut bool,
) -> ScStatus {
    guard(|| {
        let spec = spec.as_ref().ok_or_else(null)?;
        let symbols = if len == 0 {
            &[][..]
        } else if symbols.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(symbols, len)
        };
        let word = Word::new(symbols.to_vec(), spec.0.r())?;
        write_out(out, spec.0.is_member(&word)?)
    })
}

/// Computes the enumerator of `spec`. A `budget` of 0 means the default.
///
/// # Safety
/// `spec` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_enumerator_compute(
    spec: *const ScSpec,
    kind: ScKind,
    budget_words: u64,
    out: *mut *mut ScEnumerator,
) -> ScStatus {
    guard(|| {
        let spec = spec.as_ref().ok_or_else(null)?;
        let e = extended_enumerator(&spec.0, budget(budget_words))?.specialize(kind.into())?;
        write_out(out, Box::into_raw(Box::new(ScEnumerator(e))))
    })
}

/// Hamming enumerator of `sum h_j x_j = a (mod m)` over `[r]^n`.
///
/// # Safety
/// `h` must point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_lc_hamming(
    n: usize,
    m: u64,
    r: u32,
    h: *const i64,
    a: i64,
    out: *mut *mut ScEnumerator,
) -> ScStatus {
    guard(|| {
        let h = if n == 0 {
            &[][..]
        } else if h.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(h, n)
        };
        let e = lc_hamming(n, m, r, h, a)?;
        write_out(out, Box::into_raw(Box::new(ScEnumerator(e))))
    })
}

/// Canonical polynomial text, e.g. `1 + 2*w^2 + 2*w^3`.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_enumerator_to_text(e: *const ScEnumerator, out: *mut *mut c_char) -> ScStatus {
    guard(|| write_string(out, e.as_ref().ok_or_else(null)?.0.to_string()))
}

/// Enumerator JSON document.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_enumerator_to_json(e: *const ScEnumerator, out: *mut *mut c_char) -> ScStatus {
    guard(|| write_string(out, e.as_ref().ok_or_else(null)?.0.to_json()))
}

/// Number of codewords as a decimal string.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_enumerator_cardinality(e: *const ScEnumerator, out: *mut *mut c_char) -> ScStatus {
    guard(|| write_string(out, e.as_ref().ok_or_else(null)?.0.cardinality().to_string()))
}

/// # Safety
/// `e` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sc_enumerator_free(e: *mut ScEnumerator) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// `|T^{(variant)}_{a1,a2}(n, r)|` as a decimal string.
///
/// # Safety
/// `variant` must be NULL or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_tenengolts_cardinality(
    n: usize,
    r: u32,
    a1: u64,
    a2: u64,
    variant: *const c_char,
    out: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let v = parse_variant(variant)?;
        write_string(out, variant_cardinality(v, n, r, a1, a2)?.to_string())
    })
}

/// Checks the MacWilliams identity for the kernel of `matrix` (rows
/// separated by `;`, entries by `,`) over `Z_r`. `report` receives the JSON
/// report and may be NULL. A rank-deficient matrix is not an error; it
/// reports `verified = false` with `"right": null`.
///
/// # Safety
/// `matrix` must be NUL-terminated; `verified` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_macwilliams_verify(
    r: u32,
    matrix: *const c_char,
    budget_words: u64,
    verified: *mut bool,
    report: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let h = parse_matrix(read_str(matrix)?)?;
        let rep = verify_macwilliams(&build_code(r, &h, budget(budget_words))?)?;
        write_out(verified, rep.verified)?;
        if !report.is_null() {
            write_string(report, rep.to_json())?;
        }
        Ok(())
    })
}

/// Ramanujan's sum `c_d(a)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_ramanujan_sum(d: i64, a: i64, out: *mut i64) -> ScStatus {
    guard(|| write_out(out, ramanujan_sum(d, a)?))
}
