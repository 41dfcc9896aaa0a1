//! C ABI over `covseries`.
//!
//! Every function returns a [`CsStatus`] and writes its result through an out
//! pointer. On failure the out pointer is left untouched and
//! [`cs_last_error`] describes what went wrong on the calling thread.
//!
//! Ownership: handles from [`cs_poincare_series`], [`cs_rational_parse`] and
//! [`cs_rational_from_json`] are released with [`cs_rational_free`]; strings
//! returned through `char **` out parameters are released with
//! [`cs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use covseries::{DimTable, Error, FactoredRational, Method, MAX_FORM_DEGREE};

/// Result code of every `cs_*` call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    DegreeOutOfRange = 3,
    ParseError = 4,
    InvalidArgument = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsFormat {
    Plain = 0,
    Latex = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsMethod {
    Springer = 0,
    Dp = 1,
    Gf = 2,
}

// Enum arguments cross the boundary as `uint32_t` so that an out-of-range
// value from C is reported instead of being undefined behaviour.

fn format_from(raw: u32) -> Result<CsFormat, Failure> {
    match raw {
        0 => Ok(CsFormat::Plain),
        1 => Ok(CsFormat::Latex),
        2 => Ok(CsFormat::Json),
        _ => Err(Failure(CsStatus::InvalidArgument, format!("unknown format {raw}"))),
    }
}

fn method_from(raw: u32) -> Result<Method, Failure> {
    match raw {
        0 => Ok(Method::SpringerExpand),
        1 => Ok(Method::Theorem1Dp),
        2 => Ok(Method::Theorem2Gf),
        _ => Err(Failure(CsStatus::InvalidArgument, format!("unknown method {raw}"))),
    }
}

/// Opaque handle to a rational function with `(1 - z^k)` denominator factors.
pub struct CsRational {
    inner: FactoredRational,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DegreeOutOfRange { .. } => CsStatus::DegreeOutOfRange,
            Error::Parse { .. } | Error::Json(_) => CsStatus::ParseError,
            _ => CsStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

/// Runs `body`, mapping errors and panics to a status and recording the message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            CsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            CsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(CsStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a>(p: *const CsRational, what: &str) -> Result<&'a FactoredRational, Failure> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

fn check_degree(d: u32) -> Result<(), Failure> {
    if (1..=MAX_FORM_DEGREE).contains(&d) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange {
            d,
            max: Some(MAX_FORM_DEGREE),
        }
        .into())
    }
}

unsafe fn put_handle(out: *mut *mut CsRational, value: FactoredRational) {
    *out = Box::into_raw(Box::new(CsRational { inner: value }));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(CsStatus::InvalidArgument, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message describing why the last fallible call on this thread failed, or
/// NULL if it succeeded. Valid until the next such call on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Largest form degree accepted by [`cs_poincare_series`] and [`cs_dims_json`].
#[no_mangle]
pub extern "C" fn cs_max_degree() -> u32 {
    MAX_FORM_DEGREE
}

/// Computes `P_d(z)` in normalized form.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_poincare_series(d: u32, out: *mut *mut CsRational) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        check_degree(d)?;
        put_handle(out, covseries::poincare_series(d)?);
        Ok(())
    })
}

/// Parses plain text such as `(1+z^3)/((1-z)(1-z^2)(1-z^4))`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_parse(text: *const c_char, out: *mut *mut CsRational) -> CsStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let parsed: FactoredRational = text.parse()?;
        put_handle(out, parsed);
        Ok(())
    })
}

/// Reads the JSON produced by [`cs_rational_render`] with [`CsFormat::Json`].
/// `d_out` may be NULL.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be valid for writing one pointer
/// and `d_out`, if non-null, for one `uint32_t`.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_from_json(
    json: *const c_char,
    d_out: *mut u32,
    out: *mut *mut CsRational,
) -> CsStatus {
    guard(|| {
        let json = read_str(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let (d, value) = FactoredRational::from_json(json)?;
        if !d_out.is_null() {
            *d_out = d;
        }
        put_handle(out, value);
        Ok(())
    })
}

/// Renders `r` in a [`CsFormat`]. `d` is only used by the JSON format, which
/// records it.
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_render(
    r: *const CsRational,
    format: u32,
    d: u32,
    out: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let r = handle(r, "r")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = match format_from(format)? {
            CsFormat::Plain => r.to_plain(),
            CsFormat::Latex => r.to_latex(),
            CsFormat::Json => r.to_json(d),
        };
        put_string(out, text)
    })
}

/// Sets `*out` to whether `a` and `b` are the same rational function.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_equals(a: *const CsRational, b: *const CsRational, out: *mut bool) -> CsStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a.equals(b);
        Ok(())
    })
}

/// Power-series coefficients of `r` through `z^order` as a JSON array of
/// integers, e.g. `[1,1,2,3]`.
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_expand_json(
    r: *const CsRational,
    order: usize,
    out: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let r = handle(r, "r")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let coeffs: Vec<String> = r.expand(order).coeffs().iter().map(|c| c.to_string()).collect();
        put_string(out, format!("[{}]", coeffs.join(",")))
    })
}

/// Dimension table, computed by a [`CsMethod`], for `n = 0..=n_max` as `{"d":..,"method":..,"dims":[..]}`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_dims_json(d: u32, n_max: usize, method: u32, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        check_degree(d)?;
        put_string(out, DimTable::compute(d, n_max, method_from(method)?)?.to_json())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `r` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_rational_free(r: *mut CsRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
