//! C ABI over `exact2`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free` function. Results come back as JSON
//! strings released with [`exact2_string_free`]. Every entry point returns an
//! [`Exact2Status`]; on anything but `EXACT2_STATUS_OK` a message is available
//! from [`exact2_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use exact2::fincat::json::{category_to_value, functor_from_str, functor_to_value, to_canonical_string, to_value};
use exact2::fincat::FinFunctor;
use exact2::kernels::json::{kernel_from_str, kernel_to_value};
use exact2::kernels::KernelData;
use exact2::{Error, SizeBound, System};
use serde_json::{json, Value};

/// Outcome of a call. Values 0 to 3 match the exit codes of the command line.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exact2Status {
    Ok = 0,
    /// The computation ran and a mathematical check failed.
    CheckFailed = 1,
    InvalidInput = 2,
    SizeBound = 3,
    NullPointer = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exact2System {
    Bo = 0,
    So = 1,
    Bof = 2,
}

impl From<Exact2System> for System {
    fn from(s: Exact2System) -> System {
        match s {
            Exact2System::Bo => System::Bo,
            Exact2System::So => System::So,
            Exact2System::Bof => System::Bof,
        }
    }
}

/// Mirrors the library's size bound; pass NULL where accepted for the default.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exact2SizeBound {
    pub construct_objects: usize,
    pub construct_morphisms: usize,
    pub enumerate_objects: usize,
    pub enumerate_morphisms: usize,
}

impl From<Exact2SizeBound> for SizeBound {
    fn from(b: Exact2SizeBound) -> SizeBound {
        SizeBound {
            construct_objects: b.construct_objects,
            construct_morphisms: b.construct_morphisms,
            enumerate_objects: b.enumerate_objects,
            enumerate_morphisms: b.enumerate_morphisms,
        }
    }
}

/// A functor between finite categories.
pub struct Exact2Functor(FinFunctor);

/// Kernel data (a catead, so-data or bof-data).
pub struct Exact2Kernel(KernelData);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(Exact2Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::SizeBound { .. } => Exact2Status::SizeBound,
            Error::SegalFailure { .. } => Exact2Status::CheckFailed,
            _ => Exact2Status::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(Exact2Status::NullPointer, format!("{what} is NULL"))
}

/// Run `body` behind `catch_unwind`, recording any failure message.
fn guard(body: impl FnOnce() -> Result<Exact2Status, Failure>) -> Exact2Status {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("panic: {message}"));
            Exact2Status::Panic
        }
    }
}

/// # Safety
/// `p` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(Exact2Status::InvalidInput, format!("{what} is not UTF-8: {e}")))
}

/// # Safety
/// `p` must be NULL or point to a live handle.
unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// # Safety
/// `out` must be NULL or writable.
unsafe fn put<T>(out: *mut *mut T, value: Box<T>) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(value);
    Ok(())
}

/// # Safety
/// `out` must be NULL or writable.
unsafe fn put_json(out: *mut *mut c_char, value: &Value) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let text = CString::new(to_canonical_string(value)).expect("JSON has no nul bytes");
    *out = text.into_raw();
    Ok(())
}

/// # Safety
/// `bound` must be NULL or point to a valid `Exact2SizeBound`.
unsafe fn read_bound(bound: *const Exact2SizeBound) -> SizeBound {
    bound.as_ref().map(|b| SizeBound::from(*b)).unwrap_or_else(SizeBound::from_env)
}

fn check(ok: bool) -> Exact2Status {
    if ok {
        Exact2Status::Ok
    } else {
        Exact2Status::CheckFailed
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn exact2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failure on this thread; empty after success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn exact2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// The default size bound, with `EXACT2_SIZE_BOUND` applied.
#[no_mangle]
pub extern "C" fn exact2_size_bound_default() -> Exact2SizeBound {
    let b = SizeBound::from_env();
    Exact2SizeBound {
        construct_objects: b.construct_objects,
        construct_morphisms: b.construct_morphisms,
        enumerate_objects: b.enumerate_objects,
        enumerate_morphisms: b.enumerate_morphisms,
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exact2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a `fincat-functor/v1` document. The functor and its categories must
/// satisfy their laws.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_functor_from_json(json: *const c_char, out: *mut *mut Exact2Functor) -> Exact2Status {
    guard(|| {
        let f = functor_from_str(read_str(json, "json")?)?;
        let mut report = exact2::fincat::ValidationReport::default();
        report.extend_prefixed("source", f.source().validate());
        report.extend_prefixed("target", f.target().validate());
        report.extend_prefixed("functor", f.validate());
        if !report.is_valid() {
            return Err(Failure(Exact2Status::InvalidInput, report.to_string()));
        }
        put(out, Box::new(Exact2Functor(f)))?;
        Ok(Exact2Status::Ok)
    })
}

/// # Safety
/// `f` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exact2_functor_free(f: *mut Exact2Functor) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_functor_to_json(f: *const Exact2Functor, out: *mut *mut c_char) -> Exact2Status {
    guard(|| {
        put_json(out, &functor_to_value(&handle(f, "f")?.0))?;
        Ok(Exact2Status::Ok)
    })
}

/// Class membership flags of `f`, as JSON.
///
/// # Safety
/// `f` must be a live handle, `bound` NULL or valid, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_classify(
    f: *const Exact2Functor,
    bound: *const Exact2SizeBound,
    out: *mut *mut c_char,
) -> Exact2Status {
    guard(|| {
        let c = exact2::factorization::classify(&handle(f, "f")?.0, &read_bound(bound));
        put_json(out, &to_value(&c))?;
        Ok(check(c.cross_check.agrees))
    })
}

/// Factor `f` through `system`; the JSON holds the middle category and both legs.
///
/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_factor(f: *const Exact2Functor, system: Exact2System, out: *mut *mut c_char) -> Exact2Status {
    guard(|| {
        let f = &handle(f, "f")?.0;
        let fz = exact2::factorization::factor(f, system.into())?;
        put_json(
            out,
            &json!({
                "system": fz.system,
                "middle": category_to_value(&fz.middle),
                "e": functor_to_value(&fz.e),
                "m": functor_to_value(&fz.m),
            }),
        )?;
        Ok(check(fz.composite() == *f))
    })
}

/// Whether `f` is orthogonal to `g`; the JSON carries a witness when not.
///
/// # Safety
/// `f` and `g` must be live handles, `bound` NULL or valid, and `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_orthogonal(
    f: *const Exact2Functor,
    g: *const Exact2Functor,
    bound: *const Exact2SizeBound,
    out: *mut *mut c_char,
) -> Exact2Status {
    guard(|| {
        let o = exact2::factorization::orthogonal(&handle(f, "f")?.0, &handle(g, "g")?.0, &read_bound(bound))?;
        if !out.is_null() {
            put_json(out, &to_value(&o))?;
        }
        Ok(check(o.orthogonal))
    })
}

/// Kernel data of `f` in `system`.
///
/// # Safety
/// `f` must be a live handle, `bound` NULL or valid, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_kernel(
    f: *const Exact2Functor,
    system: Exact2System,
    bound: *const Exact2SizeBound,
    out: *mut *mut Exact2Kernel,
) -> Exact2Status {
    guard(|| {
        let k = exact2::kernels::kernel(&handle(f, "f")?.0, system.into(), &read_bound(bound))?;
        put(out, Box::new(Exact2Kernel(k)))?;
        Ok(Exact2Status::Ok)
    })
}

/// Parse a `kernel/v1` document; its simplicial identities must hold.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_kernel_from_json(json: *const c_char, out: *mut *mut Exact2Kernel) -> Exact2Status {
    guard(|| {
        let k = kernel_from_str(read_str(json, "json")?)?;
        let report = k.validate();
        if !report.is_valid() {
            return Err(Failure(Exact2Status::InvalidInput, report.to_string()));
        }
        put(out, Box::new(Exact2Kernel(k)))?;
        Ok(Exact2Status::Ok)
    })
}

/// # Safety
/// `k` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exact2_kernel_free(k: *mut Exact2Kernel) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// # Safety
/// `k` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_kernel_to_json(k: *const Exact2Kernel, out: *mut *mut c_char) -> Exact2Status {
    guard(|| {
        put_json(out, &kernel_to_value(&handle(k, "k")?.0))?;
        Ok(Exact2Status::Ok)
    })
}

/// Congruence verdict for `k`; `EXACT2_STATUS_CHECK_FAILED` when some condition fails.
///
/// # Safety
/// `k` must be a live handle and `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_is_congruence(k: *const Exact2Kernel, out: *mut *mut c_char) -> Exact2Status {
    guard(|| {
        let v = exact2::quotients::is_congruence(&handle(k, "k")?.0);
        if !out.is_null() {
            put_json(out, &to_value(&v))?;
        }
        Ok(check(v.is_congruence))
    })
}

/// Effectivity of the congruence `k`. A non-congruence is invalid input.
///
/// # Safety
/// `k` must be a live handle, `bound` NULL or valid, and `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_check_effective(
    k: *const Exact2Kernel,
    bound: *const Exact2SizeBound,
    out: *mut *mut c_char,
) -> Exact2Status {
    guard(|| {
        let r = exact2::quotients::check_effective(&handle(k, "k")?.0, &read_bound(bound))?;
        if !out.is_null() {
            put_json(
                out,
                &json!({
                    "system": r.system,
                    "effective": r.is_effective(),
                    "quotient": category_to_value(r.quotient.category()),
                    "failures": to_value(&r.failures),
                }),
            )?;
        }
        Ok(check(r.is_effective()))
    })
}

/// The ring counterexample report as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exact2_abcat_demo(out: *mut *mut c_char) -> Exact2Status {
    guard(|| {
        let r = exact2::abcat::counterexample_report()?;
        put_json(out, &to_value(&r))?;
        Ok(check(r.reproduces()))
    })
}
