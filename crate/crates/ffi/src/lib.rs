//! C ABI over the exact-arithmetic core.
//!
//! Values and suite results cross the boundary as opaque handles owned by
//! the caller and released with the matching `*_free` function. Every
//! fallible call returns a [`BsStatus`]; on failure the message is kept per
//! thread and can be read with [`bs_last_error`]. Strings returned to the
//! caller are released with [`bs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bethe_symm::algebra::{Field, RationalFunction};
use bethe_symm::cli::eval::parse_value;
use bethe_symm::lattice::{dwbp_bruteforce, ModelSpec, DEFAULT_SITE_CAP};
use bethe_symm::symfunc::{felderhof_closed_form, grothendieck, schur, FelderhofMode, YoungDiagram};
use bethe_symm::verifier::{run_suite, Profile, RunOptions, VerificationReport};
use bethe_symm::Error;

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DivisionByZero = 4,
    SingularPoint = 5,
    NotDivisible = 6,
    CapExceeded = 7,
    ShapeMismatch = 8,
    InvalidArgument = 9,
    SamplingExhausted = 10,
    Panic = 11,
}

/// An exact rational function.
pub struct BsValue(RationalFunction);

/// Reports of one suite run.
pub struct BsSuite(Vec<VerificationReport>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BsStatus {
    match e {
        Error::DivisionByZero => BsStatus::DivisionByZero,
        Error::SingularPoint(_) => BsStatus::SingularPoint,
        Error::NotDivisible => BsStatus::NotDivisible,
        Error::CapExceeded { .. } => BsStatus::CapExceeded,
        Error::ShapeMismatch(_) => BsStatus::ShapeMismatch,
        Error::Parse(_) | Error::MissingVariable(_) => BsStatus::Parse,
        Error::SamplingExhausted(_) => BsStatus::SamplingExhausted,
        Error::InvalidModel(_) | Error::BoxViolation(_) | Error::NotStrictlyIncreasing(_) => {
            BsStatus::InvalidArgument
        }
    }
}

enum Fail {
    Status(BsStatus, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BsStatus::Ok,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            BsStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(BsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(BsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn value<'a>(p: *const BsValue, what: &str) -> Result<&'a RationalFunction, Fail> {
    p.as_ref().map(|v| &v.0).ok_or_else(|| null(what))
}

unsafe fn values(p: *const *const BsValue, len: usize, what: &str) -> Result<Vec<RationalFunction>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(null(what));
    }
    std::slice::from_raw_parts(p, len)
        .iter()
        .map(|&v| value(v, what).cloned())
        .collect()
}

unsafe fn indices<'a>(p: *const usize, len: usize, what: &str) -> Result<&'a [usize], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn store(out: *mut *mut BsValue, v: RationalFunction) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(BsValue(v)));
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an exact rational (`-3/2`) or a variable name (`u1`, `beta`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bs_value_parse(text_ptr: *const c_char, out: *mut *mut BsValue) -> BsStatus {
    guard(|| {
        let s = text(text_ptr, "text")?;
        store(out, parse_value(s)?)
    })
}

/// # Safety
/// `v` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bs_value_free(v: *mut BsValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Canonical text of a value; release with `bs_string_free`.
///
/// # Safety
/// `v` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bs_value_to_string(v: *const BsValue) -> *mut c_char {
    match v.as_ref() {
        Some(v) => to_c_string(v.0.to_text()),
        None => ptr::null_mut(),
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BsOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `*out = a op b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bs_value_binary(
    op: BsOp,
    a: *const BsValue,
    b: *const BsValue,
    out: *mut *mut BsValue,
) -> BsStatus {
    guard(|| {
        let (a, b) = (value(a, "a")?, value(b, "b")?);
        let r = match op {
            BsOp::Add => a + b,
            BsOp::Sub => a - b,
            BsOp::Mul => a * b,
            BsOp::Div => a.checked_div(b)?,
        };
        store(out, r)
    })
}

/// Nonzero when the two values are equal as rational functions.
///
/// # Safety
/// `a`, `b` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn bs_value_equal(a: *const BsValue, b: *const BsValue) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.0 == b.0),
        _ => 0,
    }
}

unsafe fn diagram(parts: *const usize, nparts: usize, rows: usize) -> Result<YoungDiagram, Fail> {
    let parts = indices(parts, nparts, "parts")?.to_vec();
    if parts.len() > rows {
        return Err(Fail::Status(
            BsStatus::ShapeMismatch,
            format!("{} parts for {rows} variables", parts.len()),
        ));
    }
    Ok(YoungDiagram::new(parts)?.padded(rows)?)
}

/// Schur polynomial s_λ(z_1..z_N); λ is zero-padded to N parts.
///
/// # Safety
/// Arrays must hold the stated number of elements; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bs_schur(
    parts: *const usize,
    nparts: usize,
    vars: *const *const BsValue,
    nvars: usize,
    out: *mut *mut BsValue,
) -> BsStatus {
    guard(|| {
        let z = values(vars, nvars, "vars")?;
        let lam = diagram(parts, nparts, z.len())?;
        store(out, schur(&lam, &z)?)
    })
}

/// β-Grothendieck polynomial G_λ(z_1..z_N; β).
///
/// # Safety
/// As for `bs_schur`; `beta` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bs_grothendieck(
    parts: *const usize,
    nparts: usize,
    vars: *const *const BsValue,
    nvars: usize,
    beta: *const BsValue,
    out: *mut *mut BsValue,
) -> BsStatus {
    guard(|| {
        let z = values(vars, nvars, "vars")?;
        let lam = diagram(parts, nparts, z.len())?;
        store(out, grothendieck(&lam, &z, value(beta, "beta")?)?)
    })
}

/// Felderhof wavefunction in determinant form. `sites` lists particle
/// positions (`holes == 0`) or hole positions (`holes != 0`), 1-based.
///
/// # Safety
/// Arrays must hold the stated number of elements; handles live.
#[no_mangle]
pub unsafe extern "C" fn bs_felderhof_wavefunction(
    m: usize,
    sites: *const usize,
    nsites: usize,
    spectral: *const *const BsValue,
    nspectral: usize,
    p: *const BsValue,
    q: *const BsValue,
    holes: i32,
    out: *mut *mut BsValue,
) -> BsStatus {
    guard(|| {
        let x = indices(sites, nsites, "sites")?;
        let u = values(spectral, nspectral, "spectral")?;
        let mode = if holes != 0 {
            FelderhofMode::Hole
        } else {
            FelderhofMode::Particle
        };
        store(out, felderhof_closed_form(m, x, &u, value(p, "p")?, value(q, "q")?, mode)?)
    })
}

/// Felderhof domain wall partition function by lattice contraction;
/// `spectral[0]` acts on the vacuum first.
///
/// # Safety
/// Arrays must hold the stated number of elements; handles live.
#[no_mangle]
pub unsafe extern "C" fn bs_felderhof_dwbp(
    spectral: *const *const BsValue,
    nspectral: usize,
    p: *const BsValue,
    q: *const BsValue,
    out: *mut *mut BsValue,
) -> BsStatus {
    guard(|| {
        let u = values(spectral, nspectral, "spectral")?;
        let model = ModelSpec::Felderhof {
            p: value(p, "p")?.clone(),
            q: value(q, "q")?.clone(),
        };
        store(out, dwbp_bruteforce(&model, &u, DEFAULT_SITE_CAP)?)
    })
}

/// Runs the verification tasks matching `filter` at `profile` ("smoke",
/// "standard" or "deep").
///
/// # Safety
/// Strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bs_verify(
    filter: *const c_char,
    profile: *const c_char,
    seed: u64,
    out: *mut *mut BsSuite,
) -> BsStatus {
    guard(|| {
        let filter = text(filter, "filter")?;
        let profile: Profile = text(profile, "profile")?.parse()?;
        if out.is_null() {
            return Err(null("out"));
        }
        let reports = run_suite(filter, &RunOptions::new(profile, seed))?;
        *out = Box::into_raw(Box::new(BsSuite(reports)));
        Ok(())
    })
}

/// Number of task reports in a suite result.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bs_suite_len(s: *const BsSuite) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Nonzero when every task passed.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bs_suite_passed(s: *const BsSuite) -> i32 {
    s.as_ref().map_or(0, |s| i32::from(s.0.iter().all(VerificationReport::passed)))
}

/// JSON array of the reports; release with `bs_string_free`.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bs_suite_json(s: *const BsSuite) -> *mut c_char {
    match s.as_ref().map(|s| serde_json::to_string(&s.0)) {
        Some(Ok(j)) => to_c_string(j),
        _ => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from `bs_verify` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bs_suite_free(s: *mut BsSuite) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
