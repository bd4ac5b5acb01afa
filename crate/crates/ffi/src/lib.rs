//! C ABI over `xsolvable`.
//!
//! Systems live behind an opaque `XsSystem` handle created by
//! [`xs_system_new`] and released with [`xs_system_free`]. Every fallible
//! call returns an [`XsStatus`]; on failure a message is available from
//! [`xs_last_error_message`] on the same thread. Rationals cross the
//! boundary as numerator/denominator pairs, exact values come back as
//! `"p/q"` strings.
//!
//! String outputs use a caller buffer: pass `buf = NULL` to learn the size
//! (including the terminating NUL) through `needed`, then call again.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use xsolvable::polycore::{rat, to_f64, Rational};
use xsolvable::quadrature::{gram, QuadError};
use xsolvable::spectral::{compare_spectrum, GridSpec, SpectralError};
use xsolvable::xconstruct::{
    build_system, energy, exceptional_poly, ode_residual, potential_eval, wavefunction_eval, CaseTag, Params,
    XError, XSystem,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The parameters violate an admissibility bound of the chosen case.
    ParameterConstraint = 3,
    /// The deforming function has a zero inside the physical domain.
    DeformingFunctionZero = 4,
    /// A numerical routine failed to converge or produced non-finite values.
    Numerical = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Values accepted for the `case_tag` argument of [`xs_system_new`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XsCase {
    L1 = 0,
    L2 = 1,
    J1 = 2,
    J2 = 3,
    ExtJ = 4,
}

/// Opaque handle to a built system.
pub struct XsSystem {
    inner: XSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn fail(status: XsStatus, msg: impl Into<String>) -> XsStatus {
    set_error(msg);
    status
}

fn from_xerror(e: &XError) -> XsStatus {
    let status = match e {
        XError::ParameterConstraint(_) => XsStatus::ParameterConstraint,
        XError::DeformingFunctionZero(_) => XsStatus::DeformingFunctionZero,
        XError::UnknownCase(_) | XError::OutOfDomain(_) => XsStatus::InvalidArgument,
        _ => XsStatus::Internal,
    };
    fail(status, e.to_string())
}

fn from_spectral(e: &SpectralError) -> XsStatus {
    match e {
        SpectralError::System(x) => from_xerror(x),
        SpectralError::NonFinitePotential { .. } => fail(XsStatus::Numerical, e.to_string()),
        _ => fail(XsStatus::InvalidArgument, e.to_string()),
    }
}

fn from_quad(e: &QuadError) -> XsStatus {
    match e {
        QuadError::Unsupported(_) => fail(XsStatus::InvalidArgument, e.to_string()),
        _ => fail(XsStatus::Numerical, e.to_string()),
    }
}

/// Runs `f`, turning a panic into [`XsStatus::Internal`].
fn guard(f: impl FnOnce() -> XsStatus) -> XsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(XsStatus::Internal, "internal panic"),
    }
}

fn rational(num: i64, den: i64, name: &str) -> Result<Rational, XsStatus> {
    if den == 0 {
        return Err(fail(XsStatus::InvalidArgument, format!("{name}: zero denominator")));
    }
    Ok(rat(num, den))
}

fn case_from(tag: i32) -> Option<CaseTag> {
    Some(match tag {
        0 => CaseTag::L1,
        1 => CaseTag::L2,
        2 => CaseTag::J1,
        3 => CaseTag::J2,
        4 => CaseTag::ExtJ,
        _ => return None,
    })
}

/// # Safety
/// `sys` must be null or a live handle from [`xs_system_new`].
unsafe fn system<'a>(sys: *const XsSystem) -> Result<&'a XSystem, XsStatus> {
    match sys.as_ref() {
        Some(s) => Ok(&s.inner),
        None => Err(fail(XsStatus::NullPointer, "null system handle")),
    }
}

/// # Safety
/// `buf` must be null or point to `len` writable bytes; `needed` null or
/// writable.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> XsStatus {
    let size = s.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() {
        return XsStatus::Ok;
    }
    if len < size {
        return fail(XsStatus::BufferTooSmall, format!("buffer of {len} bytes, {size} needed"));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    XsStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Builds and verifies a system. `beta_*` are ignored for the Laguerre
/// cases. On success `*out` receives a handle owned by the caller.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn xs_system_new(
    case_tag: i32,
    ell: u32,
    alpha_num: i64,
    alpha_den: i64,
    beta_num: i64,
    beta_den: i64,
    out: *mut *mut XsSystem,
) -> XsStatus {
    guard(|| {
        if out.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let Some(case) = case_from(case_tag) else {
            return fail(XsStatus::InvalidArgument, format!("unknown case tag {case_tag}"));
        };
        let alpha = try_status!(rational(alpha_num, alpha_den, "alpha"));
        let beta = if case.is_laguerre() { rat(0, 1) } else { try_status!(rational(beta_num, beta_den, "beta")) };
        match build_system(case, Params::new(ell as usize, alpha, beta)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(XsSystem { inner }));
                XsStatus::Ok
            }
            Err(e) => from_xerror(&e),
        }
    })
}

/// Releases a handle. Null is accepted.
///
/// # Safety
/// `sys` must be null or a handle from [`xs_system_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xs_system_free(sys: *mut XsSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Energy of physical level `level` as a double.
///
/// # Safety
/// `sys` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xs_system_energy(sys: *const XsSystem, level: u32, out: *mut f64) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if out.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        *out = to_f64(&energy(s, level as usize));
        XsStatus::Ok
    })
}

/// Exact energy of physical level `level` as `"p/q"`.
///
/// # Safety
/// `sys` must be a live handle; see the module notes for `buf`/`needed`.
#[no_mangle]
pub unsafe extern "C" fn xs_system_energy_string(
    sys: *const XsSystem,
    level: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        write_str(&energy(s, level as usize).to_string(), buf, len, needed)
    })
}

/// Coefficients of `P_{ℓ,n}` in ascending powers as doubles. `*count`
/// receives the number of coefficients; `out` may be null to query it.
///
/// # Safety
/// `sys` must be a live handle, `count` writable, `out` null or `cap`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn xs_system_poly_coeffs(
    sys: *const XsSystem,
    n: u32,
    out: *mut f64,
    cap: usize,
    count: *mut usize,
) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if count.is_null() {
            return fail(XsStatus::NullPointer, "null count pointer");
        }
        let p = exceptional_poly(s, n as usize);
        let coeffs = p.coeffs();
        *count = coeffs.len();
        if out.is_null() {
            return XsStatus::Ok;
        }
        if cap < coeffs.len() {
            return fail(XsStatus::BufferTooSmall, format!("room for {cap} coefficients, {} needed", coeffs.len()));
        }
        for (i, c) in coeffs.iter().enumerate() {
            *out.add(i) = to_f64(c);
        }
        XsStatus::Ok
    })
}

/// Exact coefficients of `P_{ℓ,n}` as a comma-separated list of `"p/q"`,
/// ascending powers.
///
/// # Safety
/// As for [`xs_system_energy_string`].
#[no_mangle]
pub unsafe extern "C" fn xs_system_poly_string(
    sys: *const XsSystem,
    n: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        let p = exceptional_poly(s, n as usize);
        let text: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
        write_str(&text.join(","), buf, len, needed)
    })
}

/// The potential at a physical-domain point `x`.
///
/// # Safety
/// `sys` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xs_system_potential(sys: *const XsSystem, x: f64, out: *mut f64) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if out.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        match potential_eval(s, x) {
            Ok(v) => {
                *out = v;
                XsStatus::Ok
            }
            Err(e) => from_xerror(&e),
        }
    })
}

/// Unnormalized eigenfunction of physical level `level` at `x`.
///
/// # Safety
/// `sys` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xs_system_wavefunction(sys: *const XsSystem, level: u32, x: f64, out: *mut f64) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if out.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        match wavefunction_eval(s, level as usize, x) {
            Ok(v) => {
                *out = v;
                XsStatus::Ok
            }
            Err(e) => from_xerror(&e),
        }
    })
}

/// Sets `*is_zero` to whether `P_{ℓ,n}` solves the constraint equation
/// exactly.
///
/// # Safety
/// `sys` must be a live handle and `is_zero` writable.
#[no_mangle]
pub unsafe extern "C" fn xs_system_residual_is_zero(sys: *const XsSystem, n: u32, is_zero: *mut bool) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if is_zero.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        match ode_residual(s, n as usize) {
            Ok(r) => {
                *is_zero = r.is_zero();
                XsStatus::Ok
            }
            Err(e) => from_xerror(&e),
        }
    })
}

/// Largest normalized off-diagonal entry of the Gram matrix of levels
/// `0..size`.
///
/// # Safety
/// `sys` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xs_system_gram_max_off_diagonal(sys: *const XsSystem, size: u32, out: *mut f64) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if out.is_null() {
            return fail(XsStatus::NullPointer, "null output pointer");
        }
        match gram(s, size as usize) {
            Ok(g) => {
                *out = g.max_off_diagonal;
                XsStatus::Ok
            }
            Err(e) => from_quad(&e),
        }
    })
}

/// Lowest `k` finite-difference eigenvalues on the default window with
/// `points` interior nodes (0 keeps the default). `errors`, if not null,
/// receives the relative error of each level against the closed form
/// (absolute for a zero level).
///
/// # Safety
/// `sys` must be a live handle, `eigenvalues` `k` writable doubles, and
/// `errors` null or `k` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn xs_system_spectrum(
    sys: *const XsSystem,
    k: u32,
    points: usize,
    eigenvalues: *mut f64,
    errors: *mut f64,
) -> XsStatus {
    guard(|| {
        let s = try_status!(system(sys));
        if eigenvalues.is_null() {
            return fail(XsStatus::NullPointer, "null eigenvalue buffer");
        }
        let mut grid = GridSpec::default_for(s);
        if points > 0 {
            grid = GridSpec::new(grid.x_min, grid.x_max, points);
        }
        match compare_spectrum(s, k as usize, &grid) {
            Ok(r) => {
                for (i, v) in r.numeric.iter().enumerate() {
                    *eigenvalues.add(i) = *v;
                    if !errors.is_null() {
                        *errors.add(i) = r.errors[i];
                    }
                }
                XsStatus::Ok
            }
            Err(e) => from_spectral(&e),
        }
    })
}

/// Message of the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn xs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn xs_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string has an interior NUL"),
    };
    VERSION.as_ptr()
}
