use std::ffi::{c_char, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use xsolvable_ffi::*;

fn build(case: XsCase, ell: u32, a: (i64, i64), b: (i64, i64)) -> Result<*mut XsSystem, XsStatus> {
    let mut sys = ptr::null_mut();
    let status = unsafe { xs_system_new(case as i32, ell, a.0, a.1, b.0, b.1, &mut sys) };
    if status == XsStatus::Ok {
        Ok(sys)
    } else {
        assert!(sys.is_null());
        Err(status)
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(xs_last_error_message()) }.to_string_lossy().into_owned()
}

fn read_string(f: impl Fn(*mut c_char, usize, *mut usize) -> XsStatus) -> String {
    let mut needed = 0;
    assert_eq!(f(ptr::null_mut(), 0, &mut needed), XsStatus::Ok);
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(f(buf.as_mut_ptr(), buf.len(), &mut needed), XsStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn worked_instance_round_trip() {
    let sys = build(XsCase::L2, 1, (-2, 1), (0, 1)).unwrap();
    unsafe {
        let mut e = 0.0;
        assert_eq!(xs_system_energy(sys, 0, &mut e), XsStatus::Ok);
        assert_eq!(e, 4.0);
        let exact = read_string(|b, l, n| xs_system_energy_string(sys, 2, b, l, n));
        assert_eq!(exact, "12");

        let mut count = 0;
        assert_eq!(xs_system_poly_coeffs(sys, 0, ptr::null_mut(), 0, &mut count), XsStatus::Ok);
        assert_eq!(count, 2);
        let mut coeffs = [0.0; 2];
        assert_eq!(xs_system_poly_coeffs(sys, 0, coeffs.as_mut_ptr(), 2, &mut count), XsStatus::Ok);
        assert_eq!(coeffs, [2.0, 1.0]);
        assert_eq!(read_string(|b, l, n| xs_system_poly_string(sys, 0, b, l, n)), "2,1");

        let mut zero = false;
        assert_eq!(xs_system_residual_is_zero(sys, 3, &mut zero), XsStatus::Ok);
        assert!(zero);

        let mut v = 0.0;
        assert_eq!(xs_system_potential(sys, 1.0, &mut v), XsStatus::Ok);
        assert!(v.is_finite());
        assert_eq!(xs_system_wavefunction(sys, 1, 0.7, &mut v), XsStatus::Ok);
        assert!(v.is_finite());
        xs_system_free(sys);
    }
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(build(XsCase::J1, 1, (0, 1), (-1, 2)).unwrap_err(), XsStatus::ParameterConstraint);
    assert_eq!(last_error(), "parameter constraint violated: β<−ℓ");
    assert_eq!(build(XsCase::L2, 1, (-2, 0), (0, 1)).unwrap_err(), XsStatus::InvalidArgument);
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { xs_system_new(9, 1, 1, 1, 1, 1, &mut sys) }, XsStatus::InvalidArgument);
    assert_eq!(unsafe { xs_system_new(1, 1, -2, 1, 0, 1, ptr::null_mut()) }, XsStatus::NullPointer);

    let mut e = 0.0;
    assert_eq!(unsafe { xs_system_energy(ptr::null(), 0, &mut e) }, XsStatus::NullPointer);

    let sys = build(XsCase::L2, 1, (-2, 1), (0, 1)).unwrap();
    unsafe {
        let mut buf = [0 as c_char; 2];
        let mut needed = 0;
        assert_eq!(xs_system_poly_string(sys, 2, buf.as_mut_ptr(), 2, &mut needed), XsStatus::BufferTooSmall);
        assert!(needed > 2);
        let mut v = 0.0;
        assert_eq!(xs_system_potential(sys, -1.0, &mut v), XsStatus::InvalidArgument);
        assert_eq!(xs_system_gram_max_off_diagonal(sys, 1, &mut v), XsStatus::InvalidArgument);
        let mut eig = [0.0; 11];
        assert_eq!(xs_system_spectrum(sys, 11, 0, eig.as_mut_ptr(), ptr::null_mut()), XsStatus::InvalidArgument);
        xs_system_free(sys);
        xs_system_free(ptr::null_mut());
    }
}

#[test]
fn numerical_entry_points() {
    let sys = build(XsCase::ExtJ, 2, (-5, 2), (-5, 2)).unwrap();
    unsafe {
        let mut off = 1.0;
        assert_eq!(xs_system_gram_max_off_diagonal(sys, 6, &mut off), XsStatus::Ok);
        assert!(off < 1e-10, "{off}");
        let mut eig = [0.0; 5];
        let mut err = [0.0; 5];
        assert_eq!(xs_system_spectrum(sys, 5, 0, eig.as_mut_ptr(), err.as_mut_ptr()), XsStatus::Ok);
        assert!(eig[0].abs() < 1e-3);
        assert!(err.iter().all(|e| *e < 1e-3), "{err:?}");
        xs_system_free(sys);
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(xs_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/xsolvable.h")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in ["xs_system_new", "xs_system_free", "xs_last_error_message", "XS_STATUS_BUFFER_TOO_SMALL", "XS_CASE_EXT_J"]
    {
        assert!(text.contains(name), "{name} missing from header");
    }
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include "xsolvable.h"

int main(void) {
    XsSystem *sys = NULL;
    if (xs_system_new(XS_CASE_L2, 1, -2, 1, 0, 1, &sys) != XS_STATUS_OK) return 1;
    double e = 0.0;
    if (xs_system_energy(sys, 0, &e) != XS_STATUS_OK || e != 4.0) return 2;
    char buf[64];
    size_t needed = 0;
    if (xs_system_poly_string(sys, 0, buf, sizeof buf, &needed) != XS_STATUS_OK) return 3;
    printf("%s\n", buf);
    xs_system_free(sys);
    if (xs_system_new(XS_CASE_J1, 1, 0, 1, -1, 2, &sys) != XS_STATUS_PARAMETER_CONSTRAINT) return 4;
    printf("%s\n", xs_last_error_message());
    return 0;
}
"#;

/// Compiles a C program against the header and links the static library.
/// Skipped (with a note) when no C compiler is installed.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler found; skipping");
        return;
    }
    // target/<profile>/deps/<test exe> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libxsolvable_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());

    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("c_smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(&src, C_SMOKE).unwrap();
    let bin = dir.join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "2,1\nparameter constraint violated: β<−ℓ\n");
}
