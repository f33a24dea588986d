use qtangent_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

fn text(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { qt_string_free(p) };
    s
}

fn u(src: &str) -> *mut QtUElement {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qt_u_parse(c.as_ptr(), &mut out) }, QtStatus::Ok);
    out
}

#[test]
fn parse_print_and_multiply() {
    let e = u("E");
    let f = u("F");
    let mut ef = ptr::null_mut();
    assert_eq!(unsafe { qt_u_mul(e, f, &mut ef) }, QtStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qt_u_to_string(ef, &mut s) }, QtStatus::Ok);
    let printed = text(s);
    let again = u(&printed);
    let mut same = false;
    assert_eq!(unsafe { qt_u_equal(ef, again, &mut same) }, QtStatus::Ok);
    assert!(same);
    unsafe {
        qt_u_free(e);
        qt_u_free(f);
        qt_u_free(ef);
        qt_u_free(again);
    }
}

#[test]
fn pairing_and_bound() {
    let e = u("E");
    let o = CString::new("u21").unwrap();
    let mut oe = ptr::null_mut();
    assert_eq!(unsafe { qt_o_parse(o.as_ptr(), &mut oe) }, QtStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qt_pair(e, oe, &mut s) }, QtStatus::Ok);
    assert_eq!(text(s), "1");
    let x = u("K^6*Gd(5) + (Fd(1)*K^6 - K^6)*Gd(4) + (Fd(2)*K^6*Ed(1) + K^6*Ed(3))*Gd(2) + Fd(3)*K^6");
    let mut b = 0usize;
    assert_eq!(unsafe { qt_coideal_bound(x, &mut b) }, QtStatus::Ok);
    assert_eq!(b, 17);
    unsafe {
        qt_u_free(e);
        qt_u_free(x);
        qt_o_free(oe);
    }
}

#[test]
fn error_codes() {
    let bad = CString::new("E*(").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qt_u_parse(bad.as_ptr(), &mut out) }, QtStatus::Syntax);
    assert!(out.is_null());
    assert!(!qt_last_error().is_null());
    let mixed = CString::new("E*u11").unwrap();
    assert_eq!(unsafe { qt_u_parse(mixed.as_ptr(), &mut out) }, QtStatus::MixedAlgebra);
    assert_eq!(unsafe { qt_u_parse(ptr::null(), &mut out) }, QtStatus::NullPointer);
    let zero = u("0");
    let mut b = 0usize;
    assert_eq!(unsafe { qt_coideal_bound(zero, &mut b) }, QtStatus::Computation);
    unsafe { qt_u_free(zero) };
    let name = CString::new("calc42").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qt_model_build(name.as_ptr(), &mut m) }, QtStatus::UnknownFixture);
}

#[test]
fn model_queries() {
    let name = CString::new("calc4").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qt_model_build(name.as_ptr(), &mut m) }, QtStatus::Ok);
    let mut ext = [0usize; 5];
    assert_eq!(unsafe { qt_model_exterior_dims(m, ext.as_mut_ptr()) }, QtStatus::Ok);
    assert_eq!(ext, [1, 3, 3, 1, 0]);
    let mut h = [9usize; 4];
    assert_eq!(unsafe { qt_model_cohomology(m, 0, h.as_mut_ptr()) }, QtStatus::Ok);
    assert_eq!(h, [1, 0, 0, 1]);
    assert_eq!(unsafe { qt_model_cohomology(m, 3, h.as_mut_ptr()) }, QtStatus::Ok);
    assert_eq!(h, [0; 4]);
    unsafe { qt_model_free(m) };
    let mut passed = false;
    assert_eq!(unsafe { qt_verify(name.as_ptr(), &mut passed) }, QtStatus::Ok);
    assert!(passed);
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/qtangent.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["qt_u_parse", "qt_pair", "qt_model_build", "qt_verify", "QT_STATUS_SYNTAX"] {
        assert!(text.contains(f), "{f}");
    }
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .status();
    if let Ok(s) = status {
        assert!(s.success());
    }
}
