use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fibrook_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { fibrook_string_free(s) };
    out
}

fn poly_text(p: *const FibrookPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_poly_to_string(p, &mut s) },
        FibrookStatus::Ok
    );
    take_string(s)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fibrook_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn weight_poly_and_eval() {
    let mut p = ptr::null_mut();
    let fam = c("F");
    assert_eq!(
        unsafe { fibrook_weight_poly(fam.as_ptr(), 5, &mut p) },
        FibrookStatus::Ok
    );
    assert_eq!(poly_text(p), "p^2*q + 3*p*q^3 + q^5");
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_poly_eval(p, 1, 1, 1, &mut v) },
        FibrookStatus::Ok
    );
    assert_eq!(take_string(v), "5");
    unsafe { fibrook_poly_free(p) };
}

#[test]
fn triangle_round_trip() {
    let mut t = ptr::null_mut();
    let kind = c("cf");
    assert_eq!(
        unsafe { fibrook_triangle_build(kind.as_ptr(), 6, &mut t) },
        FibrookStatus::Ok
    );
    assert_eq!(unsafe { fibrook_triangle_n_max(t) }, 6);
    let mut e = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_triangle_entry(t, 4, 1, &mut e) },
        FibrookStatus::Ok
    );
    assert_eq!(poly_text(e), "p*q^4 + q^6");

    let mut b = ptr::null_mut();
    let (board, fam) = (c("F(0,1,2,3)"), c("F"));
    assert_eq!(
        unsafe { fibrook_board_file_poly(board.as_ptr(), fam.as_ptr(), 3, &mut b) },
        FibrookStatus::Ok
    );
    let mut eq = false;
    assert_eq!(
        unsafe { fibrook_poly_equal(e, b, &mut eq) },
        FibrookStatus::Ok
    );
    assert!(eq);

    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_triangle_json(t, &mut json) },
        FibrookStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["entries"][4][1], "p*q^4 + q^6");

    assert_eq!(
        unsafe { fibrook_triangle_entry(t, 7, 1, &mut e) },
        FibrookStatus::OutOfRange
    );
    unsafe {
        fibrook_poly_free(e);
        fibrook_poly_free(b);
        fibrook_triangle_free(t);
    }
}

#[test]
fn rook_poly_on_staircase() {
    let mut p = ptr::null_mut();
    let (board, fam) = (c("F(0,1,2)"), c("F"));
    assert_eq!(
        unsafe { fibrook_board_rook_poly(board.as_ptr(), fam.as_ptr(), 1, &mut p) },
        FibrookStatus::Ok
    );
    assert_eq!(poly_text(p), "q + q^2");
    unsafe { fibrook_poly_free(p) };
}

#[test]
fn errors_are_reported() {
    let mut p = ptr::null_mut();
    let kind = c("SF");
    assert_eq!(
        unsafe { fibrook_triangle_build(kind.as_ptr(), 3, &mut p) },
        FibrookStatus::ParseError
    );
    assert!(last_error().contains("triangle kind"));

    let (board, fam) = (c("F(3,1)"), c("F"));
    let mut q = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_board_rook_poly(board.as_ptr(), fam.as_ptr(), 1, &mut q) },
        FibrookStatus::NotFerrers
    );
    assert!(q.is_null());
    assert_eq!(
        unsafe { fibrook_weight_poly(ptr::null(), 3, &mut q) },
        FibrookStatus::NullPointer
    );
    let fam = c("F");
    assert_eq!(
        unsafe { fibrook_weight_poly(fam.as_ptr(), 3, ptr::null_mut()) },
        FibrookStatus::NullPointer
    );
    assert_eq!(
        unsafe { fibrook_weight_poly(fam.as_ptr(), 3, &mut q) },
        FibrookStatus::Ok
    );
    assert_eq!(last_error(), "");
    unsafe {
        fibrook_poly_free(q);
        fibrook_poly_free(ptr::null_mut());
        fibrook_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_and_sequences() {
    let suite = c("inverse");
    let mut passed = false;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { fibrook_verify(suite.as_ptr(), true, &mut passed, &mut report) },
        FibrookStatus::Ok
    );
    assert!(passed);
    let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));

    let mut values = ptr::null_mut();
    let mut matches = 0;
    let name = c("A086602");
    assert_eq!(
        unsafe { fibrook_sequence(name.as_ptr(), &mut values, &mut matches) },
        FibrookStatus::Ok
    );
    assert_eq!(take_string(values), "2,12,39,95,195,357,602,954");
    assert_eq!(matches, 1);
    let name = c("A006002");
    assert_eq!(
        unsafe { fibrook_sequence(name.as_ptr(), &mut values, &mut matches) },
        FibrookStatus::Ok
    );
    assert!(take_string(values).starts_with("2,9,24,50,90,147"));
    assert_eq!(matches, 0);
}
