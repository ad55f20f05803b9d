//! Calls the exported functions the way a C caller would.

use std::ffi::{CStr, CString};
use std::ptr;

use polya_gate_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut libc::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    pg_string_free(s);
    out
}

#[test]
fn check_reports_first_negative_alpha() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(pg_check(c("3/2;1,60").as_ptr(), 5, &mut v), PgStatus::Ok);
        assert_eq!(pg_verdict_kind(v), PgVerdictKind::FirstNegativeAlpha);
        assert_eq!(pg_verdict_index(v), 3);
        assert!(take(pg_verdict_alpha(v)).starts_with('-'));
        let json = take(pg_verdict_json(v));
        assert!(json.contains(r#""s0":"1/40""#), "{json}");
        pg_verdict_free(v);

        let mut v = ptr::null_mut();
        assert_eq!(pg_check(c("2;1,7").as_ptr(), 12, &mut v), PgStatus::Ok);
        assert_eq!(pg_verdict_kind(v), PgVerdictKind::StieltjesUpTo);
        assert_eq!(pg_verdict_index(v), 12);
        assert!(pg_verdict_alpha(v).is_null());
        pg_verdict_free(v);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(
            pg_check(c("1;0,2").as_ptr(), 12, &mut v),
            PgStatus::InvalidInput
        );
        assert!(v.is_null());
        assert!(!pg_last_error().is_null());
        assert_eq!(pg_check(ptr::null(), 12, &mut v), PgStatus::NullPointer);
        assert_eq!(
            pg_check(c("1;1,2").as_ptr(), 12, ptr::null_mut()),
            PgStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            pg_check(bad.as_ptr().cast(), 12, &mut v),
            PgStatus::InvalidUtf8
        );
        pg_verdict_free(ptr::null_mut());
        pg_string_free(ptr::null_mut());
    }
}

#[test]
fn threshold_and_signs() {
    unsafe {
        let mut t = ptr::null_mut();
        let st = pg_threshold(
            c("1").as_ptr(),
            c("1/2").as_ptr(),
            3,
            c("1").as_ptr(),
            c("100").as_ptr(),
            c("0.001").as_ptr(),
            &mut t,
        );
        assert_eq!(st, PgStatus::Ok);
        let lo: polya_gate::Rat = take(pg_threshold_lo(t)).parse().unwrap();
        let hi: polya_gate::Rat = take(pg_threshold_hi(t)).parse().unwrap();
        let reference: polya_gate::Rat = "52.4865".parse().unwrap();
        assert!(lo <= reference && reference <= hi);
        assert!(take(pg_threshold_json(t)).contains(r#""n":3"#));
        pg_threshold_free(t);

        let mut t = ptr::null_mut();
        let st = pg_threshold(
            c("1").as_ptr(),
            c("1/2").as_ptr(),
            3,
            c("60").as_ptr(),
            c("100").as_ptr(),
            c("1/1000").as_ptr(),
            &mut t,
        );
        assert_eq!(st, PgStatus::BadBracket);

        let mut sign = 0i8;
        let st = pg_alpha_sign(
            c("1").as_ptr(),
            c("5/2").as_ptr(),
            c("72053").as_ptr(),
            7,
            &mut sign,
        );
        assert_eq!(st, PgStatus::Ok);
        assert_eq!(sign, -1);
    }
}

#[test]
fn symbolic_rows() {
    unsafe {
        let mut m = 0;
        let mut json = ptr::null_mut();
        let st = pg_symbolic_check(5, c("3/2").as_ptr(), c("1").as_ptr(), &mut m, &mut json);
        assert_eq!(st, PgStatus::Ok);
        assert_eq!(m, 1);
        assert!(take(json).contains(r#""degree_actual":11"#));
        let st = pg_symbolic_check(3, c("1").as_ptr(), c("1").as_ptr(), &mut m, ptr::null_mut());
        assert_eq!(st, PgStatus::Ok);
        assert_eq!(m, 1);
        assert!(!CStr::from_ptr(pg_version()).to_bytes().is_empty());
    }
}
