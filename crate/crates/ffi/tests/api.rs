use std::ffi::{CStr, CString};
use std::ptr;

use dualbraid_ffi::*;

fn parse(n: u32, text: &str) -> *mut DbBraid {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { db_braid_parse(n, c.as_ptr(), &mut out) },
        DbStatus::Ok
    );
    out
}

fn text(b: *const DbBraid) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { db_braid_to_string(b, &mut s) }, DbStatus::Ok);
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { db_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(db_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn parse_print_and_shape() {
    let x = parse(13, "e^3");
    assert_eq!(text(x), "d^3 · [4,3,2,1]");
    let (mut n, mut inf, mut len) = (0u32, 0i64, 0usize);
    assert_eq!(
        unsafe { db_braid_shape(x, &mut n, &mut inf, &mut len) },
        DbStatus::Ok
    );
    assert_eq!((n, inf, len), (13, 3, 1));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { db_braid_to_json(x, &mut json) }, DbStatus::Ok);
    let v: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(v["inf"], 3);
    unsafe {
        db_string_free(json);
        db_braid_free(x);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("a(2,2)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { db_braid_parse(4, bad.as_ptr(), &mut out) },
        DbStatus::Parse
    );
    assert!(out.is_null());
    assert!(last_error().contains("equal indices"));
    assert_eq!(
        unsafe { db_braid_parse(4, ptr::null(), &mut out) },
        DbStatus::NullPointer
    );
    let (a, b) = (parse(4, "s1"), parse(5, "s1"));
    assert_eq!(
        unsafe { db_braid_multiply(a, b, &mut out) },
        DbStatus::StrandMismatch
    );
    let mut count = 0u64;
    assert_eq!(
        unsafe { db_count_sss(13, 5, &mut count) },
        DbStatus::InvalidArgument
    );
    let name = unsafe { CStr::from_ptr(db_status_name(DbStatus::Parse)) };
    assert_eq!(name.to_str().unwrap(), "parse error");
    unsafe {
        db_braid_free(a);
        db_braid_free(b);
        db_braid_free(ptr::null_mut());
    }
}

#[test]
fn arithmetic() {
    let x = parse(6, "[3,1] e^2 [3,1]^-1");
    let y = parse(6, "d^2 [5,3] [2,1]");
    let mut eq = false;
    assert_eq!(unsafe { db_braid_equal(x, y, &mut eq) }, DbStatus::Ok);
    assert!(eq);
    let (mut inv, mut prod) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(db_braid_inverse(x, &mut inv), DbStatus::Ok);
        assert_eq!(db_braid_multiply(x, inv, &mut prod), DbStatus::Ok);
    }
    assert_eq!(text(prod), "d^0");
    unsafe {
        for p in [x, y, inv, prod] {
            db_braid_free(p);
        }
    }
}

#[test]
fn conjugacy_search() {
    let x = parse(13, "(a(5,2) s7^-1 s3) e^3 (a(5,2) s7^-1 s3)^-1");
    let mut kind = DbPeriodicKind::NonPeriodic;
    let mut m = 0;
    assert_eq!(unsafe { db_classify(x, &mut kind, &mut m) }, DbStatus::Ok);
    assert_eq!((kind, m), (DbPeriodicKind::EpsilonType, 3));
    let mut conj = false;
    let mut gamma = ptr::null_mut();
    assert_eq!(
        unsafe { db_solve_csp(x, 3, &mut conj, &mut gamma) },
        DbStatus::Ok
    );
    assert!(conj && !gamma.is_null());
    let (mut y, mut e3) = (ptr::null_mut(), ptr::null_mut());
    let mut eq = false;
    unsafe {
        assert_eq!(db_braid_conjugate(x, gamma, &mut y), DbStatus::Ok);
        assert_eq!(db_braid_epsilon_power(13, 3, &mut e3), DbStatus::Ok);
        assert_eq!(db_braid_equal(y, e3, &mut eq), DbStatus::Ok);
    }
    assert!(eq);
    let mut gamma2 = ptr::null_mut();
    assert_eq!(
        unsafe { db_solve_csp(x, 4, &mut conj, &mut gamma2) },
        DbStatus::Ok
    );
    assert!(!conj && gamma2.is_null());
    assert!(last_error().contains("exponent"));
    let mut d = ptr::null_mut();
    unsafe {
        assert_eq!(db_braid_delta_power(13, 5, &mut d), DbStatus::Ok);
        assert_eq!(
            db_solve_csp_delta(d, 5, &mut conj, &mut gamma2),
            DbStatus::Ok
        );
        assert!(conj);
        for p in [x, gamma, y, e3, d, gamma2] {
            db_braid_free(p);
        }
    }
}

#[test]
fn tables() {
    let mut count = 0u64;
    assert_eq!(unsafe { db_count_sss(13, 3, &mut count) }, DbStatus::Ok);
    assert_eq!(count, 286);
    let mut z = 0u64;
    assert_eq!(unsafe { db_zeta(3, 4, &mut z) }, DbStatus::Ok);
    assert_eq!(z, 22);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { db_sss_enumerate(7, 3, &mut t) }, DbStatus::Ok);
    let mut len = 0usize;
    assert_eq!(unsafe { db_table_len(t, &mut len) }, DbStatus::Ok);
    assert_eq!(len, 35);
    for i in 0..len {
        let mut x = ptr::null_mut();
        let mut member = false;
        unsafe {
            assert_eq!(db_table_get(t, i, &mut x), DbStatus::Ok);
            assert_eq!(db_verify_membership(x, 7, 3, &mut member), DbStatus::Ok);
            db_braid_free(x);
        }
        assert!(member);
    }
    let mut x = ptr::null_mut();
    assert_eq!(
        unsafe { db_table_get(t, len, &mut x) },
        DbStatus::OutOfRange
    );
    unsafe { db_table_free(t) };
}
