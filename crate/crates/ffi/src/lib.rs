//! C ABI over `dualbraid`.
//!
//! Braids and super summit tables are opaque heap handles released with
//! their `*_free` function. Every fallible call returns a [`DbStatus`];
//! results go through out-pointers, which are left untouched on failure.
//! The message of the last failure on the calling thread is available from
//! [`db_last_error`]. Strings returned by the library are released with
//! [`db_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dualbraid::enumerate::{count_sss, enumerate_sss, verify_membership, SssTable};
use dualbraid::ncp::zeta;
use dualbraid::periodic::{classify_periodic, solve_csp, solve_csp_delta, PeriodicClass, Verdict};
use dualbraid::{normalize, parse_word, Error, NormalForm};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    StrandMismatch = 5,
    BoundExceeded = 6,
    OutOfRange = 7,
    Internal = 8,
    Panic = 9,
}

/// Periodic type reported by [`db_classify`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbPeriodicKind {
    DeltaType = 0,
    EpsilonType = 1,
    Central = 2,
    NonPeriodic = 3,
}

/// A braid in left normal form.
pub struct DbBraid(NormalForm);

/// A canonically sorted super summit set of `ε^d`.
pub struct DbTable(SssTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(status: DbStatus, msg: impl Into<String>) -> DbStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> DbStatus {
    match e {
        Error::Parse { .. }
        | Error::IndexOutOfRange { .. }
        | Error::EqualIndices(_)
        | Error::NotDecreasing(_) => DbStatus::Parse,
        Error::StrandMismatch(..) => DbStatus::StrandMismatch,
        Error::BoundExceeded { .. } | Error::Overflow(_) => DbStatus::BoundExceeded,
        Error::Internal(_) | Error::IterationCap(_) => DbStatus::Internal,
        _ => DbStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), DbStatus>) -> DbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(DbStatus::Panic, "panic inside dualbraid"),
    }
}

fn lib<T>(r: dualbraid::Result<T>) -> Result<T, DbStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, DbStatus> {
    p.as_ref()
        .ok_or_else(|| fail(DbStatus::NullPointer, "null pointer argument"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), DbStatus> {
    if out.is_null() {
        return Err(fail(DbStatus::NullPointer, "null output pointer"));
    }
    out.write(v);
    Ok(())
}

fn new_braid(x: NormalForm) -> *mut DbBraid {
    Box::into_raw(Box::new(DbBraid(x)))
}

fn to_c_string(s: String) -> Result<*mut c_char, DbStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(DbStatus::Internal, "string contains NUL"))
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn db_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn db_status_name(status: DbStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DbStatus::Ok => c"ok",
        DbStatus::NullPointer => c"null pointer",
        DbStatus::InvalidUtf8 => c"invalid UTF-8",
        DbStatus::Parse => c"parse error",
        DbStatus::InvalidArgument => c"invalid argument",
        DbStatus::StrandMismatch => c"strand counts differ",
        DbStatus::BoundExceeded => c"bound exceeded",
        DbStatus::OutOfRange => c"index out of range",
        DbStatus::Internal => c"internal invariant failure",
        DbStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Parses `text` as a braid word on `n` strands and normalizes it.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_parse(
    n: u32,
    text: *const c_char,
    out: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(DbStatus::NullPointer, "null word"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(DbStatus::InvalidUtf8, "word is not UTF-8"))?;
        let w = lib(parse_word(s, n as usize))?;
        write(out, new_braid(normalize(&w)))
    })
}

/// `δ^k` on `n` strands.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_delta_power(n: u32, k: i64, out: *mut *mut DbBraid) -> DbStatus {
    guard(|| {
        if n == 0 || n as usize > dualbraid::MAX_STRANDS {
            return Err(fail(
                DbStatus::InvalidArgument,
                format!("unsupported strand count {n}"),
            ));
        }
        write(out, new_braid(NormalForm::delta_power(n as usize, k)))
    })
}

/// `ε^k` on `n` strands.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_epsilon_power(
    n: u32,
    k: i64,
    out: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        if n == 0 || n as usize > dualbraid::MAX_STRANDS {
            return Err(fail(
                DbStatus::InvalidArgument,
                format!("unsupported strand count {n}"),
            ));
        }
        write(out, new_braid(NormalForm::epsilon_power(n as usize, k)))
    })
}

/// Releases a braid; null is ignored.
///
/// # Safety
/// `b` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn db_braid_free(b: *mut DbBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// # Safety
/// `b` must be a valid braid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_clone(b: *const DbBraid, out: *mut *mut DbBraid) -> DbStatus {
    guard(|| write(out, new_braid(deref(b)?.0.clone())))
}

/// `a · b`.
///
/// # Safety
/// `a`, `b` must be valid braids; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_multiply(
    a: *const DbBraid,
    b: *const DbBraid,
    out: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        let (a, b) = (deref(a)?, deref(b)?);
        if a.0.n() != b.0.n() {
            return Err(fail(
                DbStatus::StrandMismatch,
                format!("{} vs {} strands", a.0.n(), b.0.n()),
            ));
        }
        write(out, new_braid(a.0.multiply(&b.0)))
    })
}

/// # Safety
/// `b` must be a valid braid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_inverse(b: *const DbBraid, out: *mut *mut DbBraid) -> DbStatus {
    guard(|| write(out, new_braid(deref(b)?.0.inverse())))
}

/// `g⁻¹ · b · g`.
///
/// # Safety
/// `b`, `g` must be valid braids; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_conjugate(
    b: *const DbBraid,
    g: *const DbBraid,
    out: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        let (b, g) = (deref(b)?, deref(g)?);
        if b.0.n() != g.0.n() {
            return Err(fail(
                DbStatus::StrandMismatch,
                format!("{} vs {} strands", b.0.n(), g.0.n()),
            ));
        }
        write(out, new_braid(b.0.conjugate_by(&g.0)))
    })
}

/// # Safety
/// `a`, `b` must be valid braids; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_equal(
    a: *const DbBraid,
    b: *const DbBraid,
    out: *mut bool,
) -> DbStatus {
    guard(|| write(out, deref(a)?.0 == deref(b)?.0))
}

/// Strand count, infimum and canonical length.
///
/// # Safety
/// `b` must be a valid braid; each out-pointer may be null to skip it.
#[no_mangle]
pub unsafe extern "C" fn db_braid_shape(
    b: *const DbBraid,
    n: *mut u32,
    inf: *mut i64,
    len: *mut usize,
) -> DbStatus {
    guard(|| {
        let x = &deref(b)?.0;
        if !n.is_null() {
            n.write(x.n() as u32);
        }
        if !inf.is_null() {
            inf.write(x.inf());
        }
        if !len.is_null() {
            len.write(x.len());
        }
        Ok(())
    })
}

/// Text form `d^r · [..] · …`; release with [`db_string_free`].
///
/// # Safety
/// `b` must be a valid braid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_to_string(b: *const DbBraid, out: *mut *mut c_char) -> DbStatus {
    guard(|| write(out, to_c_string(deref(b)?.0.to_string())?))
}

/// JSON form `{"n":…,"inf":…,"factors":[…]}`; release with [`db_string_free`].
///
/// # Safety
/// `b` must be a valid braid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_braid_to_json(b: *const DbBraid, out: *mut *mut c_char) -> DbStatus {
    guard(|| {
        let text = serde_json::to_string(&deref(b)?.0)
            .map_err(|e| fail(DbStatus::Internal, e.to_string()))?;
        write(out, to_c_string(text)?)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn db_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Periodic type and its power (0 for non-periodic).
///
/// # Safety
/// `b` must be a valid braid; `kind` and `m` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_classify(
    b: *const DbBraid,
    kind: *mut DbPeriodicKind,
    m: *mut i64,
) -> DbStatus {
    guard(|| {
        let (k, p) = match classify_periodic(&deref(b)?.0) {
            PeriodicClass::DeltaType(p) => (DbPeriodicKind::DeltaType, p),
            PeriodicClass::EpsilonType(p) => (DbPeriodicKind::EpsilonType, p),
            PeriodicClass::Central(p) => (DbPeriodicKind::Central, p),
            PeriodicClass::NonPeriodic => (DbPeriodicKind::NonPeriodic, 0),
        };
        write(kind, k)?;
        write(m, p)
    })
}

unsafe fn report(
    verdict: Verdict,
    conjugate: *mut bool,
    gamma: *mut *mut DbBraid,
) -> Result<(), DbStatus> {
    match verdict {
        Verdict::Conjugate(c) if c.verified => {
            write(conjugate, true)?;
            write(gamma, new_braid(c.gamma))
        }
        Verdict::Conjugate(_) => Err(fail(DbStatus::Internal, "conjugator failed verification")),
        Verdict::NotConjugate(v) => {
            set_error(v.reason);
            write(conjugate, false)?;
            write(gamma, ptr::null_mut())
        }
    }
}

/// Searches `γ` with `γ⁻¹ b γ = ε^k`. On success `*conjugate` tells whether
/// one exists and `*gamma` receives it (null otherwise; the reason is then
/// in [`db_last_error`]).
///
/// # Safety
/// `b` must be a valid braid; `conjugate` and `gamma` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_solve_csp(
    b: *const DbBraid,
    k: i64,
    conjugate: *mut bool,
    gamma: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        let v = lib(solve_csp(&deref(b)?.0, k))?;
        report(v, conjugate, gamma)
    })
}

/// As [`db_solve_csp`] with target `δ^k`.
///
/// # Safety
/// As [`db_solve_csp`].
#[no_mangle]
pub unsafe extern "C" fn db_solve_csp_delta(
    b: *const DbBraid,
    k: i64,
    conjugate: *mut bool,
    gamma: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        let v = lib(solve_csp_delta(&deref(b)?.0, k))?;
        report(v, conjugate, gamma)
    })
}

/// Size of the super summit set of `ε^d` in `B_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_count_sss(n: u32, d: u32, out: *mut u64) -> DbStatus {
    guard(|| {
        let c = lib(count_sss(n as usize, d as usize))?;
        let c =
            u64::try_from(c).map_err(|_| fail(DbStatus::BoundExceeded, "count exceeds 64 bits"))?;
        write(out, c)
    })
}

/// Number of multichains of length `r` in the noncrossing partitions of `d` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_zeta(d: u64, r: u64, out: *mut u64) -> DbStatus {
    guard(|| {
        let z = lib(zeta(d, r))?;
        let z =
            u64::try_from(z).map_err(|_| fail(DbStatus::BoundExceeded, "value exceeds 64 bits"))?;
        write(out, z)
    })
}

/// Whether `b` lies in the super summit set of `ε^d` in `B_n`.
///
/// # Safety
/// `b` must be a valid braid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_verify_membership(
    b: *const DbBraid,
    n: u32,
    d: u32,
    out: *mut bool,
) -> DbStatus {
    guard(|| write(out, verify_membership(&deref(b)?.0, n as usize, d as usize)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_sss_enumerate(n: u32, d: u32, out: *mut *mut DbTable) -> DbStatus {
    guard(|| {
        let t = lib(enumerate_sss(n as usize, d as usize))?;
        write(out, Box::into_raw(Box::new(DbTable(t))))
    })
}

/// # Safety
/// `t` must be a valid table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_len(t: *const DbTable, out: *mut usize) -> DbStatus {
    guard(|| write(out, deref(t)?.0.len()))
}

/// Copy of the `i`-th element in canonical order.
///
/// # Safety
/// `t` must be a valid table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_get(
    t: *const DbTable,
    i: usize,
    out: *mut *mut DbBraid,
) -> DbStatus {
    guard(|| {
        let t = deref(t)?;
        let x = t.0.elements.get(i).ok_or_else(|| {
            fail(
                DbStatus::OutOfRange,
                format!("index {i} out of range for {} elements", t.0.len()),
            )
        })?;
        write(out, new_braid(x.clone()))
    })
}

/// # Safety
/// `t` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn db_table_free(t: *mut DbTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}
