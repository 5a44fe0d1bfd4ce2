//! C interface to `fibrook`.
//!
//! Polynomials and triangles are opaque handles owned by the caller and
//! released with their `_free` function. Strings returned through `char **`
//! are released with [`fibrook_string_free`]. Every fallible call returns a
//! [`FibrookStatus`]; on failure [`fibrook_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fibrook::board::{file_poly, rook_poly, FerrersBoard, Mode};
use fibrook::identities::{join, sequence_export, SequenceMatch};
use fibrook::stirling::{build_triangle, CoeffTriangle, Kind};
use fibrook::tiling::{weight_poly, TileFamily};
use fibrook::verify::{run_suite, Bounds, Suite};
use fibrook::{Error, PQRPoly};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibrookStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotFerrers = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// Opaque polynomial in `p`, `q`, `r` with integer coefficients.
pub struct FibrookPoly(PQRPoly);

/// Opaque coefficient triangle.
pub struct FibrookTriangle(CoeffTriangle);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FibrookStatus {
    match e {
        Error::Parse { .. } => FibrookStatus::ParseError,
        Error::NotFerrers(_) => FibrookStatus::NotFerrers,
        _ => FibrookStatus::InvalidArgument,
    }
}

struct Fail(FibrookStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FibrookStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FibrookStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FibrookStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(FibrookStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(FibrookStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            FibrookStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            FibrookStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(FibrookStatus::NullPointer, format!("{what} is null")))
}

/// Message for the most recent failed call on this thread, or an empty
/// string. Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn fibrook_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fibrook_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fibrook_poly_free(p: *mut FibrookPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `t` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fibrook_triangle_free(t: *mut FibrookTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Weight polynomial of all tilings of height `n`. `family` is `"F"` or
/// `"P"`.
///
/// # Safety
/// `family` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_weight_poly(
    family: *const c_char,
    n: u32,
    out: *mut *mut FibrookPoly,
) -> FibrookStatus {
    guard(|| {
        let fam: TileFamily = text(family, "family")?.parse()?;
        put(out, FibrookPoly(weight_poly(&fam, n)))
    })
}

/// Canonical text form such as `"p*q^4 + q^6"`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_poly_to_string(
    p: *const FibrookPoly,
    out: *mut *mut c_char,
) -> FibrookStatus {
    guard(|| put_string(out, deref(p, "poly")?.0.to_string()))
}

/// Value at integer `(q, p, r)` as a decimal string.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_poly_eval(
    poly: *const FibrookPoly,
    q: i64,
    p: i64,
    r: i64,
    out: *mut *mut c_char,
) -> FibrookStatus {
    guard(|| put_string(out, deref(poly, "poly")?.0.eval_int(q, p, r).to_string()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_poly_equal(
    a: *const FibrookPoly,
    b: *const FibrookPoly,
    out: *mut bool,
) -> FibrookStatus {
    guard(|| {
        let eq = deref(a, "a")?.0 == deref(b, "b")?.0;
        if out.is_null() {
            return Err(Fail(
                FibrookStatus::NullPointer,
                "output pointer is null".into(),
            ));
        }
        *out = eq;
        Ok(())
    })
}

/// Builds a triangle by recursion. `kind` is one of `cf`, `sf`, `Sf`, `Lf`,
/// `cp`, `sp`, `Sp` (case-sensitive).
///
/// # Safety
/// `kind` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_triangle_build(
    kind: *const c_char,
    n_max: usize,
    out: *mut *mut FibrookTriangle,
) -> FibrookStatus {
    guard(|| {
        let kind: Kind = text(kind, "kind")?.parse()?;
        if n_max > 200 {
            return Err(Fail(
                FibrookStatus::OutOfRange,
                format!("n_max {n_max} > 200"),
            ));
        }
        put(out, FibrookTriangle(build_triangle(kind, n_max)))
    })
}

/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fibrook_triangle_n_max(t: *const FibrookTriangle) -> usize {
    t.as_ref().map_or(0, |t| t.0.n_max())
}

/// Copies entry `(n, k)` into a new polynomial handle.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_triangle_entry(
    t: *const FibrookTriangle,
    n: usize,
    k: usize,
    out: *mut *mut FibrookPoly,
) -> FibrookStatus {
    guard(|| {
        let t = deref(t, "triangle")?;
        if n > t.0.n_max() {
            return Err(Fail(
                FibrookStatus::OutOfRange,
                format!("row {n} beyond n_max {}", t.0.n_max()),
            ));
        }
        put(out, FibrookPoly(t.0.entry(n, k).clone()))
    })
}

/// `{"kind": ..., "N": ..., "entries": [[...], ...]}`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_triangle_json(
    t: *const FibrookTriangle,
    out: *mut *mut c_char,
) -> FibrookStatus {
    guard(|| put_string(out, deref(t, "triangle")?.0.to_json().to_string()))
}

unsafe fn board_args(
    board: *const c_char,
    family: *const c_char,
) -> Result<(FerrersBoard, TileFamily), Fail> {
    let b: FerrersBoard = text(board, "board")?.parse()?;
    let fam: TileFamily = text(family, "family")?.parse()?;
    Ok((b, fam))
}

/// `fT_k(B)` for a board such as `"F(2,3,4)"`.
///
/// # Safety
/// `board` and `family` must be nul-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_board_file_poly(
    board: *const c_char,
    family: *const c_char,
    k: usize,
    out: *mut *mut FibrookPoly,
) -> FibrookStatus {
    guard(|| {
        let (b, fam) = board_args(board, family)?;
        put(out, FibrookPoly(file_poly(&b, &fam, k, Mode::Recursion)))
    })
}

/// `rT_k(B)`; the board must be Ferrers.
///
/// # Safety
/// As for [`fibrook_board_file_poly`].
#[no_mangle]
pub unsafe extern "C" fn fibrook_board_rook_poly(
    board: *const c_char,
    family: *const c_char,
    k: usize,
    out: *mut *mut FibrookPoly,
) -> FibrookStatus {
    guard(|| {
        let (b, fam) = board_args(board, family)?;
        put(out, FibrookPoly(rook_poly(&b, &fam, k, Mode::Recursion)?))
    })
}

/// Runs a verification suite (`recursion-vs-enumeration`, `products`,
/// `inverse`, `involution`, `identities` or `all`). `passed` is set to false
/// when any check fails; the JSON report goes to `report`.
///
/// # Safety
/// `suite` must be a nul-terminated string; `passed` and `report` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_verify(
    suite: *const c_char,
    quick: bool,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> FibrookStatus {
    guard(|| {
        let suite: Suite = text(suite, "suite")?.parse()?;
        if passed.is_null() {
            return Err(Fail(FibrookStatus::NullPointer, "passed is null".into()));
        }
        let bounds = if quick {
            Bounds::quick()
        } else {
            Bounds::default()
        };
        let reports = run_suite(suite, &bounds);
        *passed = !reports.iter().any(|r| r.is_fail());
        put_string(
            report,
            serde_json::to_string(&reports).expect("reports serialize"),
        )
    })
}

/// Regenerates a bundled sequence. `values` receives the comma-separated
/// terms; `matches` is 1 for an exact match, 0 when the fixture only omits
/// terms, -1 on a mismatch.
///
/// # Safety
/// `name` must be a nul-terminated string; `values` and `matches` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fibrook_sequence(
    name: *const c_char,
    values: *mut *mut c_char,
    matches: *mut i32,
) -> FibrookStatus {
    guard(|| {
        let e = sequence_export(text(name, "name")?)?;
        if matches.is_null() {
            return Err(Fail(FibrookStatus::NullPointer, "matches is null".into()));
        }
        *matches = match e.outcome {
            SequenceMatch::Match => 1,
            SequenceMatch::Omitted(_) => 0,
            SequenceMatch::Mismatch => -1,
        };
        put_string(values, join(&e.generated))
    })
}
