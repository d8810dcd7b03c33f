//! C ABI for `isq`.
//!
//! Objects are opaque handles created by `isq_*_new`-style functions and
//! released with the matching `isq_*_free`. Every fallible function returns
//! an [`IsqStatus`] and writes its result through an out-pointer; on failure
//! [`isq_last_error`] describes the problem. Strings returned by the library
//! are freed with [`isq_string_free`].
//!
//! Handles are immutable once built and may be shared between threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use isq::congruence::is_simeq_congruence;
use isq::normal::{enumerate_normal, is_normal};
use isq::quotient::{build_quotient, leq_n, NQuotient};
use isq::suite::{paper_suite, SuiteOptions};
use isq::{builders, json, ElemSet, InverseSemigroup, IsqError};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    UnknownElement = 4,
    NotInverseSemigroup = 5,
    NotNormal = 6,
    NotInductive = 7,
    SizeLimit = 8,
    Failed = 9,
    Panic = 10,
}

/// A finite inverse semigroup.
pub struct IsqSemigroup(InverseSemigroup);

/// A subset of a semigroup's elements.
pub struct IsqSubset(ElemSet);

/// A quotient ordered groupoid `S⫽N`.
pub struct IsqQuotient(NQuotient);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &IsqError) -> IsqStatus {
    match e {
        IsqError::Parse(_) => IsqStatus::Parse,
        IsqError::UnknownElement { .. } => IsqStatus::UnknownElement,
        IsqError::NotInverseSemigroup(_) | IsqError::NotClosed(_) => IsqStatus::NotInverseSemigroup,
        IsqError::NotNormal => IsqStatus::NotNormal,
        IsqError::NotInductive => IsqStatus::NotInductive,
        IsqError::SizeLimit { .. } => IsqStatus::SizeLimit,
        IsqError::Internal(_) => IsqStatus::Failed,
        _ => IsqStatus::InvalidInput,
    }
}

/// Run `f`, mapping errors and panics to a status.
fn guard(f: impl FnOnce() -> Result<(), (IsqStatus, String)>) -> IsqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IsqStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside isq");
            IsqStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (IsqStatus, String)>;
}

impl<T> IntoFfi<T> for Result<T, IsqError> {
    fn ffi(self) -> Result<T, (IsqStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (IsqStatus, String)> {
    p.as_ref()
        .ok_or((IsqStatus::NullPointer, "null handle".to_string()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (IsqStatus, String)> {
    if out.is_null() {
        return Err((IsqStatus::NullPointer, "null out-pointer".to_string()));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (IsqStatus, String)> {
    if p.is_null() {
        return Err((IsqStatus::NullPointer, "null string".to_string()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (IsqStatus::Parse, "string is not UTF-8".to_string()))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("json has no interior nul")
        .into_raw()
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn isq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn isq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Free a string returned by the library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn isq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse semigroup JSON (`pbij` or `table` kind).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_from_json(
    json: *const c_char,
    out: *mut *mut IsqSemigroup,
) -> IsqStatus {
    guard(|| {
        let s = json::parse_semigroup(text(json)?).ffi()?;
        write(out, boxed(IsqSemigroup(s)))
    })
}

/// The symmetric inverse monoid of degree `n` (1 to 5).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_symmetric(
    n: usize,
    out: *mut *mut IsqSemigroup,
) -> IsqStatus {
    guard(|| {
        let s = builders::symmetric_inverse_monoid(n).ffi()?;
        write(out, boxed(IsqSemigroup(s)))
    })
}

/// The six-element example inside `I_4`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_example_s6(out: *mut *mut IsqSemigroup) -> IsqStatus {
    guard(|| write(out, boxed(IsqSemigroup(builders::example_s6()))))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_free(s: *mut IsqSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_size(s: *const IsqSemigroup, out: *mut usize) -> IsqStatus {
    guard(|| write(out, deref(s)?.0.len()))
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_mul(
    s: *const IsqSemigroup,
    a: usize,
    b: usize,
    out: *mut usize,
) -> IsqStatus {
    guard(|| {
        let s = &deref(s)?.0;
        s.check(a).ffi()?;
        s.check(b).ffi()?;
        write(out, s.mul(a, b))
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_inv(
    s: *const IsqSemigroup,
    a: usize,
    out: *mut usize,
) -> IsqStatus {
    guard(|| {
        let s = &deref(s)?.0;
        s.check(a).ffi()?;
        write(out, s.inv(a))
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_is_idempotent(
    s: *const IsqSemigroup,
    a: usize,
    out: *mut bool,
) -> IsqStatus {
    guard(|| {
        let s = &deref(s)?.0;
        s.check(a).ffi()?;
        write(out, s.is_idempotent(a))
    })
}

/// Semigroup JSON; free with [`isq_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_semigroup_to_json(
    s: *const IsqSemigroup,
    out: *mut *mut c_char,
) -> IsqStatus {
    guard(|| write(out, c_string(json::semigroup_to_json(&deref(s)?.0))))
}

/// Subset of `s` from `len` element ids.
///
/// # Safety
/// `s` must be a live handle, `ids` must point to `len` values (or be null
/// with `len == 0`), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_subset_new(
    s: *const IsqSemigroup,
    ids: *const usize,
    len: usize,
    out: *mut *mut IsqSubset,
) -> IsqStatus {
    guard(|| {
        let s = &deref(s)?.0;
        let ids: &[usize] = if len == 0 {
            &[]
        } else if ids.is_null() {
            return Err((IsqStatus::NullPointer, "null id array".to_string()));
        } else {
            std::slice::from_raw_parts(ids, len)
        };
        let set = json::subset_from_indices(s, ids).ffi()?;
        write(out, boxed(IsqSubset(set)))
    })
}

/// The whole semigroup as a subset.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_subset_full(
    s: *const IsqSemigroup,
    out: *mut *mut IsqSubset,
) -> IsqStatus {
    guard(|| write(out, boxed(IsqSubset(ElemSet::full(deref(s)?.0.len())))))
}

/// The idempotents of `s`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_subset_idempotents(
    s: *const IsqSemigroup,
    out: *mut *mut IsqSubset,
) -> IsqStatus {
    guard(|| write(out, boxed(IsqSubset(deref(s)?.0.idempotent_set()))))
}

/// # Safety
/// `n` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn isq_subset_free(n: *mut IsqSubset) {
    if !n.is_null() {
        drop(Box::from_raw(n));
    }
}

fn same_universe(s: &InverseSemigroup, n: &ElemSet) -> Result<(), (IsqStatus, String)> {
    if n.universe() == s.len() {
        Ok(())
    } else {
        Err((
            IsqStatus::InvalidInput,
            "subset belongs to a different semigroup".to_string(),
        ))
    }
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_is_normal(
    s: *const IsqSemigroup,
    n: *const IsqSubset,
    out: *mut bool,
) -> IsqStatus {
    guard(|| {
        let (s, n) = (&deref(s)?.0, &deref(n)?.0);
        same_universe(s, n)?;
        write(out, is_normal(s, n))
    })
}

/// Every normal inverse subsemigroup as JSON
/// `{"members":[[ids],..],"inclusions":[[i,j],..]}`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_enumerate_normal_json(
    s: *const IsqSemigroup,
    out: *mut *mut c_char,
) -> IsqStatus {
    guard(|| {
        let lattice = enumerate_normal(&deref(s)?.0).ffi()?;
        let members: Vec<Vec<usize>> = lattice.members.iter().map(ElemSet::to_vec).collect();
        let v = serde_json::json!({ "members": members, "inclusions": lattice.hasse_edges() });
        write(out, c_string(v.to_string()))
    })
}

/// `x ≤_N t`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_leq_n(
    s: *const IsqSemigroup,
    n: *const IsqSubset,
    x: usize,
    t: usize,
    out: *mut bool,
) -> IsqStatus {
    guard(|| {
        let (s, n) = (&deref(s)?.0, &deref(n)?.0);
        same_universe(s, n)?;
        s.check(x).ffi()?;
        s.check(t).ffi()?;
        write(out, leq_n(s, n, x, t).ffi()?)
    })
}

/// Whether `≃_N` is a congruence.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_is_simeq_congruence(
    s: *const IsqSemigroup,
    n: *const IsqSubset,
    out: *mut bool,
) -> IsqStatus {
    guard(|| {
        let (s, n) = (&deref(s)?.0, &deref(n)?.0);
        same_universe(s, n)?;
        write(out, is_simeq_congruence(s, n).ffi()?)
    })
}

/// Build `S⫽N`. Fails with `NOT_NORMAL` if `n` is not normal.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_build(
    s: *const IsqSemigroup,
    n: *const IsqSubset,
    out: *mut *mut IsqQuotient,
) -> IsqStatus {
    guard(|| {
        let (s, n) = (&deref(s)?.0, &deref(n)?.0);
        same_universe(s, n)?;
        let q = build_quotient(s, n).ffi()?;
        write(out, boxed(IsqQuotient(q)))
    })
}

/// # Safety
/// `q` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_free(q: *mut IsqQuotient) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_num_classes(
    q: *const IsqQuotient,
    out: *mut usize,
) -> IsqStatus {
    guard(|| write(out, deref(q)?.0.num_classes()))
}

/// Groupoid element (class index) containing semigroup element `x`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_class_of(
    q: *const IsqQuotient,
    x: usize,
    out: *mut usize,
) -> IsqStatus {
    guard(|| {
        let q = &deref(q)?.0;
        if x >= q.classes.len() {
            return Err((IsqStatus::UnknownElement, format!("unknown element id {x}")));
        }
        write(out, q.class_of(x))
    })
}

fn check_class(q: &NQuotient, c: usize) -> Result<(), (IsqStatus, String)> {
    if c < q.num_classes() {
        Ok(())
    } else {
        Err((IsqStatus::UnknownElement, format!("unknown class {c}")))
    }
}

/// Composite of classes `c` and `d`. `defined` is false (and `out` left
/// untouched) when the range of `c` is not the domain of `d`.
///
/// # Safety
/// `q` must be a live handle; `out` and `defined` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_compose(
    q: *const IsqQuotient,
    c: usize,
    d: usize,
    out: *mut usize,
    defined: *mut bool,
) -> IsqStatus {
    guard(|| {
        let q = &deref(q)?.0;
        check_class(q, c)?;
        check_class(q, d)?;
        if out.is_null() {
            return Err((IsqStatus::NullPointer, "null out-pointer".to_string()));
        }
        match q.groupoid.compose(c, d) {
            Some(x) => {
                write(out, x)?;
                write(defined, true)
            }
            None => write(defined, false),
        }
    })
}

/// Class order `c ≤ d`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_leq(
    q: *const IsqQuotient,
    c: usize,
    d: usize,
    out: *mut bool,
) -> IsqStatus {
    guard(|| {
        let q = &deref(q)?.0;
        check_class(q, c)?;
        check_class(q, d)?;
        write(out, q.class_leq(c, d))
    })
}

/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_is_inductive(
    q: *const IsqQuotient,
    out: *mut bool,
) -> IsqStatus {
    guard(|| write(out, deref(q)?.0.is_inductive()))
}

/// Ordered groupoid JSON with classes and witnesses.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_quotient_to_json(
    q: *const IsqQuotient,
    out: *mut *mut c_char,
) -> IsqStatus {
    guard(|| {
        let v = serde_json::to_string(&deref(q)?.0.to_json())
            .map_err(|e| (IsqStatus::Failed, e.to_string()))?;
        write(out, c_string(v))
    })
}

/// Run every worked example and property suite. `passed` is set to the
/// overall verdict; the status is `OK` even when a check fails.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isq_run_paper_suite(seed: u64, passed: *mut bool) -> IsqStatus {
    guard(|| {
        let r = paper_suite(SuiteOptions {
            seed,
            ..SuiteOptions::default()
        });
        write(passed, r.passed)
    })
}

/// Set the size cap for exhaustive algorithms; 0 restores the default.
#[no_mangle]
pub extern "C" fn isq_set_max_elements(limit: usize) {
    isq::limits::set_max_elements((limit > 0).then_some(limit));
}
