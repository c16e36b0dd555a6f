//! C ABI over `smm-core`.
//!
//! Every function returns an [`SmmStatus`]; outputs go through pointer
//! arguments. Handles are opaque and owned by the caller once returned, and
//! strings handed out must be released with [`smm_string_free`]. After a
//! failing call, [`smm_last_error`] describes the failure on that thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use smm_core::cli::{instance_suite, parse_instance};
use smm_core::finmon::{check_axioms, instance_universe, is_trivial};
use smm_core::term::{parse_word, prove_equal, Budget, Derivation, Presentation, ProofOutcome, RuleSet};
use smm_core::SmmError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmmStatus {
    Ok = 0,
    /// A check found violations or a derivation was rejected.
    CheckFailed = 1,
    /// The prover ran out of budget.
    Unknown = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Parse = 5,
    InvalidInput = 6,
    OutOfRange = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmmPresentation {
    MuDelta = 0,
    Gamma = 1,
}

/// A validated instance.
pub struct SmmInstance(smm_core::finmon::SmmInstance);

/// The result of an enumeration.
pub struct SmmInstanceList(Vec<smm_core::finmon::SmmInstance>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(SmmStatus, String);

impl From<SmmError> for Fail {
    fn from(e: SmmError) -> Self {
        let status = match e {
            SmmError::Parse { .. } | SmmError::Derivation { .. } => SmmStatus::Parse,
            SmmError::BoundExceeded { .. } => SmmStatus::OutOfRange,
            _ => SmmStatus::InvalidInput,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior NUL"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<SmmStatus, Fail>) -> SmmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            set_error(None);
            status
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            SmmStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SmmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(SmmStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

/// Message for the last failing call on this thread, or null. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn smm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn smm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates instance JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_from_json(json: *const c_char, out: *mut *mut SmmInstance) -> SmmStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let inst = parse_instance(text)?;
        put(out, Box::into_raw(Box::new(SmmInstance(inst))), "out")?;
        Ok(SmmStatus::Ok)
    })
}

/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_to_json(inst: *const SmmInstance, out: *mut *mut c_char) -> SmmStatus {
    guard(|| {
        let inst = handle(inst, "instance")?;
        put(out, c_string(inst.0.to_json().to_string()), "out")?;
        Ok(SmmStatus::Ok)
    })
}

/// # Safety
/// `inst` must be null or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_free(inst: *mut SmmInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Carrier size, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_size(inst: *const SmmInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.size())
}

/// Counts violated axioms; `SMM_STATUS_CHECK_FAILED` when there are any.
///
/// # Safety
/// `inst` must be a live handle; `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_check(
    inst: *const SmmInstance,
    presentation: SmmPresentation,
    violations: *mut usize,
) -> SmmStatus {
    guard(|| {
        let inst = handle(inst, "instance")?;
        let p = match presentation {
            SmmPresentation::MuDelta => Presentation::MuDelta,
            SmmPresentation::Gamma => Presentation::Gamma,
        };
        let n = check_axioms(&inst.0, p).len();
        put(violations, n, "violations")?;
        Ok(if n == 0 { SmmStatus::Ok } else { SmmStatus::CheckFailed })
    })
}

/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_is_trivial(inst: *const SmmInstance, out: *mut bool) -> SmmStatus {
    guard(|| {
        let inst = handle(inst, "instance")?;
        put(out, is_trivial(&inst.0), "out")?;
        Ok(SmmStatus::Ok)
    })
}

/// Runs every check family and writes the per-family results as JSON.
///
/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_instance_suite_json(inst: *const SmmInstance, out: *mut *mut c_char) -> SmmStatus {
    guard(|| {
        let inst = handle(inst, "instance")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let families = instance_suite(&inst.0);
        let pass = families.iter().all(|f| f.pass);
        let json = serde_json::to_string(&families).map_err(|e| Fail(SmmStatus::InvalidInput, e.to_string()))?;
        put(out, c_string(json), "out")?;
        Ok(if pass { SmmStatus::Ok } else { SmmStatus::CheckFailed })
    })
}

/// Every SMM on monoids of size `1..=max`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_enumerate(max: usize, out: *mut *mut SmmInstanceList) -> SmmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let list = instance_universe(max)?;
        put(out, Box::into_raw(Box::new(SmmInstanceList(list))), "out")?;
        Ok(SmmStatus::Ok)
    })
}

/// Length of a list, or 0 for a null handle.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn smm_list_len(list: *const SmmInstanceList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copies entry `index` into a new instance handle.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_list_get(
    list: *const SmmInstanceList,
    index: usize,
    out: *mut *mut SmmInstance,
) -> SmmStatus {
    guard(|| {
        let list = handle(list, "list")?;
        let inst = list.0.get(index).ok_or_else(|| {
            Fail(
                SmmStatus::OutOfRange,
                format!("index {index} out of range for {} instances", list.0.len()),
            )
        })?;
        put(out, Box::into_raw(Box::new(SmmInstance(inst.clone()))), "out")?;
        Ok(SmmStatus::Ok)
    })
}

/// # Safety
/// `list` must be null or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn smm_list_free(list: *mut SmmInstanceList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Searches for a derivation of `lhs = rhs`. On success `derivation` gets
/// the derivation text; on `SMM_STATUS_UNKNOWN` it is set to null.
///
/// # Safety
/// `lhs` and `rhs` must be NUL-terminated strings; `derivation` must be writable.
#[no_mangle]
pub unsafe extern "C" fn smm_prove(
    lhs: *const c_char,
    rhs: *const c_char,
    max_depth: usize,
    max_states: usize,
    derivation: *mut *mut c_char,
) -> SmmStatus {
    guard(|| {
        let l = parse_word(str_arg(lhs, "lhs")?)?;
        let r = parse_word(str_arg(rhs, "rhs")?)?;
        if derivation.is_null() {
            return Err(null("derivation"));
        }
        let budget = Budget {
            max_depth,
            max_states,
            ..Budget::default()
        };
        match prove_equal(&l, &r, &RuleSet::mu_delta(), budget) {
            ProofOutcome::Proved { derivation: d, .. } => {
                put(derivation, c_string(d.to_text()), "derivation")?;
                Ok(SmmStatus::Ok)
            }
            ProofOutcome::Unknown { .. } => {
                put(derivation, ptr::null_mut(), "derivation")?;
                Ok(SmmStatus::Unknown)
            }
        }
    })
}

/// Replays derivation text; `SMM_STATUS_CHECK_FAILED` when a step fails.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn smm_verify(text: *const c_char) -> SmmStatus {
    guard(|| {
        let d = Derivation::parse(str_arg(text, "text")?)?;
        match d.check() {
            v if v.is_accept() => Ok(SmmStatus::Ok),
            v => Err(Fail(SmmStatus::CheckFailed, format!("{v:?}"))),
        }
    })
}
