//! C ABI over the `bookx` library.
//!
//! Values cross the boundary as opaque `BxValue` handles owned by the caller
//! and released with `bx_value_free`. Every call returns a `BxStatus`; on
//! failure `bx_last_error_message` describes the error for the calling
//! thread. Strings returned through out-parameters are released with
//! `bx_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bookx::cli::verify::{verify_proposition, Proposition};
use bookx::ranks::rank;
use bookx::surd::{commensurable_length, commensurable_power, quad_arith, sqrt, to_float, Op};
use bookx::taxonomy::{classify, gen_apotome, gen_binomial, TaxonomyClass};
use bookx::{normalize, parse_expr, CanonicalValue, Error};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Opaque exact value.
pub struct BxValue(CanonicalValue);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    SyntaxError = 3,
    DivisionByZero = 4,
    NegativeRadicand = 5,
    NotRepresentable = 6,
    DomainError = 7,
    InvalidPair = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BxOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BxClass {
    RationalLength = 0,
    RationalPowerOnly = 1,
    Medial = 2,
    SimpleRank = 3,
    Binomial = 4,
    Apotome = 5,
    Unclassified = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BxProposition {
    X17 = 17,
    X21 = 21,
    X54 = 54,
    X115 = 115,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: BxStatus, msg: impl Into<String>) -> BxStatus {
    set_error(msg.into());
    status
}

fn status_of(e: Error) -> BxStatus {
    let status = match &e {
        Error::DivisionByZero => BxStatus::DivisionByZero,
        Error::NegativeRadicand => BxStatus::NegativeRadicand,
        Error::NotRepresentable(_) => BxStatus::NotRepresentable,
        Error::Domain(_) => BxStatus::DomainError,
        Error::InvalidPair(_) => BxStatus::InvalidPair,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> BxStatus) -> BxStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(BxStatus::Panic, "internal panic"))
}

unsafe fn value_ref<'a>(v: *const BxValue) -> Option<&'a CanonicalValue> {
    v.as_ref().map(|b| &b.0)
}

unsafe fn put_value(out: *mut *mut BxValue, v: CanonicalValue) -> BxStatus {
    *out = Box::into_raw(Box::new(BxValue(v)));
    BxStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> BxStatus {
    *out = CString::new(s).expect("no interior nul").into_raw();
    BxStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses and normalizes an expression such as `"sqrt(2 + sqrt(3))"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_value_parse(text: *const c_char, out: *mut *mut BxValue) -> BxStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(BxStatus::InvalidUtf8, "expression is not valid UTF-8");
        };
        let expr = match parse_expr(text) {
            Ok(e) => e,
            Err(e) => return fail(BxStatus::SyntaxError, e.to_string()),
        };
        match normalize(&expr) {
            Ok(v) => put_value(out, v),
            Err(e) => status_of(e),
        }
    })
}

/// The rational `num / den`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_value_from_ratio(num: i64, den: i64, out: *mut *mut BxValue) -> BxStatus {
    guard(|| {
        if out.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        if den == 0 {
            return status_of(Error::DivisionByZero);
        }
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        put_value(out, CanonicalValue::from_rational(q))
    })
}

/// # Safety
/// `v` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bx_value_free(v: *mut BxValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical form as a parseable expression string.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_value_to_string(v: *const BxValue, out: *mut *mut c_char) -> BxStatus {
    guard(|| match value_ref(v) {
        Some(v) if !out.is_null() => put_string(out, v.to_string()),
        _ => fail(BxStatus::NullPointer, "null argument"),
    })
}

/// Decimal rounded to `digits` significant digits.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_value_to_decimal(v: *const BxValue, digits: u32, out: *mut *mut c_char) -> BxStatus {
    guard(|| match value_ref(v) {
        Some(v) if !out.is_null() => put_string(out, to_float(v, digits).to_string()),
        _ => fail(BxStatus::NullPointer, "null argument"),
    })
}

/// Exact equality.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_value_equal(a: *const BxValue, b: *const BxValue, out: *mut bool) -> BxStatus {
    guard(|| match (value_ref(a), value_ref(b)) {
        (Some(a), Some(b)) if !out.is_null() => {
            *out = a == b;
            BxStatus::Ok
        }
        _ => fail(BxStatus::NullPointer, "null argument"),
    })
}

/// `a op b`, exactly.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_arith(a: *const BxValue, b: *const BxValue, op: BxOp, out: *mut *mut BxValue) -> BxStatus {
    guard(|| {
        let (Some(a), Some(b)) = (value_ref(a), value_ref(b)) else {
            return fail(BxStatus::NullPointer, "null argument");
        };
        if out.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        let op = match op {
            BxOp::Add => Op::Add,
            BxOp::Sub => Op::Sub,
            BxOp::Mul => Op::Mul,
            BxOp::Div => Op::Div,
        };
        match quad_arith(a, b, op) {
            Ok(v) => put_value(out, v),
            Err(e) => status_of(e),
        }
    })
}

/// Exact square root.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_sqrt(v: *const BxValue, out: *mut *mut BxValue) -> BxStatus {
    guard(|| match value_ref(v) {
        Some(v) if !out.is_null() => match sqrt(v) {
            Ok(r) => put_value(out, r),
            Err(e) => status_of(e),
        },
        _ => fail(BxStatus::NullPointer, "null argument"),
    })
}

/// Commensurability in length, or in square when `power` is true.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_commensurable(a: *const BxValue, b: *const BxValue, power: bool, out: *mut bool) -> BxStatus {
    guard(|| {
        let (Some(a), Some(b)) = (value_ref(a), value_ref(b)) else {
            return fail(BxStatus::NullPointer, "null argument");
        };
        if out.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        let r = if power { commensurable_power(a, b) } else { commensurable_length(a, b) };
        match r {
            Ok(c) => {
                *out = c;
                BxStatus::Ok
            }
            Err(e) => status_of(e),
        }
    })
}

/// Book X class of a positive value. `detail` receives the rank for simple
/// values and the species (1–6) for binomials and apotomes, 0 otherwise.
///
/// # Safety
/// `v` must be a live handle; `class_out` and `detail` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bx_classify(v: *const BxValue, class_out: *mut BxClass, detail: *mut u32) -> BxStatus {
    guard(|| {
        let Some(v) = value_ref(v) else {
            return fail(BxStatus::NullPointer, "null argument");
        };
        if class_out.is_null() || detail.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        let class = match classify(v) {
            Ok(c) => c,
            Err(e) => return status_of(e),
        };
        let (c, d) = match class {
            TaxonomyClass::RationalLength => (BxClass::RationalLength, 0),
            TaxonomyClass::RationalPowerOnly => (BxClass::RationalPowerOnly, 1),
            TaxonomyClass::SimpleRank { rank, medial: true } => (BxClass::Medial, rank),
            TaxonomyClass::SimpleRank { rank, .. } => (BxClass::SimpleRank, rank),
            TaxonomyClass::Binomial(k) => (BxClass::Binomial, k as u32),
            TaxonomyClass::Apotome(k) => (BxClass::Apotome, k as u32),
            TaxonomyClass::Unclassified => (BxClass::Unclassified, 0),
        };
        *class_out = c;
        *detail = d;
        BxStatus::Ok
    })
}

/// Rank of a positive single-term value.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_rank(v: *const BxValue, out: *mut u32) -> BxStatus {
    guard(|| match value_ref(v) {
        Some(v) if !out.is_null() => match rank(v) {
            Ok(r) => {
                *out = r;
                BxStatus::Ok
            }
            Err(e) => status_of(e),
        },
        _ => fail(BxStatus::NullPointer, "null argument"),
    })
}

/// Binomial (or apotome) of species `species` built from `n = n_num / n_den`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_gen_binomial(
    species: u8,
    n_num: i64,
    n_den: i64,
    apotome: bool,
    out: *mut *mut BxValue,
) -> BxStatus {
    guard(|| {
        if out.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        if n_den == 0 {
            return status_of(Error::DivisionByZero);
        }
        let n = BigRational::new(BigInt::from(n_num), BigInt::from(n_den));
        let pair = if apotome { gen_apotome(species, &n) } else { gen_binomial(species, &n) };
        match pair {
            Ok(p) => put_value(out, p.value()),
            Err(e) => status_of(e),
        }
    })
}

/// Seeded check of a proposition; `passed` receives the number of passing
/// trials.
///
/// # Safety
/// `passed` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bx_verify(prop: BxProposition, trials: u32, seed: u64, passed: *mut u32) -> BxStatus {
    guard(|| {
        if passed.is_null() {
            return fail(BxStatus::NullPointer, "null argument");
        }
        let prop = match prop {
            BxProposition::X17 => Proposition::X17,
            BxProposition::X21 => Proposition::X21,
            BxProposition::X54 => Proposition::X54,
            BxProposition::X115 => Proposition::X115,
        };
        match verify_proposition(prop, trials, seed) {
            Ok(r) => {
                *passed = r.passed;
                BxStatus::Ok
            }
            Err(e) => status_of(e),
        }
    })
}
