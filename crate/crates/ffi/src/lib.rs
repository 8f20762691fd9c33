//! C ABI over `recgrow`.
//!
//! Every function returns a [`RecgrowStatus`]. On failure the message is
//! available from [`recgrow_last_error`] on the same thread. Handles are
//! opaque and released with their `_free` function; strings returned
//! through `char **` outputs are released with [`recgrow_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use recgrow::arith::rational::ratio;
use recgrow::bounds::{bound_constants, verify_bounds};
use recgrow::io::{self, DocFormat};
use recgrow::numfield::{
    check_nondegenerate_nf, eval_int_recurrence, product_sandwich, schmidt_zero_bound_log,
    verify_epsilon_inequality, EpsilonCheckConfig, IntRecurrence, NfNondegeneracy, SchmidtBoundInput,
};
use recgrow::recurrence::PowerSumSpec;
use recgrow::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecgrowStatus {
    Ok = 0,
    /// A checked inequality failed.
    Violation = 1,
    InvalidInput = 2,
    Degenerate = 3,
    /// Raise the precision and retry.
    Precision = 4,
    NullPointer = 5,
    Internal = 6,
}

/// A power sum sequence over `Q(x)`.
pub struct RecgrowSpec(PowerSumSpec);

/// An integer linear recurrence over `Q` with certified roots.
pub struct RecgrowIntRecurrence(IntRecurrence);

/// Summary of a bound scan.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RecgrowVerifySummary {
    pub rows: u64,
    pub violations: u64,
    pub zero_rows: u64,
    /// -1 when the last row fails.
    pub n0_observed: i64,
    pub c_tilde: i64,
    pub upper_constant: i64,
    pub min_mu_alpha: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RecgrowSandwich {
    pub ok: bool,
    pub cancellation_ok: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RecgrowStatus {
    match e {
        Error::Degenerate { .. } | Error::RootOfUnityRatio { .. } => RecgrowStatus::Degenerate,
        Error::Precision => RecgrowStatus::Precision,
        _ => RecgrowStatus::InvalidInput,
    }
}

fn fail(status: RecgrowStatus, msg: &str) -> RecgrowStatus {
    set_error(msg);
    status
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<RecgrowStatus, RecgrowStatus>) -> RecgrowStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == RecgrowStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(s)) => s,
        Err(_) => fail(RecgrowStatus::Internal, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, RecgrowStatus>;
}

impl<T> OrStatus<T> for recgrow::Result<T> {
    fn or_status(self) -> Result<T, RecgrowStatus> {
        self.map_err(|e| fail(status_of(&e), &e.to_string()))
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, RecgrowStatus> {
    if p.is_null() {
        return Err(fail(RecgrowStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RecgrowStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], RecgrowStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(RecgrowStatus::NullPointer, "null array"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, RecgrowStatus> {
    p.as_mut().ok_or_else(|| fail(RecgrowStatus::NullPointer, "null output pointer"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, RecgrowStatus> {
    p.as_ref().ok_or_else(|| fail(RecgrowStatus::NullPointer, "null handle"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<RecgrowStatus, RecgrowStatus> {
    let slot = out_ref(out)?;
    let c = CString::new(s).map_err(|_| fail(RecgrowStatus::Internal, "interior nul"))?;
    *slot = c.into_raw();
    Ok(RecgrowStatus::Ok)
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn recgrow_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn recgrow_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn recgrow_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses a sequence document; `json` selects JSON over TOML.
///
/// # Safety
/// `doc` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_parse(
    doc: *const c_char,
    json: bool,
    out: *mut *mut RecgrowSpec,
) -> RecgrowStatus {
    guard(|| {
        let slot = out_ref(out)?;
        let fmt = if json { DocFormat::Json } else { DocFormat::Toml };
        let spec = io::parse_spec(text(doc)?, fmt).or_status()?;
        *slot = Box::into_raw(Box::new(RecgrowSpec(spec)));
        Ok(RecgrowStatus::Ok)
    })
}

/// # Safety
/// `spec` must come from [`recgrow_spec_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_free(spec: *mut RecgrowSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Number of terms `t`.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_len(spec: *const RecgrowSpec, out: *mut usize) -> RecgrowStatus {
    guard(|| {
        *out_ref(out)? = handle(spec)?.0.len();
        Ok(RecgrowStatus::Ok)
    })
}

/// Serializes the spec back to a document.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_serialize(
    spec: *const RecgrowSpec,
    json: bool,
    out: *mut *mut c_char,
) -> RecgrowStatus {
    guard(|| {
        let fmt = if json { DocFormat::Json } else { DocFormat::Toml };
        put_string(out, io::serialize_spec(&handle(spec)?.0, fmt))
    })
}

/// Bound constants at `mu` (`inf`, `point:<q>`, `factor:<poly>`) as JSON.
///
/// # Safety
/// `spec` must be a live handle, `mu` a string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_constants_json(
    spec: *const RecgrowSpec,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> RecgrowStatus {
    guard(|| {
        let place = io::parse_mu(text(mu)?).or_status()?;
        let c = bound_constants(&handle(spec)?.0, &place).or_status()?;
        put_string(out, io::constants_json(&c))
    })
}

/// Scans `n = 0..=n_max`; returns [`RecgrowStatus::Violation`] when a
/// proven bound fails. `csv_out` may be null; otherwise it receives the
/// CSV report.
///
/// # Safety
/// `spec` must be a live handle, `mu` a string, `summary` a valid pointer
/// and `csv_out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn recgrow_spec_verify(
    spec: *const RecgrowSpec,
    mu: *const c_char,
    n_max: u64,
    summary: *mut RecgrowVerifySummary,
    csv_out: *mut *mut c_char,
) -> RecgrowStatus {
    guard(|| {
        let slot = out_ref(summary)?;
        let place = io::parse_mu(text(mu)?).or_status()?;
        let r = verify_bounds(&handle(spec)?.0, &place, n_max).or_status()?;
        let violations = r.violations().len() as u64;
        *slot = RecgrowVerifySummary {
            rows: r.rows.len() as u64,
            violations,
            zero_rows: r.zero_rows().len() as u64,
            n0_observed: r.n0_observed.map_or(-1, |n| n as i64),
            c_tilde: r.constants.c_tilde,
            upper_constant: r.constants.upper_constant,
            min_mu_alpha: r.constants.min_mu_alpha,
        };
        if !csv_out.is_null() {
            put_string(csv_out, io::bound_report_csv(&r))?;
        }
        if violations > 0 {
            return Ok(fail(RecgrowStatus::Violation, "a proven bound failed"));
        }
        Ok(RecgrowStatus::Ok)
    })
}

/// Builds an integer recurrence from a monic characteristic polynomial
/// (ascending coefficients, `order + 1` of them) and `order` initial terms.
///
/// # Safety
/// Arrays must hold the stated number of elements; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn recgrow_int_recurrence_new(
    char_coeffs: *const i64,
    n_coeffs: usize,
    initial_terms: *const i64,
    n_initial: usize,
    precision_bits: u32,
    out: *mut *mut RecgrowIntRecurrence,
) -> RecgrowStatus {
    guard(|| {
        let slot = out_ref(out)?;
        let c = slice(char_coeffs, n_coeffs)?.iter().map(|&v| BigInt::from(v)).collect();
        let g = slice(initial_terms, n_initial)?.iter().map(|&v| BigInt::from(v)).collect();
        let rec = IntRecurrence::new(c, g, precision_bits).or_status()?;
        *slot = Box::into_raw(Box::new(RecgrowIntRecurrence(rec)));
        Ok(RecgrowStatus::Ok)
    })
}

/// # Safety
/// `rec` must come from [`recgrow_int_recurrence_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn recgrow_int_recurrence_free(rec: *mut RecgrowIntRecurrence) {
    if !rec.is_null() {
        drop(Box::from_raw(rec));
    }
}

/// `G_n` as a decimal string.
///
/// # Safety
/// `rec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_int_recurrence_term(
    rec: *const RecgrowIntRecurrence,
    n: u64,
    out: *mut *mut c_char,
) -> RecgrowStatus {
    guard(|| put_string(out, eval_int_recurrence(&handle(rec)?.0, n).to_string()))
}

/// Number of distinct characteristic roots actually used by the sequence.
///
/// # Safety
/// `rec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_int_recurrence_root_count(
    rec: *const RecgrowIntRecurrence,
    out: *mut usize,
) -> RecgrowStatus {
    guard(|| {
        *out_ref(out)? = handle(rec)?.0.roots().len();
        Ok(RecgrowStatus::Ok)
    })
}

/// Sets `*nondegenerate`; when false, `*i`, `*j` (0-based) and `*order`
/// describe a root-of-unity ratio.
///
/// # Safety
/// `rec` must be a live handle and the outputs valid pointers.
#[no_mangle]
pub unsafe extern "C" fn recgrow_int_recurrence_nondegenerate(
    rec: *const RecgrowIntRecurrence,
    nondegenerate: *mut bool,
    i: *mut usize,
    j: *mut usize,
    order: *mut u64,
) -> RecgrowStatus {
    guard(|| {
        let (nd, i, j, order) = (out_ref(nondegenerate)?, out_ref(i)?, out_ref(j)?, out_ref(order)?);
        match check_nondegenerate_nf(&handle(rec)?.0).or_status()? {
            NfNondegeneracy::NonDegenerate => *nd = true,
            NfNondegeneracy::Degenerate { i: a, j: b, order: m } => {
                *nd = false;
                (*i, *j, *order) = (a, b, m);
            }
        }
        Ok(RecgrowStatus::Ok)
    })
}

/// Least `n0` such that `|G_n| >= (max |alpha|)^{n (1 - eps)}` is certified
/// for all `n0 <= n <= n_max`; `-1` when the last row fails.
///
/// # Safety
/// `rec` must be a live handle and `min_n` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_epsilon_min_n(
    rec: *const RecgrowIntRecurrence,
    eps_num: i64,
    eps_den: i64,
    n_max: u64,
    precision_bits: u32,
    min_n: *mut i64,
) -> RecgrowStatus {
    guard(|| {
        let slot = out_ref(min_n)?;
        if eps_den == 0 {
            return Err(fail(RecgrowStatus::InvalidInput, "zero denominator"));
        }
        let cfg = EpsilonCheckConfig {
            epsilon: ratio(eps_num, eps_den),
            n_max,
            precision_bits,
        };
        let r = verify_epsilon_inequality(&handle(rec)?.0, &cfg).or_status()?;
        *slot = r.min_n.map_or(-1, |n| n as i64);
        Ok(RecgrowStatus::Ok)
    })
}

/// `(7 k^a)^{8 k^a}` as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn recgrow_schmidt_log_bound(k: u64, a: u32, out: *mut *mut c_char) -> RecgrowStatus {
    guard(|| {
        let v = schmidt_zero_bound_log(SchmidtBoundInput { k, a }).or_status()?;
        put_string(out, v.to_string())
    })
}

/// Product sandwich for integer `f` at `r`; `product_out` receives
/// `|f(r)|` in decimal and may be null.
///
/// # Safety
/// `f` must hold `n_coeffs` elements, `out` must be valid and
/// `product_out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn recgrow_product_sandwich(
    f: *const i64,
    n_coeffs: usize,
    r: i64,
    out: *mut RecgrowSandwich,
    product_out: *mut *mut c_char,
) -> RecgrowStatus {
    guard(|| {
        let slot = out_ref(out)?;
        let coeffs: Vec<BigInt> = slice(f, n_coeffs)?.iter().map(|&v| BigInt::from(v)).collect();
        let s = product_sandwich(&coeffs, &BigInt::from(r)).or_status()?;
        *slot = RecgrowSandwich {
            ok: s.ok,
            cancellation_ok: s.cancellation_ok,
        };
        if !product_out.is_null() {
            put_string(product_out, s.product.to_string())?;
        }
        Ok(RecgrowStatus::Ok)
    })
}
