//! C ABI over `qconcat`.
//!
//! Objects are opaque handles created by `qc_*_new`-style constructors and
//! released with the matching `*_free`. Every fallible entry point returns a
//! [`QcStatus`]; on failure a human-readable message is kept per thread and
//! can be copied out with [`qc_last_error_message`]. Panics never cross the
//! boundary: they are caught and reported as [`QcStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qconcat::addcode::{min_weight_outside, StabilizerCode, DEFAULT_BUDGET};
use qconcat::bounds::{delta_at, BoundKind};
use qconcat::concat::{concatenate, ConcatenatedCode, OuterCode};
use qconcat::decoder::{simulate, ConcatDecoder, DepolarizingChannel};
use qconcat::gf4::SymplecticVec;
use qconcat::qrs::QuantumRsCode;
use qconcat::{codes, io, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BudgetExceeded = 3,
    Unsupported = 4,
    DecodeFailure = 5,
    Parse = 6,
    Internal = 7,
    Panic = 8,
    BufferTooSmall = 9,
}

/// Asymptotic bound selector for [`qc_bound_delta`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcBound {
    Gv = 0,
    Zyablov = 1,
    Gcq = 2,
    Bz = 3,
    Ktv = 4,
}

/// Code parameters `[[n, k]]` with the certified distance lower bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QcParams {
    pub n: usize,
    pub k: usize,
    pub d_lower: u32,
}

/// Monte Carlo summary; the interval is a 95% Wilson interval.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct QcSimStats {
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// A stabilizer code. Quantum Reed-Solomon codes keep their algebraic
/// structure so they decode algebraically when used as outer codes.
pub struct QcCode {
    kind: CodeKind,
}

#[allow(clippy::large_enum_variant)]
enum CodeKind {
    Stab(StabilizerCode),
    Qrs(QuantumRsCode),
}

impl QcCode {
    fn stab(&self) -> &StabilizerCode {
        match &self.kind {
            CodeKind::Stab(q) => q,
            CodeKind::Qrs(q) => q.stab(),
        }
    }
}

/// A concatenated code together with its two-stage decoder.
pub struct QcConcat {
    decoder: ConcatDecoder,
}

#[derive(Debug, thiserror::Error)]
enum FfiError {
    #[error("null pointer passed as `{0}`")]
    Null(&'static str),
    #[error("`{0}` is not valid UTF-8")]
    Utf8(&'static str),
    #[error("{0}")]
    Core(#[from] Error),
}

impl FfiError {
    fn status(&self) -> QcStatus {
        match self {
            FfiError::Null(_) => QcStatus::NullPointer,
            FfiError::Utf8(_) => QcStatus::InvalidArgument,
            FfiError::Core(e) => match e {
                Error::BudgetExceeded { .. } => QcStatus::BudgetExceeded,
                Error::Unsupported(_) => QcStatus::Unsupported,
                Error::DecodeFailure(_) => QcStatus::DecodeFailure,
                Error::Parse(_) => QcStatus::Parse,
                Error::Invariant(_) => QcStatus::Internal,
                _ => QcStatus::InvalidArgument,
            },
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_last_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            QcStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            e.status()
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            QcStatus::Panic
        }
    }
}

unsafe fn out_ref<'a, T>(p: *mut T, name: &'static str) -> Result<&'a mut T, FfiError> {
    p.as_mut().ok_or(FfiError::Null(name))
}

unsafe fn in_ref<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, FfiError> {
    p.as_ref().ok_or(FfiError::Null(name))
}

unsafe fn in_str<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, FfiError> {
    if p.is_null() {
        return Err(FfiError::Null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| FfiError::Utf8(name))
}

fn boxed(kind: CodeKind) -> *mut QcCode {
    Box::into_raw(Box::new(QcCode { kind }))
}

/// Length in bytes, including the terminating NUL, of the calling thread's
/// last error message. Returns 1 when there is no error.
#[no_mangle]
pub extern "C" fn qc_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().len() + 1)
}

/// Copy the calling thread's last error message into `buf` as a
/// NUL-terminated string.
///
/// # Safety
/// `buf` must point to at least `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qc_last_error_message(buf: *mut c_char, len: usize) -> QcStatus {
    if buf.is_null() {
        return QcStatus::NullPointer;
    }
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if len < msg.len() + 1 {
            return QcStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), msg.len());
        *buf.add(msg.len()) = 0;
        QcStatus::Ok
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// The [[5,1,3]] code.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn qc_code_five_qubit(out: *mut *mut QcCode) -> QcStatus {
    guard(|| {
        *out_ref(out, "out")? = boxed(CodeKind::Stab(codes::five_qubit()));
        Ok(())
    })
}

/// The [[7,1,3]] Steane code.
///
/// # Safety
/// As for [`qc_code_five_qubit`].
#[no_mangle]
pub unsafe extern "C" fn qc_code_steane(out: *mut *mut QcCode) -> QcStatus {
    guard(|| {
        *out_ref(out, "out")? = boxed(CodeKind::Stab(codes::steane()));
        Ok(())
    })
}

/// The [[m,m,1]] code with no stabilizers.
///
/// # Safety
/// As for [`qc_code_five_qubit`].
#[no_mangle]
pub unsafe extern "C" fn qc_code_trivial(m: usize, out: *mut *mut QcCode) -> QcStatus {
    guard(|| {
        let slot = out_ref(out, "out")?;
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()).into());
        }
        *slot = boxed(CodeKind::Stab(codes::trivial(m)));
        Ok(())
    })
}

/// Quantum Reed-Solomon code `[[m(2^m−1), m(2^m−1−2k)]]`.
///
/// # Safety
/// As for [`qc_code_five_qubit`].
#[no_mangle]
pub unsafe extern "C" fn qc_code_qrs(m: usize, k: usize, out: *mut *mut QcCode) -> QcStatus {
    guard(|| {
        let slot = out_ref(out, "out")?;
        *slot = boxed(CodeKind::Qrs(QuantumRsCode::new(m, k)?));
        Ok(())
    })
}

/// A stabilizer code from generator-matrix text: a line `n dim`, then
/// `dim` rows of `2n` bits.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` as for
/// [`qc_code_five_qubit`].
#[no_mangle]
pub unsafe extern "C" fn qc_code_from_generators(text: *const c_char, out: *mut *mut QcCode) -> QcStatus {
    guard(|| {
        let slot = out_ref(out, "out")?;
        let c = io::parse_generators(in_str(text, "text")?)?;
        *slot = boxed(CodeKind::Stab(StabilizerCode::from_stabilizers(c)?));
        Ok(())
    })
}

/// Release a code handle. Null is ignored.
///
/// # Safety
/// `code` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qc_code_free(code: *mut QcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_code_params(code: *const QcCode, out: *mut QcParams) -> QcStatus {
    guard(|| {
        let q = in_ref(code, "code")?.stab();
        *out_ref(out, "out")? = QcParams {
            n: q.n(),
            k: q.k(),
            d_lower: q.d_lower(),
        };
        Ok(())
    })
}

/// Exact minimum distance by exhaustive enumeration, refused when more
/// than `budget` vectors would be visited (`0` selects the default).
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_code_min_distance(code: *const QcCode, budget: u64, out: *mut u32) -> QcStatus {
    guard(|| {
        let q = in_ref(code, "code")?.stab();
        let slot = out_ref(out, "out")?;
        let budget = if budget == 0 {
            DEFAULT_BUDGET
        } else {
            u128::from(budget)
        };
        *slot = min_weight_outside(q, budget)?;
        Ok(())
    })
}

/// Concatenate `outer` with `inner` and prepare the decoder. The outer code
/// is read in blocks of `k(inner)` qubits. Neither input is consumed.
///
/// # Safety
/// `outer` and `inner` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_new(
    outer: *const QcCode,
    inner: *const QcCode,
    out: *mut *mut QcConcat,
) -> QcStatus {
    guard(|| {
        let outer = in_ref(outer, "outer")?;
        let inner = in_ref(inner, "inner")?.stab().clone();
        let slot = out_ref(out, "out")?;
        let block = inner.k();
        let outer = match &outer.kind {
            CodeKind::Qrs(q) if q.m() == block => OuterCode::from_qrs(q.clone()),
            CodeKind::Qrs(q) => {
                return Err(Error::InvalidParameter(format!(
                    "quantum RS outer has m = {} but the inner code encodes {block} qubits",
                    q.m()
                ))
                .into())
            }
            CodeKind::Stab(q) => OuterCode::certified(q.clone(), block, DEFAULT_BUDGET)?,
        };
        let code: ConcatenatedCode = concatenate(outer, inner)?;
        let decoder = ConcatDecoder::new(&code)?;
        *slot = Box::into_raw(Box::new(QcConcat { decoder }));
        Ok(())
    })
}

/// Release a concatenated-code handle. Null is ignored.
///
/// # Safety
/// `cc` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_free(cc: *mut QcConcat) {
    if !cc.is_null() {
        drop(Box::from_raw(cc));
    }
}

/// # Safety
/// `cc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_params(cc: *const QcConcat, out: *mut QcParams) -> QcStatus {
    guard(|| {
        let code = in_ref(cc, "cc")?.decoder.code();
        *out_ref(out, "out")? = QcParams {
            n: code.stab().n(),
            k: code.stab().k(),
            d_lower: code.d_lower(),
        };
        Ok(())
    })
}

/// Number of errors the decoder is guaranteed to correct.
///
/// # Safety
/// `cc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_radius(cc: *const QcConcat, out: *mut usize) -> QcStatus {
    guard(|| {
        let dec = &in_ref(cc, "cc")?.decoder;
        *out_ref(out, "out")? = dec.guaranteed_radius();
        Ok(())
    })
}

/// Decode a Pauli error given as a string over `IXYZ` of length `n`.
/// `success` receives whether the residual is a stabilizer.
///
/// # Safety
/// `cc` must be a live handle, `pauli` NUL-terminated and `success`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_decode_pauli(
    cc: *const QcConcat,
    pauli: *const c_char,
    success: *mut bool,
) -> QcStatus {
    guard(|| {
        let dec = &in_ref(cc, "cc")?.decoder;
        let e = SymplecticVec::from_pauli(in_str(pauli, "pauli")?)?;
        let slot = out_ref(success, "success")?;
        *slot = dec.decode(&e)?.success;
        Ok(())
    })
}

/// Monte Carlo logical failure rate under depolarizing noise of strength
/// `p`. Results depend only on `(code, p, trials, seed)`; `threads = 0`
/// uses the global pool.
///
/// # Safety
/// `cc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_concat_simulate(
    cc: *const QcConcat,
    p: f64,
    trials: u64,
    seed: u64,
    threads: usize,
    out: *mut QcSimStats,
) -> QcStatus {
    guard(|| {
        let dec = &in_ref(cc, "cc")?.decoder;
        let slot = out_ref(out, "out")?;
        let channel = DepolarizingChannel::new(p)?;
        let s = simulate(dec, &channel, trials, seed, (threads > 0).then_some(threads))?;
        *slot = QcSimStats {
            trials: s.trials,
            failures: s.failures,
            rate: s.rate,
            ci_low: s.ci_low,
            ci_high: s.ci_high,
        };
        Ok(())
    })
}

/// Relative distance of a bound at `rate`. `s` is the order for
/// [`QcBound::Gcq`] and is ignored otherwise. [`QcBound::Ktv`] needs an
/// inner code table (`n k d` per line); pass null for the other kinds.
///
/// # Safety
/// `table` must be null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_bound_delta(
    kind: QcBound,
    rate: f64,
    s: usize,
    table: *const c_char,
    out: *mut f64,
) -> QcStatus {
    guard(|| {
        let slot = out_ref(out, "out")?;
        let table = if table.is_null() {
            None
        } else {
            Some(io::parse_table(in_str(table, "table")?)?)
        };
        let kind = match kind {
            QcBound::Gv => BoundKind::Gv,
            QcBound::Zyablov => BoundKind::Zyablov,
            QcBound::Gcq if s == 0 => return Err(Error::InvalidParameter("order s must be at least 1".into()).into()),
            QcBound::Gcq => BoundKind::Gcq(s),
            QcBound::Bz => BoundKind::Bz,
            QcBound::Ktv => BoundKind::Ktv,
        };
        *slot = delta_at(kind, rate, table.as_ref())?;
        Ok(())
    })
}
