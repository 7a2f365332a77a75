//! C ABI over the `translatable` library.
//!
//! Handles are opaque and owned by the caller once returned; release them with
//! the matching `tt_*_free`. Every fallible call returns a [`TtStatus`] and, on
//! failure, leaves a message for [`tt_last_error`] on the calling thread.
//! Strings handed out by the library are released with [`tt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use translatable::format::{parse_table, sniff, table_to_string, Format};
use translatable::properties::{check, semigroup_criterion, PropertyName};
use translatable::translatable::{detect, table_from_sequence};
use translatable::{constructions, search, CayleyTable, Error, KSequence};

/// Result codes. `TT_STATUS_OK` is zero; everything else is an error.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Bad order, step, entry, index, length or ordering.
    InvalidArgument = 3,
    Parse = 4,
    Precondition = 5,
    ConstructionImpossible = 6,
    ResourceLimit = 7,
    UnknownProperty = 8,
    UnknownTheorem = 9,
    Invariant = 10,
    /// The output buffer is too small; the required length was still written.
    BufferTooSmall = 11,
    Panic = 12,
}

/// Serialization formats for [`tt_table_to_string`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TtFormat {
    Json = 0,
    Text = 1,
}

/// A k-sequence: order `n`, step `k` and the first row `a_1..a_n`.
pub struct TtSequence(KSequence);

/// A Cayley table on `1..=n`.
pub struct TtTable(CayleyTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> TtStatus {
    match e {
        Error::InvalidOrder(_)
        | Error::OrderTooLarge { .. }
        | Error::InvalidStep { .. }
        | Error::IndexOutOfRange { .. }
        | Error::EntryOutOfRange { .. }
        | Error::LengthMismatch { .. }
        | Error::InvalidOrdering(_) => TtStatus::InvalidArgument,
        Error::Parse { .. } => TtStatus::Parse,
        Error::Precondition(_) => TtStatus::Precondition,
        Error::ConstructionImpossible(_) => TtStatus::ConstructionImpossible,
        Error::ResourceLimit { .. } => TtStatus::ResourceLimit,
        Error::UnknownProperty(_) => TtStatus::UnknownProperty,
        Error::UnknownTheorem(_) => TtStatus::UnknownTheorem,
        Error::Invariant(_) => TtStatus::Invariant,
    }
}

struct Fail(TtStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        Fail(status_of(&e))
    }
}

fn fail(status: TtStatus, msg: &str) -> Fail {
    set_error(msg);
    Fail(status)
}

/// Runs `f`, clearing the last error first and turning panics into `TT_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TtStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic");
            TtStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| fail(TtStatus::NullPointer, "null pointer argument"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(TtStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(fail(TtStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TtStatus::InvalidUtf8, "string is not valid UTF-8"))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul").into_raw()
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn tt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a k-sequence from `n` entries in `1..=n`.
///
/// # Safety
/// `entries` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_sequence_new(
    n: usize,
    k: usize,
    entries: *const usize,
    out: *mut *mut TtSequence,
) -> TtStatus {
    guard(|| {
        if entries.is_null() {
            return Err(fail(TtStatus::NullPointer, "null entries"));
        }
        let a = std::slice::from_raw_parts(entries, n).to_vec();
        let seq = KSequence::new(n, k, a)?;
        put(out, Box::into_raw(Box::new(TtSequence(seq))))
    })
}

/// The sequence of the idempotent k-translatable groupoid of order `n`.
/// Fails with `TT_STATUS_CONSTRUCTION_IMPOSSIBLE` when `gcd(k-1, n) > 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_idempotent_sequence(
    n: usize,
    k: usize,
    out: *mut *mut TtSequence,
) -> TtStatus {
    guard(|| {
        let seq = constructions::idempotent_groupoid(n, k)?;
        put(out, Box::into_raw(Box::new(TtSequence(seq))))
    })
}

/// Copies the first row of `seq` into `entries`, which holds `cap` values.
/// `len` receives the order even when the buffer is too small.
///
/// # Safety
/// `seq` must be a live handle; `entries` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_sequence_values(
    seq: *const TtSequence,
    entries: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TtStatus {
    guard(|| {
        let values = deref(seq)?.0.values();
        copy_out(values, entries, cap, len)
    })
}

unsafe fn copy_out(values: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> Result<(), Fail> {
    put(len, values.len())?;
    if values.len() > cap {
        return Err(fail(TtStatus::BufferTooSmall, "output buffer too small"));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(fail(TtStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

/// Whether the sequence's table is associative, decided from the sequence alone.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_semigroup_criterion(seq: *const TtSequence, out: *mut bool) -> TtStatus {
    guard(|| {
        let v = semigroup_criterion(&deref(seq)?.0)?;
        put(out, v)
    })
}

/// # Safety
/// `seq` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_sequence_free(seq: *mut TtSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// The table `i·j = a_[k - ki + j]` of a sequence.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_table_from_sequence(seq: *const TtSequence, out: *mut *mut TtTable) -> TtStatus {
    guard(|| {
        let t = table_from_sequence(&deref(seq)?.0);
        put(out, Box::into_raw(Box::new(TtTable(t))))
    })
}

/// Builds a table from `n*n` entries in row-major order.
///
/// # Safety
/// `entries` must point to `n*n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_table_from_rows(n: usize, entries: *const usize, out: *mut *mut TtTable) -> TtStatus {
    guard(|| {
        if entries.is_null() {
            return Err(fail(TtStatus::NullPointer, "null entries"));
        }
        let cells = n
            .checked_mul(n)
            .ok_or_else(|| fail(TtStatus::InvalidArgument, "order overflows"))?;
        let flat = std::slice::from_raw_parts(entries, cells);
        let rows = flat.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
        let t = CayleyTable::from_rows(rows)?;
        put(out, Box::into_raw(Box::new(TtTable(t))))
    })
}

/// Parses a table in JSON (`{"n":..,"table":[[..],..]}`) or whitespace text;
/// the format is recognized from the input.
///
/// # Safety
/// `input` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_table_parse(input: *const c_char, out: *mut *mut TtTable) -> TtStatus {
    guard(|| {
        let s = text(input)?;
        let t = parse_table(s, sniff(s))?;
        put(out, Box::into_raw(Box::new(TtTable(t))))
    })
}

/// Serializes a table. Release `out` with [`tt_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_table_to_string(
    table: *const TtTable,
    format: TtFormat,
    out: *mut *mut c_char,
) -> TtStatus {
    guard(|| {
        let f = match format {
            TtFormat::Json => Format::Json,
            TtFormat::Text => Format::Text,
        };
        let s = table_to_string(&deref(table)?.0, f);
        put(out, owned_string(s))
    })
}

/// Order of a table, or 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tt_table_order(table: *const TtTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.order())
}

/// The product `i·j`, both in `1..=n`.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_table_entry(table: *const TtTable, i: usize, j: usize, out: *mut usize) -> TtStatus {
    guard(|| {
        let v = deref(table)?.0.entry(i, j)?;
        put(out, v)
    })
}

/// Every step `k` for which the table is k-translatable, ascending.
/// `len` receives the count even when the buffer is too small.
///
/// # Safety
/// `table` must be a live handle; `ks` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_detect(table: *const TtTable, ks: *mut usize, cap: usize, len: *mut usize) -> TtStatus {
    guard(|| {
        let found: Vec<usize> = detect(&deref(table)?.0).ks.into_iter().collect();
        copy_out(&found, ks, cap, len)
    })
}

/// Checks a named property such as `"associative"` or `"left-cancellative"`.
/// A refutation is a successful call with `out` set to false.
///
/// # Safety
/// `table` must be a live handle; `property` a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_check(table: *const TtTable, property: *const c_char, out: *mut bool) -> TtStatus {
    guard(|| {
        let p: PropertyName = text(property)?.parse()?;
        let v = check(&deref(table)?.0, p)?;
        put(out, v.holds)
    })
}

/// # Safety
/// `table` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_table_free(table: *mut TtTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Runs a verification campaign. `max_n` of 0 selects the campaign default and
/// `jobs` of 0 means one worker. `passed` is false when any case failed;
/// `report` receives one JSON line per case (release with [`tt_string_free`]).
///
/// # Safety
/// `theorem` must be a nul-terminated string; `passed` and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_verify(
    theorem: *const c_char,
    max_n: usize,
    jobs: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> TtStatus {
    guard(|| {
        let id = text(theorem)?;
        if passed.is_null() || report.is_null() {
            return Err(fail(TtStatus::NullPointer, "null output pointer"));
        }
        let max_n = (max_n > 0).then_some(max_n);
        let r = search::verify_with_jobs(id, max_n, jobs.max(1))?;
        put(passed, r.passed())?;
        put(report, owned_string(r.json_lines()))
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
