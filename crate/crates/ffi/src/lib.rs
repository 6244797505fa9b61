//! C ABI for the charvar pairing engine.
//!
//! Conventions:
//! - Every fallible call returns a [`CharvarStatus`]; outputs go through
//!   out-pointers and are only written on `Ok`.
//! - Strings handed out are NUL-terminated UTF-8 allocated on the Rust
//!   side; release them with [`charvar_string_free`].
//! - Gram matrices live behind the opaque handle [`CharvarGram`];
//!   release with [`charvar_gram_free`].
//! - Sign conventions are passed as integers matching
//!   [`CharvarSignConvention`] (0 = consistent, 1 = paper-literal).
//! - Rational values render in the machine form `p/q` (denominator
//!   always present); JSON payloads match the CLI's `--format json`.

use charvar::{
    dual_json, gram, newstead_check, normalize, pair_monomial, parse_monomial, rank_and_radical,
    repvar, table_json, CohClass, Error, Generator, Genus, GramMatrix, SignConvention,
};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharvarStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An input string was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was out of its documented range.
    InvalidArgument = 3,
    /// Malformed monomial or generator text.
    SyntaxError = 4,
    /// A `b` or `gamma` index beyond the genus bound.
    IndexOutOfRange = 5,
    GenusOutOfRange = 6,
    DegreeOutOfRange = 7,
    /// Engine bug: Poincaré duality guarantees a partner exists.
    NoDualFound = 8,
    /// Numerical guard tripped in the representation-variety suite.
    NumericalError = 9,
    /// A panic was caught at the boundary.
    InternalPanic = 10,
}

/// Integer values accepted wherever a sign convention is expected.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharvarSignConvention {
    Consistent = 0,
    PaperLiteral = 1,
}

fn status_of(e: &Error) -> CharvarStatus {
    match e {
        Error::Syntax { .. } => CharvarStatus::SyntaxError,
        Error::IndexOutOfRange(_) => CharvarStatus::IndexOutOfRange,
        Error::GenusOutOfRange(_) => CharvarStatus::GenusOutOfRange,
        Error::DegreeOutOfRange { .. } => CharvarStatus::DegreeOutOfRange,
        Error::NoDualFound(_) => CharvarStatus::NoDualFound,
        Error::StepTooLarge(_) | Error::DegenerateInput(_) => CharvarStatus::NumericalError,
    }
}

fn sign_convention(raw: u32) -> Option<SignConvention> {
    match raw {
        0 => Some(SignConvention::Consistent),
        1 => Some(SignConvention::PaperLiteral),
        _ => None,
    }
}

/// # Safety
/// `ptr` must be NULL or point at a NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, CharvarStatus> {
    if ptr.is_null() {
        return Err(CharvarStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| CharvarStatus::InvalidUtf8)
}

/// # Safety
/// `out` must be a valid pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> CharvarStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CharvarStatus::Ok
        }
        Err(_) => CharvarStatus::InternalPanic, // engine strings never contain NUL
    }
}

fn guarded(f: impl FnOnce() -> CharvarStatus) -> CharvarStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CharvarStatus::InternalPanic)
}

/// Version of the underlying engine, as a static string. Do not free.
#[no_mangle]
pub extern "C" fn charvar_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Frees a string returned by any `charvar_*` call. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn charvar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Pairs monomial text against the fundamental class at the given genus.
/// On success writes the exact value in machine form `p/q`.
///
/// # Safety
/// `monomial` must be a NUL-terminated string, `out_value` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_pair_eval(
    genus: u32,
    sign_convention_raw: u32,
    monomial: *const c_char,
    out_value: *mut *mut c_char,
) -> CharvarStatus {
    if out_value.is_null() {
        return CharvarStatus::NullPointer;
    }
    let text = match read_str(monomial) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| {
        let Some(conv) = sign_convention(sign_convention_raw) else {
            return CharvarStatus::InvalidArgument;
        };
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let nm = match parse_monomial(text, g).and_then(|m| normalize(&m, g)) {
            Ok(nm) => nm,
            Err(e) => return status_of(&e),
        };
        let value = pair_monomial(&nm, g, conv);
        unsafe { write_string(out_value, value.machine_form()) }
    })
}

/// Writes the full pairing table as a JSON object
/// `{genus, sign_convention, rows: [{m, n, p, value}]}`.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_table_json(
    genus: u32,
    sign_convention_raw: u32,
    out_json: *mut *mut c_char,
) -> CharvarStatus {
    if out_json.is_null() {
        return CharvarStatus::NullPointer;
    }
    guarded(|| {
        let Some(conv) = sign_convention(sign_convention_raw) else {
            return CharvarStatus::InvalidArgument;
        };
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        unsafe { write_string(out_json, table_json(g, conv).to_string()) }
    })
}

/// Writes the dual partner of a generator (`"f"`, `"a"` or `"b<k>"`) and
/// its pairing vector as JSON.
///
/// # Safety
/// `generator` must be a NUL-terminated string, `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_dual_json(
    genus: u32,
    sign_convention_raw: u32,
    generator: *const c_char,
    out_json: *mut *mut c_char,
) -> CharvarStatus {
    if out_json.is_null() {
        return CharvarStatus::NullPointer;
    }
    let token = match read_str(generator) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| {
        let Some(conv) = sign_convention(sign_convention_raw) else {
            return CharvarStatus::InvalidArgument;
        };
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let generator = match Generator::parse(token, g) {
            Ok(gen) => gen,
            Err(e) => return status_of(&e),
        };
        match dual_json(g, generator, conv) {
            Ok(v) => unsafe { write_string(out_json, v.to_string()) },
            Err(e) => status_of(&e),
        }
    })
}

/// Runs the `a^g = 0` vanishing check. Writes the JSON report and the
/// violation count (0 means the check passed).
///
/// # Safety
/// `out_json` and `out_violations` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn charvar_newstead_json(
    genus: u32,
    sign_convention_raw: u32,
    out_json: *mut *mut c_char,
    out_violations: *mut u64,
) -> CharvarStatus {
    if out_json.is_null() || out_violations.is_null() {
        return CharvarStatus::NullPointer;
    }
    guarded(|| {
        let Some(conv) = sign_convention(sign_convention_raw) else {
            return CharvarStatus::InvalidArgument;
        };
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let report = newstead_check(g, conv);
        unsafe {
            *out_violations = report.violations.len() as u64;
            write_string(out_json, report.to_json_string())
        }
    })
}

/// Runs the numerical representation-variety suite over `samples` seeded
/// fiber points. Writes the JSON report and the count of violated
/// expectations (0 means everything passed `tol` and the rank checks).
///
/// # Safety
/// `out_json` and `out_failures` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn charvar_verify_rep_json(
    genus: u32,
    samples: u32,
    seed: u64,
    tol: f64,
    out_json: *mut *mut c_char,
    out_failures: *mut u64,
) -> CharvarStatus {
    if out_json.is_null() || out_failures.is_null() {
        return CharvarStatus::NullPointer;
    }
    guarded(|| {
        if samples < 1 || !tol.is_finite() || tol <= 0.0 {
            return CharvarStatus::InvalidArgument;
        }
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        match repvar::verify(g, samples, seed, tol) {
            Ok((report, failures)) => unsafe {
                *out_failures = failures.len() as u64;
                write_string(out_json, report.to_json_string())
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Opaque Gram-matrix handle: the exact pairing matrix between the
/// canonical monomial bases of two complementary degrees, plus its rank
/// and a basis of its radical.
pub struct CharvarGram {
    matrix: GramMatrix,
    rank: usize,
    radical: Vec<CohClass>,
}

/// Builds the Gram matrix of the given degree. On success the handle
/// must be released with [`charvar_gram_free`].
///
/// # Safety
/// `out_handle` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_new(
    genus: u32,
    degree: u32,
    sign_convention_raw: u32,
    out_handle: *mut *mut CharvarGram,
) -> CharvarStatus {
    if out_handle.is_null() {
        return CharvarStatus::NullPointer;
    }
    guarded(|| {
        let Some(conv) = sign_convention(sign_convention_raw) else {
            return CharvarStatus::InvalidArgument;
        };
        let g = match Genus::new(genus) {
            Ok(g) => g,
            Err(e) => return status_of(&e),
        };
        let matrix = match gram(g, degree, conv) {
            Ok(m) => m,
            Err(e) => return status_of(&e),
        };
        let (rank, radical) = rank_and_radical(&matrix);
        let handle = Box::new(CharvarGram { matrix, rank, radical });
        unsafe {
            *out_handle = Box::into_raw(handle);
        }
        CharvarStatus::Ok
    })
}

/// Releases a Gram handle. NULL is ignored.
///
/// # Safety
/// `handle` must come from [`charvar_gram_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_free(handle: *mut CharvarGram) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of rows; 0 on NULL.
///
/// # Safety
/// `handle` must be NULL or a live Gram handle.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_nrows(handle: *const CharvarGram) -> u64 {
    handle.as_ref().map_or(0, |h| h.matrix.rows.len() as u64)
}

/// Number of columns; 0 on NULL.
///
/// # Safety
/// `handle` must be NULL or a live Gram handle.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_ncols(handle: *const CharvarGram) -> u64 {
    handle.as_ref().map_or(0, |h| h.matrix.cols.len() as u64)
}

/// Exact rank over the rationals; 0 on NULL.
///
/// # Safety
/// `handle` must be NULL or a live Gram handle.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_rank(handle: *const CharvarGram) -> u64 {
    handle.as_ref().map_or(0, |h| h.rank as u64)
}

/// Dimension of the radical (rows minus rank); 0 on NULL.
///
/// # Safety
/// `handle` must be NULL or a live Gram handle.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_radical_len(handle: *const CharvarGram) -> u64 {
    handle.as_ref().map_or(0, |h| h.radical.len() as u64)
}

unsafe fn gram_label(
    handle: *const CharvarGram,
    index: u64,
    out: *mut *mut c_char,
    pick: impl Fn(&CharvarGram) -> &[charvar::NormalizedMonomial],
) -> CharvarStatus {
    if out.is_null() {
        return CharvarStatus::NullPointer;
    }
    let Some(h) = handle.as_ref() else {
        return CharvarStatus::NullPointer;
    };
    let list = pick(h);
    let Some(m) = list.get(index as usize) else {
        return CharvarStatus::InvalidArgument;
    };
    write_string(out, m.render())
}

/// Label of row `index` in canonical monomial text.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_label` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_row_label(
    handle: *const CharvarGram,
    index: u64,
    out_label: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| unsafe { gram_label(handle, index, out_label, |h| &h.matrix.rows) })
}

/// Label of column `index` in canonical monomial text.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_label` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_col_label(
    handle: *const CharvarGram,
    index: u64,
    out_label: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| unsafe { gram_label(handle, index, out_label, |h| &h.matrix.cols) })
}

/// Entry `(row, col)` in machine form `p/q`.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_entry(
    handle: *const CharvarGram,
    row: u64,
    col: u64,
    out_value: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| {
        if out_value.is_null() {
            return CharvarStatus::NullPointer;
        }
        let Some(h) = (unsafe { handle.as_ref() }) else {
            return CharvarStatus::NullPointer;
        };
        let Some(value) = h
            .matrix
            .entries
            .get(row as usize)
            .and_then(|r| r.get(col as usize))
        else {
            return CharvarStatus::InvalidArgument;
        };
        unsafe { write_string(out_value, value.machine_form()) }
    })
}

/// Radical basis element `index`, rendered as a rational combination of
/// row monomials.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_class` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_radical_class(
    handle: *const CharvarGram,
    index: u64,
    out_class: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| {
        if out_class.is_null() {
            return CharvarStatus::NullPointer;
        }
        let Some(h) = (unsafe { handle.as_ref() }) else {
            return CharvarStatus::NullPointer;
        };
        let Some(class) = h.radical.get(index as usize) else {
            return CharvarStatus::InvalidArgument;
        };
        unsafe { write_string(out_class, class.render()) }
    })
}

/// Whole matrix as the JSON object
/// `{genus, degree, rows, cols, entries}`.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_to_json(
    handle: *const CharvarGram,
    out_json: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| {
        if out_json.is_null() {
            return CharvarStatus::NullPointer;
        }
        let Some(h) = (unsafe { handle.as_ref() }) else {
            return CharvarStatus::NullPointer;
        };
        unsafe { write_string(out_json, h.matrix.to_json_value().to_string()) }
    })
}

/// Whole matrix as CSV with row/column monomial labels and `p/q`
/// entries.
///
/// # Safety
/// `handle` must be a live Gram handle, `out_csv` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charvar_gram_to_csv(
    handle: *const CharvarGram,
    out_csv: *mut *mut c_char,
) -> CharvarStatus {
    guarded(|| {
        if out_csv.is_null() {
            return CharvarStatus::NullPointer;
        }
        let Some(h) = (unsafe { handle.as_ref() }) else {
            return CharvarStatus::NullPointer;
        };
        unsafe { write_string(out_csv, h.matrix.to_csv()) }
    })
}
