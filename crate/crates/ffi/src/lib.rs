//! C ABI over the `rookshuffle` engine.
//!
//! Decks, polynomials and boards cross the boundary as opaque handles that
//! must be released with their matching `*_free` function. Exact integers and
//! structured results come back as NUL-terminated strings (decimal digits or
//! JSON) owned by the caller and released with [`rks_string_free`]. Every
//! fallible call returns an [`RksStatus`]; on failure, [`rks_last_error`]
//! describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rookshuffle::boards::{
    adjacency_hit_numbers, adjacency_rook_numbers, hits_from_rook_numbers, parse_condition_file,
    rook_numbers, rook_polynomial_from_numbers, BoardError, ConditionFile,
};
use rookshuffle::closedforms::{full_adjacency_poly, full_board_poly};
use rookshuffle::exactnum::BigInteger;
use rookshuffle::polynomial::IntPolynomial;
use rookshuffle::shuffle::{
    adjacency_distribution, bruteforce_distribution, generalized_derangement_count,
    perfect_shuffle_count, perfect_shuffle_report_with_digits, DeckComposition, DeckError,
    MAX_DECK_SIZE,
};
use rookshuffle::verify::{simulate_with_threads, SimulationError};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RksStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GuardViolation = 4,
    InvalidArgument = 5,
    InternalError = 6,
}

/// A deck: how many cards carry each value.
pub struct RksDeck(DeckComposition);

/// A polynomial with arbitrary-precision integer coefficients.
pub struct RksPolynomial(IntPolynomial);

/// A parsed board or adjacency-condition file.
pub struct RksBoard(ConditionFile);

/// Outcome of a Monte Carlo run.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct RksSimulation {
    pub trials: u64,
    pub successes: u64,
    pub estimate: f64,
    pub std_error: f64,
    pub seed: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RksStatus, String);

impl From<DeckError> for Failure {
    fn from(e: DeckError) -> Self {
        let status = match e {
            DeckError::TooLarge { .. } | DeckError::TooLargeForEnumeration { .. } => RksStatus::GuardViolation,
            DeckError::Malformed(_) => RksStatus::ParseError,
            _ => RksStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<BoardError> for Failure {
    fn from(e: BoardError) -> Self {
        let status = match e {
            BoardError::TooLargeForEnumeration { .. } | BoardError::SearchBudgetExceeded { .. } => {
                RksStatus::GuardViolation
            }
            _ => RksStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<SimulationError> for Failure {
    fn from(e: SimulationError) -> Self {
        let status = match e {
            SimulationError::ZeroTrials => RksStatus::InvalidArgument,
            SimulationError::ThreadPool(_) => RksStatus::InternalError,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RksStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
        let message = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".to_owned());
        Err(Failure(RksStatus::InternalError, message))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            RksStatus::Ok
        }
        Err(Failure(status, message)) => {
            set_last_error(&message);
            status
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(RksStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RksStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(RksStatus::InternalError, "interior NUL".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(value)))
}

fn words(values: &[BigInteger]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn rks_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or NULL after a
/// successful call. Valid until the next call into the library.
#[no_mangle]
pub extern "C" fn rks_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rks_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses "13x4", "4,4,4" or a single count.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_parse(spec: *const c_char, out: *mut *mut RksDeck) -> RksStatus {
    guard(|| {
        let deck: DeckComposition = text(spec, "spec")?.parse()?;
        write_handle(out, RksDeck(deck))
    })
}

/// Builds a deck from `len` per-value counts.
///
/// # Safety
/// `counts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_from_counts(counts: *const usize, len: usize, out: *mut *mut RksDeck) -> RksStatus {
    guard(|| {
        if counts.is_null() && len > 0 {
            return Err(null("counts"));
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(counts, len) };
        write_handle(out, RksDeck(DeckComposition::new(slice.to_vec())?))
    })
}

/// # Safety
/// `deck` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_free(deck: *mut RksDeck) {
    if !deck.is_null() {
        drop(Box::from_raw(deck));
    }
}

/// Total number of cards in the deck, or 0 for NULL.
///
/// # Safety
/// `deck` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_cards(deck: *const RksDeck) -> usize {
    deck.as_ref().map_or(0, |d| d.0.cards())
}

/// Number of orderings with no two equal values adjacent, as decimal digits.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_perfect_shuffle_count(deck: *const RksDeck, out: *mut *mut c_char) -> RksStatus {
    guard(|| write_string(out, perfect_shuffle_count(&handle(deck, "deck")?.0).to_string()))
}

/// Number of orderings where no card lands on a position of its own value.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_generalized_derangement_count(
    deck: *const RksDeck,
    out: *mut *mut c_char,
) -> RksStatus {
    guard(|| write_string(out, generalized_derangement_count(&handle(deck, "deck")?.0).to_string()))
}

/// Full probability report as JSON, with `digits` decimal places.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_report_json(deck: *const RksDeck, digits: usize, out: *mut *mut c_char) -> RksStatus {
    guard(|| {
        let report = perfect_shuffle_report_with_digits(&handle(deck, "deck")?.0, digits);
        write_string(out, report.to_json().to_string())
    })
}

/// Distribution of the number of equal-value adjacencies, as JSON.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_adjacency_distribution_json(
    deck: *const RksDeck,
    out: *mut *mut c_char,
) -> RksStatus {
    guard(|| write_string(out, adjacency_distribution(&handle(deck, "deck")?.0).to_json().to_string()))
}

/// The same distribution by exhaustive enumeration; small decks only.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_deck_bruteforce_distribution_json(
    deck: *const RksDeck,
    out: *mut *mut c_char,
) -> RksStatus {
    guard(|| write_string(out, bruteforce_distribution(&handle(deck, "deck")?.0)?.to_json().to_string()))
}

/// Monte Carlo estimate. `threads == 0` uses the default pool; the result
/// is the same either way.
///
/// # Safety
/// `deck` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_simulate(
    deck: *const RksDeck,
    trials: u64,
    seed: u64,
    threads: usize,
    out: *mut RksSimulation,
) -> RksStatus {
    guard(|| {
        let deck = &handle(deck, "deck")?.0;
        let r = simulate_with_threads(deck, trials, seed, (threads > 0).then_some(threads))?;
        write(
            out,
            RksSimulation { trials: r.trials, successes: r.successes, estimate: r.estimate, std_error: r.stderr, seed: r.seed },
        )
    })
}

fn check_degree(degree: u64) -> Result<(), Failure> {
    if degree > MAX_DECK_SIZE as u64 {
        return Err(Failure(RksStatus::GuardViolation, format!("degree {degree} exceeds the limit of {MAX_DECK_SIZE}")));
    }
    Ok(())
}

/// Rook polynomial of the complete n x n board.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_full_board(n: u64, out: *mut *mut RksPolynomial) -> RksStatus {
    guard(|| {
        check_degree(n)?;
        write_handle(out, RksPolynomial(full_board_poly(n)))
    })
}

/// Generalized rook polynomial of all adjacencies among n cards.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_full_adjacency(n: u64, out: *mut *mut RksPolynomial) -> RksStatus {
    guard(|| {
        check_degree(n)?;
        write_handle(out, RksPolynomial(full_adjacency_poly(n)))
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_mul(
    a: *const RksPolynomial,
    b: *const RksPolynomial,
    out: *mut *mut RksPolynomial,
) -> RksStatus {
    guard(|| {
        let (a, b) = (&handle(a, "a")?.0, &handle(b, "b")?.0);
        check_degree(a.degree().unwrap_or(0) as u64 + b.degree().unwrap_or(0) as u64)?;
        write_handle(out, RksPolynomial(a * b))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_pow(p: *const RksPolynomial, exponent: u32, out: *mut *mut RksPolynomial) -> RksStatus {
    guard(|| {
        let p = &handle(p, "polynomial")?.0;
        check_degree((p.degree().unwrap_or(0) as u64).saturating_mul(u64::from(exponent)))?;
        write_handle(out, RksPolynomial(p.pow(exponent)))
    })
}

/// Degree of the polynomial, or -1 for zero (and for NULL).
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_degree(p: *const RksPolynomial) -> i64 {
    p.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of x^k as decimal digits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_coeff(p: *const RksPolynomial, k: usize, out: *mut *mut c_char) -> RksStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.coeff(k).to_string()))
}

/// Image of the polynomial under x^k -> k!.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_phi(p: *const RksPolynomial, out: *mut *mut c_char) -> RksStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.phi().to_string()))
}

/// Human-readable form, highest power first, e.g. "x^2 - 4x + 2".
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_to_string(p: *const RksPolynomial, out: *mut *mut c_char) -> RksStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.to_string()))
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rks_poly_free(p: *mut RksPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses a board file ("n" header then "i j" cells) or an adjacency file
/// ("adjacency n" header then "i j" pairs).
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_board_parse(source: *const c_char, out: *mut *mut RksBoard) -> RksStatus {
    guard(|| {
        let parsed = parse_condition_file(text(source, "source")?)
            .map_err(|e| Failure(RksStatus::ParseError, e.to_string()))?;
        write_handle(out, RksBoard(parsed))
    })
}

fn board_rook_numbers(board: &ConditionFile) -> Result<(usize, rookshuffle::boards::RookNumbers), Failure> {
    Ok(match board {
        ConditionFile::Board(b) => (b.n(), rook_numbers(b)),
        ConditionFile::Adjacency(a) => (a.n(), adjacency_rook_numbers(a)?),
    })
}

/// Rook polynomial of the board, or generalized rook polynomial of the
/// adjacency set.
///
/// # Safety
/// `board` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_board_rook_polynomial(board: *const RksBoard, out: *mut *mut RksPolynomial) -> RksStatus {
    guard(|| {
        let (n, rook) = board_rook_numbers(&handle(board, "board")?.0)?;
        write_handle(out, RksPolynomial(rook_polynomial_from_numbers(n, &rook)))
    })
}

/// Hit numbers h_0 .. h_n, space separated.
///
/// # Safety
/// `board` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rks_board_hit_numbers(board: *const RksBoard, out: *mut *mut c_char) -> RksStatus {
    guard(|| {
        let hits = match &handle(board, "board")?.0 {
            ConditionFile::Board(b) => hits_from_rook_numbers(b.n(), &rook_numbers(b)),
            ConditionFile::Adjacency(a) => adjacency_hit_numbers(a)?,
        };
        write_string(out, words(hits.as_slice()))
    })
}

/// # Safety
/// `board` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rks_board_free(board: *mut RksBoard) {
    if !board.is_null() {
        drop(Box::from_raw(board));
    }
}
