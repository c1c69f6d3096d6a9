//! Exact rook-polynomial combinatorics for shuffled multiset decks.
//!
//! The crate computes, in exact integer arithmetic, how many orderings of a
//! deck with `n_i` cards of value `i` have no two equal values side by side,
//! the full distribution of equal-value adjacent pairs, and the classical
//! rook and hit numbers of restricted-position boards these results rest on.
//! Brute-force enumerators and a seeded Monte Carlo simulator are included as
//! independent checks.
//!
//! ```
//! use rookshuffle::shuffle::{perfect_shuffle_report, DeckComposition};
//!
//! let report = perfect_shuffle_report(&DeckComposition::standard());
//! assert_eq!(report.decimal, "0.045476282331");
//! ```

pub mod boards;
pub mod closedforms;
mod enumerate;
pub mod exactnum;
pub mod polynomial;
pub mod shuffle;
pub mod verify;

pub use enumerate::MAX_ENUMERATION_SIZE;
