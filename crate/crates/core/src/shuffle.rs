//! Perfect-shuffle counts, probabilities and adjacency distributions for
//! arbitrary deck compositions.
//!
//! A deck of `n = n_1 + … + n_r` labeled cards, `n_i` of them of value `i`,
//! is shuffled uniformly over all `n!` orderings. Product of the full
//! adjacency polynomials `l*_{n_i}` carries everything: its image under the
//! factorial functional is the number of orderings with no two equal values
//! touching, and its signed coefficients invert to the whole distribution of
//! equal-value adjacent pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::boards::{hits_from_rook_numbers, rook_numbers_from_polynomial, Board};
use crate::closedforms::{full_adjacency_poly, full_board_poly};
use crate::enumerate::{for_each_permutation, MAX_ENUMERATION_SIZE};
use crate::exactnum::{
    decimal_string, factorial, format_rational, group_digits, is_probable_prime, reduce,
    trial_division, BigInteger, BigRational, FactorMap,
};
use crate::polynomial::IntPolynomial;

/// Upper bound on the number of cards in a deck.
pub const MAX_DECK_SIZE: usize = 500;

/// Fractional digits in a report's decimal line unless asked otherwise.
pub const DEFAULT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error("malformed deck spec {0:?}: expected \"RxC\" (e.g. 13x4) or a comma list (e.g. 4,4,4)")]
    Malformed(String),
    #[error("a deck needs at least one value")]
    Empty,
    #[error("every value needs at least one card")]
    ZeroCount,
    #[error("deck of {n} cards exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("deck too large for enumeration ({n} cards, limit {max})")]
    TooLargeForEnumeration { n: usize, max: usize },
}

/// Card counts per value, `(n_1, …, n_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeckComposition {
    counts: Vec<usize>,
}

impl DeckComposition {
    pub fn new(counts: Vec<usize>) -> Result<Self, DeckError> {
        if counts.is_empty() {
            return Err(DeckError::Empty);
        }
        if counts.contains(&0) {
            return Err(DeckError::ZeroCount);
        }
        let n = counts.iter().try_fold(0usize, |acc, &c| acc.checked_add(c)).unwrap_or(usize::MAX);
        if n > MAX_DECK_SIZE {
            return Err(DeckError::TooLarge { n, max: MAX_DECK_SIZE });
        }
        Ok(Self { counts })
    }

    /// `values` values with `per_value` cards each; `uniform(13, 4)` is a standard deck.
    pub fn uniform(values: usize, per_value: usize) -> Result<Self, DeckError> {
        Self::new(vec![per_value; values])
    }

    pub fn standard() -> Self {
        Self { counts: vec![4; 13] }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of distinct values `r`.
    pub fn values(&self) -> usize {
        self.counts.len()
    }

    /// Number of cards `n`.
    pub fn cards(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The value of each card in a canonical sorted deck, e.g. `[0,0,1,1]` for `2,2`.
    pub fn card_values(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(value, &c)| std::iter::repeat_n(value, c))
            .collect()
    }

    /// Direct sum of the complete `n_i × n_i` boards, one block per value.
    pub fn value_block_board(&self) -> Board {
        self.counts.iter().fold(Board::new(0), |acc, &c| acc.direct_sum(&Board::full(c)))
    }

    /// `∏ n_i!`, the number of labelings of one value sequence.
    pub fn labelings(&self) -> BigInteger {
        self.counts.iter().map(|&c| factorial(c as u64)).product()
    }
}

impl FromStr for DeckComposition {
    type Err = DeckError;

    /// `"RxC"` or a comma list such as `"4,4,4"` (a single count is a one-value deck).
    fn from_str(s: &str) -> Result<Self, DeckError> {
        let spec = s.trim();
        let malformed = || DeckError::Malformed(s.to_owned());
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| malformed());
        if let Some((values, per_value)) = spec.split_once(['x', 'X']) {
            return Self::uniform(number(values)?, number(per_value)?);
        }
        if spec.is_empty() {
            return Err(malformed());
        }
        Self::new(spec.split(',').map(number).collect::<Result<_, _>>()?)
    }
}

impl fmt::Display for DeckComposition {
    /// Inverse of the parser: `13x4` for uniform decks, otherwise a comma list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self.counts[0];
        if self.counts.len() > 1 && self.counts.iter().all(|&c| c == first) {
            return write!(f, "{}x{}", self.counts.len(), first);
        }
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `∏ f(n_i)`, multiplying equal factors by repeated squaring.
fn product_over_counts(deck: &DeckComposition, f: impl Fn(u64) -> IntPolynomial) -> IntPolynomial {
    let mut multiplicity: BTreeMap<usize, u32> = BTreeMap::new();
    for &c in deck.counts() {
        *multiplicity.entry(c).or_default() += 1;
    }
    multiplicity.into_iter().map(|(c, m)| f(c as u64).pow(m)).product()
}

/// `∏ l*_{n_i}(x)`, e.g. `(l*_4)^13` for the standard deck.
pub fn linear_product(deck: &DeckComposition) -> IntPolynomial {
    product_over_counts(deck, full_adjacency_poly)
}

/// `∏ l_{n_i}(x)`.
pub fn block_product(deck: &DeckComposition) -> IntPolynomial {
    product_over_counts(deck, full_board_poly)
}

/// Orderings of the labeled deck with no two equal values adjacent.
pub fn perfect_shuffle_count(deck: &DeckComposition) -> BigInteger {
    linear_product(deck).phi()
}

/// Permutations π of the labeled deck with `value(i) ≠ value(π(i))` for every card.
pub fn generalized_derangement_count(deck: &DeckComposition) -> BigInteger {
    block_product(deck).phi()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleReport {
    pub deck: DeckComposition,
    /// Perfect orderings of the labeled deck.
    pub count: BigInteger,
    /// `n!`
    pub total: BigInteger,
    pub probability: BigRational,
    pub digits: usize,
    pub decimal: String,
    pub numerator_probable_prime: bool,
    /// Trial division of the reduced denominator by primes `≤ max(n − 1, 2)`.
    pub denominator_factors: FactorMap,
    pub denominator_cofactor: BigInteger,
    /// Perfect value sequences, i.e. `count / ∏ n_i!`.
    pub word_count: BigInteger,
    /// Distinct value sequences, `n! / ∏ n_i!`.
    pub word_total: BigInteger,
}

pub fn perfect_shuffle_report(deck: &DeckComposition) -> ShuffleReport {
    perfect_shuffle_report_with_digits(deck, DEFAULT_DIGITS)
}

pub fn perfect_shuffle_report_with_digits(deck: &DeckComposition, digits: usize) -> ShuffleReport {
    let n = deck.cards();
    let count = perfect_shuffle_count(deck);
    let total = factorial(n as u64);
    let probability = reduce(count.clone(), total.clone()).expect("n! is nonzero");
    let bound = (n as u64).saturating_sub(1).max(2);
    let (denominator_factors, denominator_cofactor) = trial_division(probability.denom(), bound);
    let labelings = deck.labelings();
    ShuffleReport {
        deck: deck.clone(),
        word_count: &count / &labelings,
        word_total: &total / &labelings,
        decimal: decimal_string(&probability, digits),
        numerator_probable_prime: is_probable_prime(probability.numer()),
        count,
        total,
        probability,
        digits,
        denominator_factors,
        denominator_cofactor,
    }
}

fn render_int(v: &BigInteger, group: bool) -> String {
    let s = v.to_string();
    if group {
        group_digits(&s)
    } else {
        s
    }
}

fn render_rational(q: &BigRational, group: bool) -> String {
    if !group {
        return format_rational(q);
    }
    if q.is_integer() {
        group_digits(&q.numer().to_string())
    } else {
        format!("{}/{}", render_int(q.numer(), true), render_int(q.denom(), true))
    }
}

impl ShuffleReport {
    /// `key: value` lines. With `group`, exact integers carry thousands separators.
    pub fn to_text(&self, group: bool, words: bool) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| writeln!(out, "{k}: {v}").unwrap();
        line("deck", self.deck.to_string());
        line("cards", self.deck.cards().to_string());
        line("count", render_int(&self.count, group));
        line("total", render_int(&self.total, group));
        line("probability", render_rational(&self.probability, group));
        line("decimal", self.decimal.clone());
        line("numerator_probable_prime", self.numerator_probable_prime.to_string());
        line("denominator_factors", self.denominator_factors.to_string());
        line("denominator_cofactor", render_int(&self.denominator_cofactor, group));
        if words {
            line("word_count", render_int(&self.word_count, group));
            line("word_total", render_int(&self.word_total, group));
        }
        out
    }

    /// Exact integers are JSON strings so no consumer rounds them.
    pub fn to_json(&self) -> Value {
        json!({
            "deck": self.deck.to_string(),
            "counts": self.deck.counts(),
            "cards": self.deck.cards(),
            "count": self.count.to_string(),
            "total": self.total.to_string(),
            "probability": format_rational(&self.probability),
            "numerator": self.probability.numer().to_string(),
            "denominator": self.probability.denom().to_string(),
            "digits": self.digits,
            "decimal": self.decimal,
            "numerator_probable_prime": self.numerator_probable_prime,
            "denominator_factors": factors_json(&self.denominator_factors),
            "denominator_cofactor": self.denominator_cofactor.to_string(),
            "word_count": self.word_count.to_string(),
            "word_total": self.word_total.to_string(),
        })
    }
}

fn factors_json(f: &FactorMap) -> Value {
    Value::Array(
        f.entries()
            .iter()
            .map(|(p, e)| json!({ "prime": p.to_string(), "exponent": e }))
            .collect(),
    )
}

/// Number of labeled orderings with exactly `k` equal-value adjacent pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyDistribution {
    pub deck: DeckComposition,
    /// Entry `k` for `k = 0, …`; trailing zeros trimmed.
    pub counts_by_k: Vec<BigInteger>,
}

impl AdjacencyDistribution {
    pub fn count(&self, k: usize) -> BigInteger {
        self.counts_by_k.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInteger {
        self.counts_by_k.iter().sum()
    }

    pub fn probability(&self, k: usize) -> BigRational {
        reduce(self.count(k), factorial(self.deck.cards() as u64)).expect("n! is nonzero")
    }

    /// Rows `k = 0..=max(n − 1, 0)`, zeros included.
    pub fn rows(&self) -> Vec<(usize, BigInteger)> {
        let last = self.deck.cards().saturating_sub(1);
        (0..=last).map(|k| (k, self.count(k))).collect()
    }

    /// Tab-separated table `k  count  probability` followed by the column sum.
    pub fn to_text(&self, group: bool) -> String {
        let mut out = String::from("k\tcount\tprobability\n");
        for (k, c) in self.rows() {
            let p = self.probability(k);
            writeln!(out, "{k}\t{}\t{}", render_int(&c, group), render_rational(&p, group)).unwrap();
        }
        writeln!(out, "sum\t{}\t1", render_int(&self.total(), group)).unwrap();
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .into_iter()
            .map(|(k, c)| {
                json!({
                    "k": k,
                    "count": c.to_string(),
                    "probability": format_rational(&self.probability(k)),
                })
            })
            .collect();
        json!({
            "deck": self.deck.to_string(),
            "cards": self.deck.cards(),
            "total": self.total().to_string(),
            "rows": rows,
        })
    }
}

fn trim(mut v: Vec<BigInteger>) -> Vec<BigInteger> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// The distribution of equal-value adjacent pairs, by inverting the signed
/// rook numbers carried by `∏ l*_{n_i}(x)`.
pub fn adjacency_distribution(deck: &DeckComposition) -> AdjacencyDistribution {
    let n = deck.cards();
    let rook = rook_numbers_from_polynomial(n, &linear_product(deck));
    AdjacencyDistribution {
        deck: deck.clone(),
        counts_by_k: trim(hits_from_rook_numbers(n, &rook).into_vec()),
    }
}

/// The same distribution, by visiting all `n!` labeled orderings.
pub fn bruteforce_distribution(deck: &DeckComposition) -> Result<AdjacencyDistribution, DeckError> {
    let n = deck.cards();
    if n > MAX_ENUMERATION_SIZE {
        return Err(DeckError::TooLargeForEnumeration { n, max: MAX_ENUMERATION_SIZE });
    }
    let mut counts = vec![0u64; n];
    let mut cards = deck.card_values();
    for_each_permutation(&mut cards, |order| {
        let equal = order.windows(2).filter(|w| w[0] == w[1]).count();
        counts[equal] += 1;
    });
    Ok(AdjacencyDistribution {
        deck: deck.clone(),
        counts_by_k: trim(counts.into_iter().map(BigInteger::from).collect()),
    })
}

/// `count / total` as a float, for display next to Monte Carlo estimates.
pub fn approximate(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
