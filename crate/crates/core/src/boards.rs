//! Restricted-position boards and linear-adjacency condition sets.
//!
//! A [`Board`] is a set of cells inside the `n × n` grid; a permutation π
//! "hits" cell `(i, j)` when `π(i) = j`. An [`AdjacencyConditionSet`] is a set
//! of ordered pairs `(i, j)`, each read as "i is immediately followed by j"
//! in one-line notation. Both families have rank `ρ(A) = |A|` for every
//! compatible subset `A`, so one inversion routine turns their rook numbers
//! into hit numbers.
//!
//! Cells and pairs are 1-based throughout, matching the text file format.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{for_each_permutation, MAX_ENUMERATION_SIZE};
use crate::exactnum::{factorial, BigInteger};
use crate::polynomial::IntPolynomial;

/// Node budget for the compatible-subset search. Any set of up to 24
/// conditions always fits, since its full binary search tree has fewer than
/// 2^25 nodes.
pub const MAX_SEARCH_NODES: u64 = 1 << 26;

pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("cell ({}, {}) lies outside the {n}x{n} grid", .cell.0, .cell.1)]
    OutOfRange { cell: Cell, n: usize },
    #[error("condition ({0}, {0}) would require {0} to follow itself")]
    SelfAdjacency(usize),
    #[error("ambient size {n} too large for enumeration (limit {max})")]
    TooLargeForEnumeration { n: usize, max: usize },
    #[error("condition set too large: compatible-subset search exceeded {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Rook numbers `r_k`, indexed by the number of placed rooks (or chosen
/// compatible conditions). Trailing zeros are trimmed, so `r[0] = 1` is always
/// the first entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookNumbers(Vec<BigInteger>);

/// Hit numbers `h_k`: how many permutations satisfy exactly `k` conditions.
/// Trailing zeros are trimmed; the entries always sum to `n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitNumbers(Vec<BigInteger>);

macro_rules! count_vector {
    ($ty:ident) => {
        impl $ty {
            fn trimmed(mut v: Vec<BigInteger>) -> Self {
                while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
                    v.pop();
                }
                $ty(v)
            }

            pub fn as_slice(&self) -> &[BigInteger] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<BigInteger> {
                self.0
            }

            /// Entry `k`, zero past the end.
            pub fn get(&self, k: usize) -> BigInteger {
                self.0.get(k).cloned().unwrap_or_default()
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn total(&self) -> BigInteger {
                self.0.iter().sum()
            }
        }

        impl fmt::Display for $ty {
            /// Space-separated entries.
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    };
}

count_vector!(RookNumbers);
count_vector!(HitNumbers);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Board {
    pub fn new(n: usize) -> Self {
        Self { n, cells: BTreeSet::new() }
    }

    pub fn with_cells(n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self, BoardError> {
        let mut board = Self::new(n);
        for cell in cells {
            board.insert(cell)?;
        }
        Ok(board)
    }

    /// The complete `n × n` board.
    pub fn full(n: usize) -> Self {
        let cells = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        Self { n, cells }
    }

    /// The main diagonal; its hit numbers are the rencontres numbers.
    pub fn diagonal(n: usize) -> Self {
        Self { n, cells: (1..=n).map(|i| (i, i)).collect() }
    }

    /// Returns whether the cell was newly added.
    pub fn insert(&mut self, cell: Cell) -> Result<bool, BoardError> {
        let (i, j) = cell;
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(BoardError::OutOfRange { cell, n: self.n });
        }
        Ok(self.cells.insert(cell))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Places `other` in the rows and columns after this board's, so the two
    /// parts share no row or column.
    pub fn direct_sum(&self, other: &Board) -> Board {
        let shift = self.n;
        let cells = self
            .cells
            .iter()
            .copied()
            .chain(other.cells.iter().map(|&(i, j)| (i + shift, j + shift)))
            .collect();
        Board { n: self.n + other.n, cells }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (i, j) in &self.cells {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

impl FromStr for Board {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match parse_condition_file(s)? {
            ConditionFile::Board(b) => Ok(b),
            ConditionFile::Adjacency(_) => Err(ParseError {
                line: 1,
                message: "expected a board header, found an adjacency header".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyConditionSet {
    n: usize,
    pairs: BTreeSet<Cell>,
}

impl AdjacencyConditionSet {
    pub fn new(n: usize) -> Self {
        Self { n, pairs: BTreeSet::new() }
    }

    pub fn with_pairs(n: usize, pairs: impl IntoIterator<Item = Cell>) -> Result<Self, BoardError> {
        let mut set = Self::new(n);
        for pair in pairs {
            set.insert(pair)?;
        }
        Ok(set)
    }

    /// Every ordered pair of distinct elements of `[n]`.
    pub fn full(n: usize) -> Self {
        let pairs = (1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        Self { n, pairs }
    }

    pub fn insert(&mut self, pair: Cell) -> Result<bool, BoardError> {
        let (i, j) = pair;
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(BoardError::OutOfRange { cell: pair, n: self.n });
        }
        if i == j {
            return Err(BoardError::SelfAdjacency(i));
        }
        Ok(self.pairs.insert(pair))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> impl Iterator<Item = Cell> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_compatible(&self) -> bool {
        is_compatible(self)
    }
}

impl fmt::Display for AdjacencyConditionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "adjacency {}", self.n)?;
        for (i, j) in &self.pairs {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

impl FromStr for AdjacencyConditionSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match parse_condition_file(s)? {
            ConditionFile::Adjacency(a) => Ok(a),
            ConditionFile::Board(_) => Err(ParseError {
                line: 1,
                message: "expected an \"adjacency n\" header".into(),
            }),
        }
    }
}

/// Either kind of condition file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionFile {
    Board(Board),
    Adjacency(AdjacencyConditionSet),
}

/// Parses the board text format: a header line `n` (board) or `adjacency n`,
/// then one `i j` line per cell or pair. `#` starts a comment; blank lines
/// are ignored.
pub fn parse_condition_file(text: &str) -> Result<ConditionFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, message: String| ParseError { line, message };
    let parse_index = |line: usize, tok: &str| {
        tok.parse::<usize>().map_err(|_| err(line, format!("expected a non-negative integer, found {tok:?}")))
    };

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header line".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let mut file = match tokens.as_slice() {
        [n] => ConditionFile::Board(Board::new(parse_index(header_line, n)?)),
        ["adjacency", n] => ConditionFile::Adjacency(AdjacencyConditionSet::new(parse_index(header_line, n)?)),
        _ => return Err(err(header_line, format!("expected \"n\" or \"adjacency n\", found {header:?}"))),
    };

    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = tokens.as_slice() else {
            return Err(err(line, format!("expected two indices \"i j\", found {content:?}")));
        };
        let entry = (parse_index(line, a)?, parse_index(line, b)?);
        let inserted = match &mut file {
            ConditionFile::Board(board) => board.insert(entry),
            ConditionFile::Adjacency(set) => set.insert(entry),
        }
        .map_err(|e| err(line, e.to_string()))?;
        if !inserted {
            return Err(err(line, format!("duplicate entry ({}, {})", entry.0, entry.1)));
        }
    }
    Ok(file)
}

/// Number of ways to place `k` non-attacking rooks on the board, for every `k`.
///
/// Backtracks row by row, pruning used columns; the cost is proportional to
/// the number of placements.
pub fn rook_numbers(b: &Board) -> RookNumbers {
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); b.n];
    for (i, j) in b.cells() {
        rows[i - 1].push(j - 1);
    }
    rows.retain(|r| !r.is_empty());

    fn place(rows: &[Vec<usize>], used: &mut [bool], depth: usize, counts: &mut [u64]) {
        let Some((row, rest)) = rows.split_first() else {
            counts[depth] += 1;
            return;
        };
        place(rest, used, depth, counts);
        for &c in row {
            if !used[c] {
                used[c] = true;
                place(rest, used, depth + 1, counts);
                used[c] = false;
            }
        }
    }

    let mut counts = vec![0u64; rows.len() + 1];
    place(&rows, &mut vec![false; b.n], 0, &mut counts);
    RookNumbers::trimmed(counts.into_iter().map(BigInteger::from).collect())
}

/// `Σ_k (−1)^k r_k x^{n−k}`.
pub fn rook_polynomial_from_numbers(n: usize, rook: &RookNumbers) -> IntPolynomial {
    let mut coeffs = vec![BigInteger::zero(); n + 1];
    for (k, r) in rook.as_slice().iter().enumerate() {
        assert!(k <= n, "rook number r_{k} exceeds ambient size {n}");
        coeffs[n - k] = if k % 2 == 0 { r.clone() } else { -r };
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Reads the signed rook numbers back out of a rook polynomial of ambient
/// size `n`: `R_j = (−1)^j [x^{n−j}] p`.
pub fn rook_numbers_from_polynomial(n: usize, p: &IntPolynomial) -> RookNumbers {
    let r = (0..=n)
        .map(|j| {
            let c = p.coeff(n - j);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    RookNumbers::trimmed(r)
}

pub fn rook_polynomial(b: &Board) -> IntPolynomial {
    rook_polynomial_from_numbers(b.n, &rook_numbers(b))
}

/// Inverts `Σ_i h_i C(i, j) = r_j (n−j)!`: builds `Σ_j r_j (n−j)! t^j` and
/// substitutes `t → t − 1`. Valid for any condition family with `ρ(A) = |A|`.
pub fn hits_from_rook_numbers(n: usize, rook: &RookNumbers) -> HitNumbers {
    let weighted: Vec<BigInteger> = rook
        .as_slice()
        .iter()
        .enumerate()
        .map(|(j, r)| r * factorial((n - j) as u64))
        .collect();
    let hits = IntPolynomial::from_coeffs(weighted).substitute_shifted();
    HitNumbers::trimmed(hits.into_coeffs())
}

pub fn hit_numbers_from_rook(b: &Board) -> HitNumbers {
    hits_from_rook_numbers(b.n, &rook_numbers(b))
}

fn enumeration_guard(n: usize) -> Result<(), BoardError> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(BoardError::TooLargeForEnumeration { n, max: MAX_ENUMERATION_SIZE });
    }
    Ok(())
}

fn tally(counts: Vec<u64>) -> HitNumbers {
    HitNumbers::trimmed(counts.into_iter().map(BigInteger::from).collect())
}

/// Hit numbers by running through all of `S_n`.
pub fn hit_numbers_bruteforce(b: &Board) -> Result<HitNumbers, BoardError> {
    enumeration_guard(b.n)?;
    let n = b.n;
    let mut grid = vec![false; n * n];
    for (i, j) in b.cells() {
        grid[(i - 1) * n + (j - 1)] = true;
    }
    let mut counts = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, |p| {
        let hits = p.iter().enumerate().filter(|&(i, &j)| grid[i * n + j]).count();
        counts[hits] += 1;
    });
    Ok(tally(counts))
}

/// True iff the pairs have distinct predecessors, distinct successors, and
/// contain no directed cycle, i.e. they chain into disjoint paths.
pub fn is_compatible(a: &AdjacencyConditionSet) -> bool {
    let mut chains = Chains::new(a.n);
    a.pairs().all(|(i, j)| chains.try_link(i - 1, j - 1))
}

/// Successor/predecessor links of a partial set of adjacency conditions.
struct Chains {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
}

impl Chains {
    fn new(n: usize) -> Self {
        Self { succ: vec![None; n], pred: vec![None; n] }
    }

    fn can_link(&self, i: usize, j: usize) -> bool {
        if self.succ[i].is_some() || self.pred[j].is_some() {
            return false;
        }
        // Linking i → j closes a cycle iff j's chain already leads to i.
        let mut cur = j;
        while let Some(next) = self.succ[cur] {
            if next == i {
                return false;
            }
            cur = next;
        }
        true
    }

    fn try_link(&mut self, i: usize, j: usize) -> bool {
        if !self.can_link(i, j) {
            return false;
        }
        self.succ[i] = Some(j);
        self.pred[j] = Some(i);
        true
    }

    fn unlink(&mut self, i: usize, j: usize) {
        self.succ[i] = None;
        self.pred[j] = None;
    }
}

/// Number of compatible `k`-subsets of the condition set, for every `k`.
pub fn adjacency_rook_numbers(a: &AdjacencyConditionSet) -> Result<RookNumbers, BoardError> {
    let pairs: Vec<Cell> = a.pairs().map(|(i, j)| (i - 1, j - 1)).collect();

    struct Search<'a> {
        pairs: &'a [Cell],
        chains: Chains,
        counts: Vec<u64>,
        nodes: u64,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize, depth: usize) -> Result<(), BoardError> {
            self.nodes += 1;
            if self.nodes > MAX_SEARCH_NODES {
                return Err(BoardError::SearchBudgetExceeded { budget: MAX_SEARCH_NODES });
            }
            let Some(&(i, j)) = self.pairs.get(idx) else {
                self.counts[depth] += 1;
                return Ok(());
            };
            self.run(idx + 1, depth)?;
            if self.chains.try_link(i, j) {
                let res = self.run(idx + 1, depth + 1);
                self.chains.unlink(i, j);
                res?;
            }
            Ok(())
        }
    }

    let mut search = Search {
        pairs: &pairs,
        chains: Chains::new(a.n),
        counts: vec![0; a.n.max(1)],
        nodes: 0,
    };
    search.run(0, 0)?;
    Ok(RookNumbers::trimmed(search.counts.into_iter().map(BigInteger::from).collect()))
}

/// `Σ_{A ⊆ B compatible} (−1)^{|A|} x^{n−|A|}`.
pub fn generalized_rook_polynomial(a: &AdjacencyConditionSet) -> Result<IntPolynomial, BoardError> {
    Ok(rook_polynomial_from_numbers(a.n, &adjacency_rook_numbers(a)?))
}

/// How many permutations (one-line notation) satisfy exactly `k` of the
/// adjacency conditions, via rook-number inversion.
pub fn adjacency_hit_numbers(a: &AdjacencyConditionSet) -> Result<HitNumbers, BoardError> {
    Ok(hits_from_rook_numbers(a.n, &adjacency_rook_numbers(a)?))
}

/// Same as [`adjacency_hit_numbers`], by running through all of `S_n`.
pub fn adjacency_hit_numbers_bruteforce(a: &AdjacencyConditionSet) -> Result<HitNumbers, BoardError> {
    enumeration_guard(a.n)?;
    let n = a.n;
    let mut follows = vec![false; n * n];
    for (i, j) in a.pairs() {
        follows[(i - 1) * n + (j - 1)] = true;
    }
    let mut counts = vec![0u64; n.max(1)];
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, |p| {
        let hits = p.windows(2).filter(|w| follows[w[0] * n + w[1]]).count();
        counts[hits] += 1;
    });
    Ok(tally(counts))
}

/// Exhaustive count of permutations avoiding every adjacency condition.
pub fn avoiders_bruteforce(a: &AdjacencyConditionSet) -> Result<BigInteger, BoardError> {
    Ok(adjacency_hit_numbers_bruteforce(a)?.get(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ints(v: &[i64]) -> Vec<BigInteger> {
        v.iter().map(|&x| BigInteger::from(x)).collect()
    }

    fn b_prime() -> Board {
        Board::with_cells(3, [(2, 2), (3, 2), (3, 3)]).unwrap()
    }

    #[test]
    fn three_cell_board_rook_and_hit_numbers() {
        let b = b_prime();
        assert_eq!(rook_numbers(&b).as_slice(), ints(&[1, 3, 1]));
        assert_eq!(hit_numbers_bruteforce(&b).unwrap().as_slice(), ints(&[1, 4, 1]));
        assert_eq!(hit_numbers_from_rook(&b).as_slice(), ints(&[1, 4, 1]));
        assert_eq!(rook_polynomial(&b).to_string(), "x^3 - 3x^2 + x");
        assert_eq!(rook_polynomial(&b).phi(), BigInteger::one());
    }

    #[test]
    fn empty_board() {
        assert_eq!(rook_numbers(&Board::new(3)).as_slice(), ints(&[1]));
        assert_eq!(hit_numbers_bruteforce(&Board::new(3)).unwrap().as_slice(), ints(&[6]));
        assert_eq!(hit_numbers_from_rook(&Board::new(3)).as_slice(), ints(&[6]));
        assert_eq!(rook_polynomial(&Board::new(2)), IntPolynomial::x_pow(2));
    }

    #[test]
    fn full_board_rook_numbers_match_formula() {
        for n in 0..=5u64 {
            let r = rook_numbers(&Board::full(n as usize));
            for k in 0..=n {
                let expected = factorial(k) * crate::exactnum::binomial(n, k as i64).pow(2);
                assert_eq!(r.get(k as usize), expected, "n = {n}, k = {k}");
            }
        }
        assert_eq!(hit_numbers_from_rook(&Board::full(2)).as_slice(), ints(&[0, 0, 2]));
    }

    #[test]
    fn diagonal_gives_rencontres_numbers() {
        let d = Board::diagonal(4);
        assert_eq!(hit_numbers_bruteforce(&d).unwrap().as_slice(), ints(&[9, 8, 6, 0, 1]));
        assert_eq!(hit_numbers_from_rook(&d).as_slice(), ints(&[9, 8, 6, 0, 1]));
        let p = rook_polynomial(&d);
        assert_eq!(p.to_string(), "x^4 - 4x^3 + 6x^2 - 4x + 1");
        assert_eq!(p.phi(), BigInteger::from(9));
    }

    #[test]
    fn enumeration_guard_rejects_large_boards() {
        assert_eq!(
            hit_numbers_bruteforce(&Board::new(11)),
            Err(BoardError::TooLargeForEnumeration { n: 11, max: 10 })
        );
        assert!(avoiders_bruteforce(&AdjacencyConditionSet::new(11)).is_err());
    }

    #[test]
    fn cells_are_validated() {
        assert_eq!(Board::with_cells(2, [(3, 1)]), Err(BoardError::OutOfRange { cell: (3, 1), n: 2 }));
        assert!(Board::with_cells(2, [(0, 1)]).is_err());
        assert_eq!(AdjacencyConditionSet::with_pairs(3, [(2, 2)]), Err(BoardError::SelfAdjacency(2)));
    }

    #[test]
    fn compatibility_examples() {
        let set = |n, p: &[Cell]| AdjacencyConditionSet::with_pairs(n, p.iter().copied()).unwrap();
        assert!(is_compatible(&set(2, &[(1, 2)])));
        assert!(!is_compatible(&set(2, &[(1, 2), (2, 1)])));
        assert!(!is_compatible(&set(3, &[(1, 2), (1, 3)])));
        assert!(!is_compatible(&set(3, &[(1, 3), (2, 3)])));
        assert!(is_compatible(&set(4, &[(1, 2), (2, 3), (3, 4)])));
        assert!(!is_compatible(&set(3, &[(1, 2), (2, 3), (3, 1)])));
        assert!(is_compatible(&AdjacencyConditionSet::new(3)));
    }

    #[test]
    fn cycle_pair_is_unsatisfiable_in_one_line_notation() {
        let cycle = AdjacencyConditionSet::with_pairs(2, [(1, 2), (2, 1)]).unwrap();
        // Exhaustive: no permutation of [2] satisfies both conditions.
        assert_eq!(adjacency_hit_numbers_bruteforce(&cycle).unwrap().as_slice(), ints(&[0, 2]));
        assert_eq!(adjacency_hit_numbers(&cycle).unwrap().as_slice(), ints(&[0, 2]));
    }

    #[test]
    fn generalized_rook_polynomial_examples() {
        let full = generalized_rook_polynomial(&AdjacencyConditionSet::full(4)).unwrap();
        assert_eq!(full.to_string(), "x^4 - 12x^3 + 36x^2 - 24x");
        assert_eq!(full.phi(), BigInteger::zero());

        let empty = generalized_rook_polynomial(&AdjacencyConditionSet::new(3)).unwrap();
        assert_eq!(empty, IntPolynomial::x_pow(3));
        assert_eq!(empty.phi(), BigInteger::from(6));

        let single = AdjacencyConditionSet::with_pairs(3, [(1, 2)]).unwrap();
        let p = generalized_rook_polynomial(&single).unwrap();
        assert_eq!(p.to_string(), "x^3 - x^2");
        assert_eq!(p.phi(), BigInteger::from(4));
    }

    #[test]
    fn avoiders_examples() {
        assert_eq!(avoiders_bruteforce(&AdjacencyConditionSet::full(4)).unwrap(), BigInteger::zero());
        assert_eq!(avoiders_bruteforce(&AdjacencyConditionSet::new(4)).unwrap(), BigInteger::from(24));
        let single = AdjacencyConditionSet::with_pairs(3, [(1, 2)]).unwrap();
        assert_eq!(avoiders_bruteforce(&single).unwrap(), BigInteger::from(4));
    }

    #[test]
    fn search_budget_is_enforced() {
        // A long path: every subset is compatible, so the search tree is full.
        let n = 40;
        let path = AdjacencyConditionSet::with_pairs(n, (1..n).map(|i| (i, i + 1))).unwrap();
        assert_eq!(
            adjacency_rook_numbers(&path),
            Err(BoardError::SearchBudgetExceeded { budget: MAX_SEARCH_NODES })
        );
        // 24 conditions always fit.
        let short = AdjacencyConditionSet::with_pairs(25, (1..25).map(|i| (i, i + 1))).unwrap();
        let r = adjacency_rook_numbers(&short).unwrap();
        for k in 0..=24 {
            assert_eq!(r.get(k), crate::exactnum::binomial(24, k as i64));
        }
    }

    #[test]
    fn direct_sum_layout() {
        let a = Board::with_cells(2, [(1, 2)]).unwrap();
        let b = Board::with_cells(1, [(1, 1)]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.n(), 3);
        assert_eq!(s.cells().collect::<Vec<_>>(), vec![(1, 2), (3, 3)]);
    }

    #[test]
    fn parse_board_file() {
        let text = "# three-cell board\n3\n2 2\n3 2   # lower left\n\n3 3\n";
        let b: Board = text.parse().unwrap();
        assert_eq!(b, b_prime());
        assert_eq!(b.to_string().parse::<Board>().unwrap(), b);

        let adj: AdjacencyConditionSet = "adjacency 3\n1 2\n2 3\n".parse().unwrap();
        assert_eq!(adj.len(), 2);
        assert_eq!(adj.to_string().parse::<AdjacencyConditionSet>().unwrap(), adj);
        assert!(matches!(parse_condition_file("2\n"), Ok(ConditionFile::Board(b)) if b.is_empty()));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("x\n", 1),
            ("3\n1 2\n1\n", 3),
            ("3\n1 2\n\n4 1\n", 4),
            ("3\n1 2\n1 2\n", 3),
            ("adjacency 3\n# c\n2 2\n", 3),
            ("3\n1 -2\n", 2),
            ("adjacency\n", 1),
        ];
        for (text, line) in cases {
            let err = parse_condition_file(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
        assert!("adjacency 2\n".parse::<Board>().is_err());
        assert!("2\n".parse::<AdjacencyConditionSet>().is_err());
    }
}
