#![allow(dead_code)]

use rookshuffle::exactnum::BigInteger;
use rookshuffle::shuffle::DeckComposition;

/// Every ordered composition of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![];
    }
    (0..1u32 << (n - 1))
        .map(|cuts| {
            let mut parts = vec![];
            let mut run = 1;
            for bit in 0..n - 1 {
                if cuts & (1 << bit) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// Partitions of `n` with parts in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    go(n, n, &mut vec![], &mut out);
    out
}

pub fn deck(counts: &[usize]) -> DeckComposition {
    DeckComposition::new(counts.to_vec()).unwrap()
}

/// Lexicographic next permutation; false once the last one is passed.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `f` on every permutation of `0..n`, in lexicographic order.
pub fn each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// Labeled orderings of the deck with no two equal values adjacent.
pub fn brute_perfect(counts: &[usize]) -> BigInteger {
    let values = deck(counts).card_values();
    let mut count = 0u64;
    each_permutation(values.len(), |p| {
        if p.windows(2).all(|w| values[w[0]] != values[w[1]]) {
            count += 1;
        }
    });
    count.into()
}

/// Permutations π with value(i) ≠ value(π(i)) for every position.
pub fn brute_derangements(counts: &[usize]) -> BigInteger {
    let values = deck(counts).card_values();
    let mut count = 0u64;
    each_permutation(values.len(), |p| {
        if p.iter().enumerate().all(|(i, &j)| values[i] != values[j]) {
            count += 1;
        }
    });
    count.into()
}

pub fn ints(v: &[i64]) -> Vec<BigInteger> {
    v.iter().map(|&x| BigInteger::from(x)).collect()
}
