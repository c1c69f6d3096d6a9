//! Exhaustive permutation enumeration for the brute-force oracles.

/// Largest ambient size the exhaustive oracles accept (10! ≈ 3.6 million).
pub const MAX_ENUMERATION_SIZE: usize = 10;

/// Calls `visit` once for every ordering of `items` (Heap's algorithm,
/// iterative). Duplicate values are still visited once per position
/// permutation, so labeled counts come out right.
pub fn for_each_permutation<T, F>(items: &mut [T], mut visit: F)
where
    F: FnMut(&[T]),
{
    let n = items.len();
    visit(items);
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(stack[i], i);
            }
            visit(items);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn visits_every_permutation_once() {
        for n in 0..=6usize {
            let mut items: Vec<usize> = (0..n).collect();
            let mut seen = HashSet::new();
            let mut visits = 0;
            for_each_permutation(&mut items, |p| {
                visits += 1;
                seen.insert(p.to_vec());
            });
            let expected: usize = (1..=n).product();
            assert_eq!(visits, expected);
            assert_eq!(seen.len(), expected);
        }
    }
}
