//! Exact integer and rational arithmetic, plus the small amount of number
//! theory the shuffle reports need (factorials, binomials, a probable-prime
//! test and trial division).
//!
//! Integers are `num_bigint::BigInt` and rationals `num_rational::BigRational`;
//! the latter is always kept in lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use num_bigint::BigInt as BigInteger;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid number literal {0:?}")]
    Parse(String),
}

/// `n!`
pub fn factorial(n: u64) -> BigInteger {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    BigInteger::from(acc)
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInteger {
    if k < 0 || k as u64 > n {
        return BigInteger::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInteger::from(acc)
}

/// Builds the reduced fraction `num / den` with a positive denominator.
pub fn reduce(num: BigInteger, den: BigInteger) -> Result<BigRational, NumError> {
    if den.is_zero() {
        return Err(NumError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

/// Parses a decimal integer, with an optional leading sign.
pub fn parse_integer(s: &str) -> Result<BigInteger, NumError> {
    BigInteger::from_str(s.trim()).map_err(|_| NumError::Parse(s.to_owned()))
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational, NumError> {
    match s.split_once('/') {
        Some((num, den)) => reduce(parse_integer(num)?, parse_integer(den)?),
        None => Ok(BigRational::from_integer(parse_integer(s)?)),
    }
}

/// Renders `num/den`, or just `num` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Inserts a comma every three digits, leaving any sign in place.
pub fn group_digits(s: &str) -> String {
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s),
    };
    let mut out = String::with_capacity(digits.len() + digits.len() / 3 + 1);
    out.push_str(sign);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// Decimal expansion of `q` with exactly `digits` fractional digits,
/// rounded half-to-even.
pub fn decimal_string(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInteger::from(10u8), digits);
    let scaled = q.numer().abs() * &scale;
    let den = q.denom();
    let (mut quo, rem) = scaled.div_rem(den);
    let twice = rem * 2u8;
    if twice > *den || (twice == *den && quo.is_odd()) {
        quo += 1u8;
    }
    let (int_part, frac_part) = quo.div_rem(&scale);
    let mut out = String::new();
    if q.is_negative() && !quo.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac_part.to_string(), width = digits));
    }
    out
}

/// First 64 primes: trial-division prefilter and Miller–Rabin bases for
/// inputs beyond 64 bits.
const SMALL_PRIMES: [u32; 64] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
    307, 311,
];

/// Bases that make Miller–Rabin deterministic for every `n < 2^64`.
const U64_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Primality test: exact for `n < 2^64`, otherwise strong probable-prime to
/// the first 64 prime bases. Composites below `2^64` are never accepted.
pub fn is_probable_prime(n: &BigInteger) -> bool {
    if n.sign() == Sign::Minus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let n = n.magnitude();
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &U64_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mul_mod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow_mod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base);
            }
            base = mul_mod(base, base);
            exp >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &U64_BASES {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorMap(Vec<(BigInteger, u32)>);

impl FactorMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[(BigInteger, u32)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent_of(&self, prime: u64) -> u32 {
        let prime = BigInteger::from(prime);
        self.0.iter().find(|(p, _)| *p == prime).map_or(0, |&(_, e)| e)
    }

    /// Product of `prime^exponent` over all entries.
    pub fn product(&self) -> BigInteger {
        self.0
            .iter()
            .fold(BigInteger::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }
}

impl FromIterator<(u64, u32)> for FactorMap {
    fn from_iter<I: IntoIterator<Item = (u64, u32)>>(iter: I) -> Self {
        let mut entries: Vec<_> = iter.into_iter().map(|(p, e)| (BigInteger::from(p), e)).collect();
        entries.sort();
        FactorMap(entries)
    }
}

impl fmt::Display for FactorMap {
    /// `3^5 * 5^10 * 29`; the empty map renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Divides out every prime `≤ bound`, returning the factors found and the
/// remaining cofactor.
pub fn trial_division(n: &BigInteger, bound: u64) -> (FactorMap, BigInteger) {
    let mut rest = n.abs();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return (FactorMap(factors), rest);
    }
    let mut p = 2u64;
    while p <= bound && !rest.is_one() {
        if is_prime_u64(p) {
            let mut exponent = 0u32;
            loop {
                let (q, r) = rest.div_rem(&BigInteger::from(p));
                if !r.is_zero() {
                    break;
                }
                rest = q;
                exponent += 1;
            }
            if exponent > 0 {
                factors.push((BigInteger::from(p), exponent));
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (FactorMap(factors), rest)
}
