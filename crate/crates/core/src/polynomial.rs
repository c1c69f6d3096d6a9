//! Dense univariate polynomials with exact integer coefficients.
//!
//! Coefficients are stored lowest power first with no trailing zeros; the
//! zero polynomial has no coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exactnum::BigInteger;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInteger>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInteger::one())
    }

    pub fn constant(c: BigInteger) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^power`
    pub fn x_pow(power: usize) -> Self {
        Self::monomial(BigInteger::one(), power)
    }

    /// `c · x^power`
    pub fn monomial(c: BigInteger, power: usize) -> Self {
        let mut coeffs = vec![BigInteger::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Takes coefficients lowest power first and strips trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInteger>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInteger::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInteger] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInteger> {
        self.coeffs
    }

    /// Coefficient of `x^power`, zero beyond the degree.
    pub fn coeff(&self, power: usize) -> BigInteger {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInteger> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInteger) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Binary exponentiation; `p^0 = 1`.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The linear functional sending `x^k` to `k!`.
    pub fn phi(&self) -> BigInteger {
        let mut fact = BigInteger::one();
        let mut total = BigInteger::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                fact *= k;
            }
            total += c * &fact;
        }
        total
    }

    /// `q(t) = p(t + shift)`, by Horner's rule on `(t + shift)`.
    pub fn shift(&self, shift: i64) -> Self {
        let shift = BigInteger::from(shift);
        let mut acc: Vec<BigInteger> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // acc ← acc · (t + shift) + c
            let mut next = vec![BigInteger::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] += a * &shift;
            }
            next[0] += c;
            acc = next;
        }
        Self::from_coeffs(acc)
    }

    /// `q(t) = p(t − 1)`. Turns `Σ_j R_j (n−j)! t^j` into the hit-count polynomial.
    pub fn substitute_shifted(&self) -> Self {
        self.shift(-1)
    }

    /// `q(t) = p(t + 1)`, the inverse of [`substitute_shifted`](Self::substitute_shifted).
    pub fn substitute_unshifted(&self) -> Self {
        self.shift(1)
    }

    /// Renders highest power first, e.g. `x^4 - 12x^3 + 36x^2 - 24x`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if power == 0 || !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            match power {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&power.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    /// Schoolbook convolution.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInteger::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}
