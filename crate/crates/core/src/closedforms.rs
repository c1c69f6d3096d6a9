//! Closed forms for the rook polynomials of the two complete condition sets.

use num_traits::Zero;

use crate::exactnum::{binomial, factorial, BigInteger};
use crate::polynomial::IntPolynomial;

fn alternating(n: u64, term: impl Fn(u64) -> BigInteger) -> IntPolynomial {
    let mut coeffs = vec![BigInteger::zero(); n as usize + 1];
    for k in 0..=n {
        let c = term(k);
        coeffs[(n - k) as usize] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `l_n(x) = Σ_k (−1)^k C(n,k)^2 k! x^{n−k}`, the rook polynomial of the
/// complete `n × n` board.
pub fn full_board_poly(n: u64) -> IntPolynomial {
    alternating(n, |k| binomial(n, k as i64).pow(2) * factorial(k))
}

/// `l*_n(x) = Σ_k (−1)^k C(n,k) C(n−1,k) k! x^{n−k}`, the rook polynomial of
/// all "i immediately followed by j" conditions on `[n]`.
pub fn full_adjacency_poly(n: u64) -> IntPolynomial {
    if n == 0 {
        return IntPolynomial::one();
    }
    alternating(n, |k| binomial(n, k as i64) * binomial(n - 1, k as i64) * factorial(k))
}
