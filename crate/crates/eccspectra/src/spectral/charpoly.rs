//! Division-free characteristic polynomials over an arbitrary commutative
//! ring, via the Samuelson–Berkowitz vector recurrence.
//!
//! Everything stays in the ring: no fractions appear, so the same code runs
//! over big integers (the exact path) and over rationals (test oracles).
//! Coefficient growth is bounded by Hadamard-type estimates, which is why
//! the integer instantiation uses arbitrary precision.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::SquareMatrix;

/// Ascending coefficients `c_0..c_n` of `det(xI - M)`; the result is monic.
pub fn berkowitz<T>(m: &SquareMatrix<T>) -> Vec<T>
where
    T: Clone + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>,
{
    let n = m.n();
    if n == 0 {
        return vec![T::one()];
    }
    // Degree-descending coefficients for the leading principal r x r block.
    let mut poly = vec![T::one(), m.get(0, 0).clone().neg()];
    for r in 1..n {
        // Toeplitz column t = (1, -d, -R C, -R M C, ..., -R M^{r-1} C)
        // with M the leading r x r block, R the new row, C the new column.
        let mut t = Vec::with_capacity(r + 2);
        t.push(T::one());
        t.push(m.get(r, r).clone().neg());
        let mut pow: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            if k > 0 {
                let mut next = Vec::with_capacity(r);
                for i in 0..r {
                    let mut acc = T::zero();
                    for (j, pj) in pow.iter().enumerate() {
                        let mij = m.get(i, j);
                        if !mij.is_zero() && !pj.is_zero() {
                            acc = acc + mij.clone() * pj.clone();
                        }
                    }
                    next.push(acc);
                }
                pow = next;
            }
            let mut s = T::zero();
            for (j, pj) in pow.iter().enumerate() {
                let rj = m.get(r, j);
                if !rj.is_zero() && !pj.is_zero() {
                    s = s + rj.clone() * pj.clone();
                }
            }
            t.push(s.neg());
        }
        // poly <- conv(t, poly) truncated to length r + 2
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..(r + 2) {
            let mut acc = T::zero();
            let lo = (i + 1).saturating_sub(t.len());
            for j in lo..=i.min(poly.len() - 1) {
                if !t[i - j].is_zero() && !poly[j].is_zero() {
                    acc = acc + t[i - j].clone() * poly[j].clone();
                }
            }
            next.push(acc);
        }
        poly = next;
    }
    poly.reverse();
    poly
}

/// Integer polynomial with arbitrary-precision coefficients, stored
/// degree-ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_ascending(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        IntPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    /// Degree-descending coefficient list, one line, space-separated.
    pub fn dump_descending(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump_descending())
    }
}

/// Exact monic characteristic polynomial `det(xI - M)` of an integer matrix.
pub fn char_poly(m: &SquareMatrix<BigInt>) -> IntPolynomial {
    IntPolynomial::from_ascending(berkowitz(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> SquareMatrix<BigInt> {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_edge_matrix() {
        let p = char_poly(&big(&[&[0, 1], &[1, 0]]));
        assert_eq!(p.dump_descending(), "1 0 -1"); // x^2 - 1
    }

    #[test]
    fn zero_matrix_gives_x_to_the_n() {
        for n in 1..6 {
            let m = SquareMatrix::from_fn(n, |_, _| BigInt::zero());
            let p = char_poly(&m);
            assert_eq!(p.degree(), n);
            assert!(p.is_monic());
            assert!(p.coeffs()[..n].iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn known_3x3() {
        // det(xI - A) for A = [[2,1,0],[1,2,1],[0,1,2]]:
        // x^3 - 6x^2 + 10x - 4
        let p = char_poly(&big(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]));
        assert_eq!(p.dump_descending(), "1 -6 10 -4");
    }

    #[test]
    fn constant_term_is_signed_determinant() {
        // det = -2 for this matrix, n = 2 so c_0 = det(-A) = det(A)
        let p = char_poly(&big(&[&[1, 2], &[2, 2]]));
        assert_eq!(p.coeff(0), &BigInt::from(-2));
    }
}
