//! Exact inertia, rank and spectral-symmetry tests read off characteristic
//! polynomials of symmetric matrices.
//!
//! For a real-rooted polynomial the Descartes sign-variation count is exact,
//! so the positive-root count of a symmetric matrix needs no root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::charpoly::IntPolynomial;
use super::matrix::SquareMatrix;
use crate::{Error, Result};

/// Signature triple of a symmetric matrix: positive, negative and zero
/// eigenvalue counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Inertia { plus, minus, zero }
    }

    pub fn n(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

/// Inertia from the ascending coefficients of a real-rooted characteristic
/// polynomial. The zero count is the multiplicity of the root 0; the
/// positive count is the number of sign variations among the nonzero
/// coefficients (Descartes, with equality for real-rooted input).
pub fn inertia_from_coeffs<T: Signed + Zero>(coeffs: &[T]) -> Result<Inertia> {
    let n = coeffs.len().saturating_sub(1);
    let zero = match coeffs.iter().position(|c| !c.is_zero()) {
        Some(k) => k,
        None => return Err(Error::Invalid("zero polynomial has no inertia".into())),
    };
    if coeffs.last().map_or(true, |c| c.is_zero()) {
        return Err(Error::Invalid(
            "leading coefficient must be nonzero".into(),
        ));
    }
    let mut plus = 0;
    let mut last_negative = coeffs[zero].is_negative();
    for c in &coeffs[zero + 1..] {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if neg != last_negative {
            plus += 1;
            last_negative = neg;
        }
    }
    Ok(Inertia {
        plus,
        minus: n - zero - plus,
        zero,
    })
}

/// Exact inertia of the symmetric matrix behind `p`.
pub fn inertia_exact(p: &IntPolynomial) -> Result<Inertia> {
    inertia_from_coeffs(p.coeffs())
}

/// Whether the root multiset of `p` is symmetric under negation:
/// `p(-x) = (-1)^n p(x)`, i.e. every coefficient `c_k` with `k` of the
/// opposite parity to `n` vanishes.
pub fn is_spectrum_symmetric(p: &IntPolynomial) -> bool {
    let n = p.degree();
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| (k % 2 == n % 2) || c.is_zero())
}

/// Rank of the matrix behind the characteristic polynomial `p` of order `n`:
/// `n` minus the multiplicity of the root 0.
pub fn rank_exact(p: &IntPolynomial, n: usize) -> Result<usize> {
    if p.degree() != n {
        return Err(Error::Invalid(format!(
            "polynomial degree {} does not match matrix order {n}",
            p.degree()
        )));
    }
    Ok(n - inertia_exact(p)?.zero)
}

/// Rank by fraction-free Gaussian elimination (Bareiss) with full pivoting;
/// the independent route used to cross-check `rank_exact`.
pub fn rank_elimination(m: &SquareMatrix<BigInt>) -> usize {
    let n = m.n();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    while r < n {
        let pivot = (r..n)
            .flat_map(|i| (r..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        a.swap(r, pi);
        for row in a.iter_mut() {
            row.swap(r, pj);
        }
        for i in (r + 1)..n {
            for j in (r + 1)..n {
                let num = &a[i][j] * &a[r][r] - &a[i][r] * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
        }
        prev = a[r][r].clone();
        r += 1;
    }
    r
}
