//! Exact spectral toolkit: characteristic polynomials over arbitrary
//! precision integers, inertia and symmetry from coefficient signs, and a
//! floating eigensolver for reporting.

mod charpoly;
mod inertia;
mod jacobi;
mod matrix;

pub use charpoly::{berkowitz, char_poly, IntPolynomial};
pub use inertia::{
    inertia_exact, inertia_from_coeffs, is_spectrum_symmetric, rank_elimination, rank_exact,
    Inertia,
};
pub use jacobi::{jacobi_eigen, Spectrum, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL};
pub use matrix::SquareMatrix;

use num_bigint::BigInt;

use crate::eccmatrix::EccMatrix;
use crate::Result;

/// Widens an eccentricity matrix to arbitrary precision for the exact path.
pub fn big_matrix_of(e: &EccMatrix) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(e.n(), |i, j| BigInt::from(e.get(i + 1, j + 1)))
}

/// Converts an eccentricity matrix to floating point for the eigensolver.
pub fn float_matrix_of(e: &EccMatrix) -> SquareMatrix<f64> {
    SquareMatrix::from_fn(e.n(), |i, j| e.get(i + 1, j + 1) as f64)
}

/// Exact characteristic polynomial of an eccentricity matrix.
pub fn char_poly_ecc(e: &EccMatrix) -> IntPolynomial {
    char_poly(&big_matrix_of(e))
}

/// All eigenvalues of an eccentricity matrix by cyclic Jacobi rotations.
pub fn eigenvalues_float(e: &EccMatrix) -> Result<Spectrum> {
    jacobi_eigen(&float_matrix_of(e))
}
