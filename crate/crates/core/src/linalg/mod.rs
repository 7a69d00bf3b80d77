//! Exact rational linear algebra: matrices, determinants, inverses,
//! characteristic polynomials and Laplacian constructions.

mod laplacian;
mod matrix;
mod poly;

pub use laplacian::{laplacian, laplacian_pinv, random_walk_laplacian};
pub use matrix::{Limits, RatMatrix, DEFAULT_MAX_DIM};
pub use poly::RatPolynomial;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{from_usize, Rational};

/// `det(a bᵀ + diag(c)) = c_1⋯c_n (1 + Σ a_i b_i / c_i)`, valid when every
/// `c_i ≠ 0`.
pub fn rank_one_plus_diag_det(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<Rational> {
    if a.len() != c.len() || b.len() != c.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector lengths {}, {}, {}",
            a.len(),
            b.len(),
            c.len()
        )));
    }
    if let Some(i) = c.iter().position(Zero::is_zero) {
        return Err(Error::ZeroDiagonal(i));
    }
    let product: Rational = c.iter().product();
    let sum: Rational = a
        .iter()
        .zip(b)
        .zip(c)
        .map(|((a, b), c)| a * b / c)
        .sum();
    Ok(product * (Rational::one() + sum))
}

/// The matrix `a bᵀ + diag(c)` itself.
pub fn rank_one_plus_diag(a: &[Rational], b: &[Rational], c: &[Rational]) -> RatMatrix {
    let n = c.len();
    RatMatrix::from_fn(n, n, |i, j| {
        let outer = &a[i] * &b[j];
        if i == j {
            outer + &c[i]
        } else {
            outer
        }
    })
}

/// `αI + βJ` of order `n`.
pub fn scalar_plus_ones(alpha: &Rational, beta: &Rational, n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| if i == j { alpha + beta } else { beta.clone() })
}

/// `(αI + βJ)⁻¹ = (1/α) I − β/(α(α + nβ)) J`, defined when `α ≠ 0` and
/// `α + nβ ≠ 0`.
pub fn scalar_plus_ones_inverse(alpha: &Rational, beta: &Rational, n: usize) -> Result<RatMatrix> {
    let shifted = alpha + beta * from_usize(n);
    if alpha.is_zero() || shifted.is_zero() {
        return Err(Error::Singular);
    }
    let diag = Rational::one() / alpha;
    let off = -(beta / (alpha * shifted));
    Ok(scalar_plus_ones(&diag, &off, n))
}
