//! Exact integer matrix kernels: characteristic polynomial, determinant,
//! rank and Gramian.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::tensor::IntTensor;

/// Dense square matrix of big integers, row-major.
pub(crate) type BigMatrix = Vec<Vec<BigInt>>;

pub(crate) fn to_big(m: &IntTensor) -> Result<BigMatrix> {
    m.require_matrix()?;
    Ok(m.rows()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect())
}

fn mat_mul(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                out[i][j] += aik * bkj;
            }
        }
    }
    out
}

/// `det(λI - M)` by Faddeev–LeVerrier. Every division by the step index is
/// exact over the integers and is checked as such.
pub(crate) fn charpoly_big(a: &BigMatrix) -> IntPolynomial {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // running matrix: M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
    let mut running: BigMatrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &running);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let trace: BigInt = (0..n)
            .map(|i| {
                a[i].iter()
                    .zip(next.iter().map(|row| &row[i]))
                    .map(|(x, y)| x * y)
                    .sum::<BigInt>()
            })
            .sum();
        let (quotient, remainder) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(remainder.is_zero(), "inexact Faddeev-LeVerrier step");
        coeffs[n - k] = quotient;
        running = next;
    }
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial `det(λI - M)`; monic of degree `M.side()`.
pub fn charpoly(m: &IntTensor) -> Result<IntPolynomial> {
    Ok(charpoly_big(&to_big(m)?))
}

/// Fraction-free (Bareiss) elimination with row pivoting. Returns the rank and
/// the determinant (zero when singular).
pub(crate) fn bareiss(mut a: BigMatrix) -> (usize, BigInt) {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..n {
            for c in col + 1..cols {
                let value = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = value / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if rank == n && n == cols {
        sign * prev
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Rank over the rationals.
pub fn rank_exact(m: &IntTensor) -> Result<usize> {
    Ok(bareiss(to_big(m)?).0)
}

pub fn determinant(m: &IntTensor) -> Result<BigInt> {
    Ok(bareiss(to_big(m)?).1)
}

pub(crate) fn gramian_big(m: &IntTensor) -> Result<BigMatrix> {
    let a = to_big(m)?;
    let n = a.len();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let value: BigInt = (0..n).map(|k| &a[k][i] * &a[k][j]).sum();
            g[j][i] = value.clone();
            g[i][j] = value;
        }
    }
    Ok(g)
}

/// `MᵀM`.
pub fn gramian(m: &IntTensor) -> Result<IntTensor> {
    let g = gramian_big(m)?;
    let data = g
        .into_iter()
        .flatten()
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow("computing a Gramian")))
        .collect::<Result<Vec<_>>>()?;
    IntTensor::new(2, m.side(), data)
}

/// Characteristic polynomial of `MᵀM`: its roots are the squared singular
/// values of `M`.
pub fn gramian_charpoly(m: &IntTensor) -> Result<IntPolynomial> {
    Ok(charpoly_big(&gramian_big(m)?))
}
