//! Exact spectral analysis of integer matrices.
//!
//! Eigenvalues and singular values are carried only through characteristic
//! polynomials with big-integer coefficients, so irrational or complex
//! spectra are compared exactly, as polynomial identities.

mod exact;
mod poly;
mod predict;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use exact::{charpoly, determinant, gramian, gramian_charpoly, rank_exact};
pub use poly::IntPolynomial;
pub use predict::{
    predict_charpoly, predict_gramian_charpoly, verify_prediction, PredictionVerdict,
};

use crate::compound::CompoundRecipe;
use crate::error::{Error, Result};
use crate::tensor::{ones_tensor, IntTensor};
use crate::validate::check_semi_magic;

/// Sum of the fourth powers of all singular values but the dominant one.
///
/// For a non-negative semi-magic matrix the dominant singular value is the
/// line sum `S`, so this is `trace((MᵀM)²) - S⁴`.
pub fn r_index(m: &IntTensor) -> Result<BigInt> {
    m.require_matrix()?;
    if m.min() < 0 {
        return Err(Error::Precondition(
            "R index needs a non-negative matrix".into(),
        ));
    }
    let Some(s) = check_semi_magic(m).common_sum() else {
        return Err(Error::Precondition(
            "R index needs a semi-magic matrix (line sum is the dominant singular value)".into(),
        ));
    };
    // trace(G²) = Σ G_ij² for symmetric G
    let trace_sq: BigInt = exact::gramian_big(m)?.iter().flatten().map(|g| g * g).sum();
    let r = trace_sq - num_traits::pow(BigInt::from(s), 4);
    debug_assert!(!r.is_negative());
    Ok(r)
}

fn mat_vec(m: &IntTensor, v: &[i128]) -> Vec<i128> {
    m.rows()
        .map(|row| row.iter().zip(v).map(|(&a, &x)| i128::from(a) * x).sum())
        .collect()
}

fn random_zero_sum(rng: &mut ChaCha8Rng, len: usize) -> Vec<i128> {
    let mut v: Vec<i128> = (1..len).map(|_| rng.gen_range(-50..=50)).collect();
    v.push(-v.iter().sum::<i128>());
    v
}

fn tensor_vec(outer: &[i128], inner: &[i128]) -> Vec<i128> {
    outer
        .iter()
        .flat_map(|&o| inner.iter().map(move |&i| o * i))
        .collect()
}

/// Checks on random zero-sum vectors `w` (length `n`) and `v` (length `m`)
/// that `(A ⊗ E_n)(e_m ⊗ w) = 0` and `(E_m ⊗ B)(v ⊗ e_n) = 0` exactly.
pub fn annihilation_check(a: &IntTensor, b: &IntTensor, trials: usize, seed: u64) -> Result<bool> {
    a.require_matrix()?;
    b.require_matrix()?;
    let (m, n) = (a.side(), b.side());
    let alpha = a.kron(&ones_tensor(2, n)?)?;
    let beta = ones_tensor(2, m)?.kron(b)?;
    let ones_m = vec![1i128; m];
    let ones_n = vec![1i128; n];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let w = random_zero_sum(&mut rng, n);
        let v = random_zero_sum(&mut rng, m);
        let lifted_b = tensor_vec(&ones_m, &w);
        let lifted_a = tensor_vec(&v, &ones_n);
        if mat_vec(&alpha, &lifted_b).iter().any(|&x| x != 0)
            || mat_vec(&beta, &lifted_a).iter().any(|&x| x != 0)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact spectral summary of one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub order: usize,
    /// Common line sum, present iff the matrix is semi-magic.
    pub line_sum: Option<i128>,
    pub rank: usize,
    pub charpoly: IntPolynomial,
    pub gramian_charpoly: IntPolynomial,
    /// Squared singular values, when the Gramian polynomial splits over ℤ.
    pub squared_singular_values: Option<Vec<BigInt>>,
    /// Present iff the matrix is semi-magic and non-negative.
    pub r_index: Option<BigInt>,
    pub prediction: Option<(CompoundRecipe, PredictionVerdict)>,
}

impl SpectralReport {
    pub fn analyze(m: &IntTensor) -> Result<Self> {
        m.require_matrix()?;
        let gramian_charpoly = gramian_charpoly(m)?;
        let mut squared_singular_values = gramian_charpoly.integer_roots();
        if let Some(values) = squared_singular_values.as_mut() {
            values.sort_by(|a, b| b.cmp(a));
        }
        Ok(Self {
            order: m.side(),
            line_sum: check_semi_magic(m).common_sum(),
            rank: rank_exact(m)?,
            charpoly: charpoly(m)?,
            squared_singular_values,
            gramian_charpoly,
            r_index: r_index(m).ok(),
            prediction: None,
        })
    }

    /// Attaches the verdict of [`verify_prediction`] for seeds `a`, `b`.
    pub fn with_prediction(
        mut self,
        m: &IntTensor,
        a: &IntTensor,
        b: &IntTensor,
        recipe: &CompoundRecipe,
    ) -> Result<Self> {
        let verdict = verify_prediction(m, a, b, recipe)?;
        self.prediction = Some((recipe.clone(), verdict));
        Ok(self)
    }

    /// Number of nonzero squared singular values.
    pub fn nonzero_singular_count(&self) -> usize {
        self.gramian_charpoly.degree() - self.gramian_charpoly.zero_root_multiplicity()
    }
}

/// Squared singular values from exact integer roots of the Gramian
/// polynomial, largest first; `None` if it does not split over ℤ.
pub fn squared_singular_values(m: &IntTensor) -> Result<Option<Vec<BigInt>>> {
    let mut roots = gramian_charpoly(m)?.integer_roots();
    if let Some(r) = roots.as_mut() {
        r.sort_by(|a, b| b.cmp(a));
    }
    Ok(roots)
}

/// `Σ_{i≥2} (σ_i²)²` from explicit squared singular values (largest first).
pub fn r_index_from_singular_values(values: &[BigInt]) -> BigInt {
    values.iter().skip(1).map(|v| v * v).sum()
}
