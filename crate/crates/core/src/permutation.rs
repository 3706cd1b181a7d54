//! Index permutations and the perfect multiway shuffle.

use crate::error::{Error, Result};
use crate::tensor::IntTensor;

/// A bijection on `0..size`; `map[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexPermutation {
    map: Vec<usize>,
}

impl IndexPermutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::InvalidArgument(
                "permutation must be non-empty".into(),
            ));
        }
        let mut seen = vec![false; map.len()];
        for &image in &map {
            if image >= map.len() || std::mem::replace(&mut seen[image], true) {
                return Err(Error::InvalidArgument(format!(
                    "{map:?} is not a bijection on 0..{}",
                    map.len()
                )));
            }
        }
        Ok(Self { map })
    }

    pub fn identity(size: usize) -> Result<Self> {
        Self::new((0..size).collect())
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual: other.size(),
            });
        }
        Ok(Self {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.size()];
        for (i, &image) in self.map.iter().enumerate() {
            map[image] = i;
        }
        Self { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &image)| i == image)
    }
}

/// Perfect multiway shuffle on `0..m*n`: `σ(r·m + q) = q·n + r` for
/// `q < m`, `r < n`.
///
/// Conjugating `kron(X, Y)` (sides `m`, `n`) by this permutation yields
/// `kron(Y, X)`.
pub fn shuffle_permutation(m: usize, n: usize) -> Result<IndexPermutation> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "shuffle group sizes must be positive, got m={m}, n={n}"
        )));
    }
    let size = m
        .checked_mul(n)
        .ok_or(Error::Overflow("computing shuffle size"))?;
    let mut map = vec![0; size];
    for q in 0..m {
        for r in 0..n {
            map[r * m + q] = q * n + r;
        }
    }
    Ok(IndexPermutation { map })
}

/// Applies `sigma` along every axis: `result[i1, .., iD] = t[σ(i1), .., σ(iD)]`.
pub fn conjugate(t: &IntTensor, sigma: &IndexPermutation) -> Result<IntTensor> {
    if sigma.size() != t.side() {
        return Err(Error::SizeMismatch {
            expected: t.side(),
            actual: sigma.size(),
        });
    }
    let data = (0..t.len())
        .map(|o| {
            let source: Vec<usize> = t.index_of(o).into_iter().map(|i| sigma.apply(i)).collect();
            t.get(&source)
        })
        .collect();
    IntTensor::new(t.dims(), t.side(), data)
}
