//! Compounding seed arrays into arrays of multiplicative order.
//!
//! With seeds `A` (side `m`) and `B` (side `n`) and all-ones tensors `E`:
//!
//! | variant            | formula                              |
//! |--------------------|--------------------------------------|
//! | aggregated         | `n^k (A ⊗ E_n) + (E_m ⊗ B)`          |
//! | dispersed          | `(A ⊗ E_n) + m^k (E_m ⊗ B)`          |
//! | reverse aggregated | `n^k (E_n ⊗ A) + (B ⊗ E_m)`          |
//! | reverse dispersed  | `(E_n ⊗ A) + m^k (B ⊗ E_m)`          |
//! | gapda              | `(A ⊗ E_n) + (E_m ⊗ B)`              |
//!
//! All formulas apply unchanged to tensors with any number of axes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::tensor::{ones_tensor, IntTensor};
use crate::validate::magic_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Aggregated,
    Dispersed,
    ReverseAggregated,
    ReverseDispersed,
    Gapda,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Aggregated,
        Variant::Dispersed,
        Variant::ReverseAggregated,
        Variant::ReverseDispersed,
        Variant::Gapda,
    ];

    pub const ISDA: [Variant; 4] = [
        Variant::Aggregated,
        Variant::Dispersed,
        Variant::ReverseAggregated,
        Variant::ReverseDispersed,
    ];

    pub fn is_isda(self) -> bool {
        self != Variant::Gapda
    }

    pub fn is_reverse(self) -> bool {
        matches!(self, Variant::ReverseAggregated | Variant::ReverseDispersed)
    }

    /// The forward variant sharing this variant's spectra.
    pub fn forward(self) -> Self {
        match self {
            Variant::ReverseAggregated => Variant::Aggregated,
            Variant::ReverseDispersed => Variant::Dispersed,
            v => v,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Aggregated => "aggregated",
            Variant::Dispersed => "dispersed",
            Variant::ReverseAggregated => "rev-aggregated",
            Variant::ReverseDispersed => "rev-dispersed",
            Variant::Gapda => "gapda",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase().replace('_', "-");
        match normalized.as_str() {
            "aggregated" | "a" => Ok(Variant::Aggregated),
            "dispersed" | "d" => Ok(Variant::Dispersed),
            "rev-aggregated" | "reverse-aggregated" | "ra" => Ok(Variant::ReverseAggregated),
            "rev-dispersed" | "reverse-dispersed" | "rd" => Ok(Variant::ReverseDispersed),
            "gapda" | "g" => Ok(Variant::Gapda),
            _ => Err(Error::InvalidArgument(format!("unknown variant {s:?}"))),
        }
    }
}

/// How a compound was built: variant, class parameter and seed orders, plus
/// optional references to the seeds (fixture names or paths).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundRecipe {
    pub variant: Variant,
    pub k: u32,
    pub m: usize,
    pub n: usize,
    pub seed_a: Option<String>,
    pub seed_b: Option<String>,
}

impl CompoundRecipe {
    pub fn new(variant: Variant, k: u32, m: usize, n: usize) -> Result<Self> {
        let recipe = Self {
            variant,
            k,
            m,
            n,
            seed_a: None,
            seed_b: None,
        };
        recipe.validate()?;
        Ok(recipe)
    }

    pub fn for_seeds(a: &IntTensor, b: &IntTensor, k: u32, variant: Variant) -> Result<Self> {
        Self::new(variant, k, a.side(), b.side())
    }

    pub fn with_seed_names(mut self, a: impl Into<String>, b: impl Into<String>) -> Self {
        self.seed_a = Some(a.into());
        self.seed_b = Some(b.into());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::InvalidArgument(
                "seed orders must be positive".into(),
            ));
        }
        if self.variant.is_isda() && self.k == 0 {
            return Err(Error::InvalidArgument(
                "class parameter k must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.m * self.n
    }
}

fn weight(base: usize, k: u32) -> Result<i64> {
    i64::try_from(base)
        .ok()
        .and_then(|b| b.checked_pow(k))
        .ok_or(Error::Overflow("computing compound weight"))
}

/// Builds the compound of `a` (order `m`) and `b` (order `n`).
///
/// `k` is ignored by [`Variant::Gapda`].
pub fn compound(a: &IntTensor, b: &IntTensor, k: u32, variant: Variant) -> Result<IntTensor> {
    if a.dims() != b.dims() {
        return Err(Error::DimsMismatch {
            left: a.dims(),
            right: b.dims(),
        });
    }
    if variant.is_isda() && k == 0 {
        return Err(Error::InvalidArgument(
            "class parameter k must be at least 1".into(),
        ));
    }
    let (m, n) = (a.side(), b.side());
    let e_m = ones_tensor(a.dims(), m)?;
    let e_n = ones_tensor(a.dims(), n)?;
    let (alpha, beta) = if variant.is_reverse() {
        (e_n.kron(a)?, b.kron(&e_m)?)
    } else {
        (a.kron(&e_n)?, e_m.kron(b)?)
    };
    let (alpha_weight, beta_weight) = match variant.forward() {
        Variant::Aggregated => (weight(n, k)?, 1),
        Variant::Dispersed => (1, weight(m, k)?),
        _ => (1, 1),
    };
    alpha
        .scaled(alpha_weight)?
        .checked_add(&beta.scaled(beta_weight)?)
}

/// Block-tiled GAPDA compound: block `(i, j)` is `b + a[i][j]`.
pub fn compound_gapda(a: &IntTensor, b: &IntTensor) -> Result<IntTensor> {
    compound(a, b, 0, Variant::Gapda)
}

/// Line sum of an order-`mn`, class-`k` compound, `mn((mn)^k - 1)/2`.
///
/// Panics if the seed-based form `n^(k+1) S(m,k) + m S(n,k)` disagrees with
/// the closed form; the two are algebraically identical.
pub fn compound_linesum(m: u64, n: u64, k: u32) -> BigInt {
    let closed = magic_sum(m * n, k);
    let composed =
        num_traits::pow(BigInt::from(n), k as usize + 1) * magic_sum(m, k) + m * magic_sum(n, k);
    assert_eq!(closed, composed, "compound line sum forms disagree");
    closed
}
