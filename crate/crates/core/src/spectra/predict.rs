//! Closed-form spectra of compounds in terms of their seeds.
//!
//! For semi-magic seeds the all-ones vector splits off a dominant factor, and
//! the remaining eigenvalues (and squared singular values) of a compound are
//! the seeds' non-dominant ones, each scaled by a variant-dependent factor:
//!
//! | variant             | from `B` (order n) | from `A` (order m) |
//! |---------------------|--------------------|--------------------|
//! | (rev-)aggregated    | `m`                | `n^(k+1)`          |
//! | (rev-)dispersed     | `m^(k+1)`          | `n`                |
//! | gapda               | `m`                | `n`                |
//!
//! Singular values use the same factors; their squares scale by the squared
//! factors. All other eigenvalues vanish.

use num_bigint::BigInt;
use num_traits::pow;

use super::exact::{charpoly, gramian_charpoly};
use super::poly::IntPolynomial;
use crate::compound::{compound_linesum, CompoundRecipe, Variant};
use crate::error::{Error, Result};
use crate::tensor::IntTensor;
use crate::validate::check_semi_magic;

/// Root scale factors `(for A, for B)`.
fn scale_factors(recipe: &CompoundRecipe) -> (BigInt, BigInt) {
    let m = BigInt::from(recipe.m);
    let n = BigInt::from(recipe.n);
    let lifted = recipe.k as usize + 1;
    match recipe.variant.forward() {
        Variant::Aggregated => (pow(n, lifted), m),
        Variant::Dispersed => (n, pow(m, lifted)),
        _ => (n, m),
    }
}

/// Dominant eigenvalue (= line sum) of the compound.
fn dominant(sa: &BigInt, sb: &BigInt, recipe: &CompoundRecipe) -> BigInt {
    match recipe.variant {
        Variant::Gapda => BigInt::from(recipe.n) * sa + BigInt::from(recipe.m) * sb,
        _ => compound_linesum(recipe.m as u64, recipe.n as u64, recipe.k),
    }
}

fn check_degree(p: &IntPolynomial, order: usize, which: &str) -> Result<()> {
    if !p.is_monic() || p.degree() != order {
        return Err(Error::Precondition(format!(
            "{which} polynomial must be monic of degree {order}, got {p}"
        )));
    }
    Ok(())
}

fn assemble(
    reduced_a: &IntPolynomial,
    reduced_b: &IntPolynomial,
    factor_a: &BigInt,
    factor_b: &BigInt,
    dominant_root: BigInt,
    recipe: &CompoundRecipe,
) -> Result<IntPolynomial> {
    let (m, n) = (recipe.m, recipe.n);
    let zeros = IntPolynomial::monomial(m * n + 1 - m - n);
    let product = &zeros * &IntPolynomial::linear(dominant_root);
    let product = &product * &reduced_b.scale_roots(factor_b)?;
    Ok(&product * &reduced_a.scale_roots(factor_a)?)
}

/// Predicted `det(λI - C)` for the compound described by `recipe`, from the
/// seeds' characteristic polynomials `pa`, `pb` and line sums `sa`, `sb`.
pub fn predict_charpoly(
    pa: &IntPolynomial,
    sa: &BigInt,
    pb: &IntPolynomial,
    sb: &BigInt,
    recipe: &CompoundRecipe,
) -> Result<IntPolynomial> {
    recipe.validate()?;
    check_degree(pa, recipe.m, "seed A characteristic")?;
    check_degree(pb, recipe.n, "seed B characteristic")?;
    let reduced_a = pa.divide_by_linear(sa)?;
    let reduced_b = pb.divide_by_linear(sb)?;
    let (factor_a, factor_b) = scale_factors(recipe);
    assemble(
        &reduced_a,
        &reduced_b,
        &factor_a,
        &factor_b,
        dominant(sa, sb, recipe),
        recipe,
    )
}

/// Predicted characteristic polynomial of `CᵀC` from the seeds' Gramian
/// characteristic polynomials `ga`, `gb` and line sums `sa`, `sb`.
pub fn predict_gramian_charpoly(
    ga: &IntPolynomial,
    sa: &BigInt,
    gb: &IntPolynomial,
    sb: &BigInt,
    recipe: &CompoundRecipe,
) -> Result<IntPolynomial> {
    recipe.validate()?;
    check_degree(ga, recipe.m, "seed A Gramian")?;
    check_degree(gb, recipe.n, "seed B Gramian")?;
    let reduced_a = ga.divide_by_linear(&(sa * sa))?;
    let reduced_b = gb.divide_by_linear(&(sb * sb))?;
    let (factor_a, factor_b) = scale_factors(recipe);
    let s = dominant(sa, sb, recipe);
    assemble(
        &reduced_a,
        &reduced_b,
        &(&factor_a * &factor_a),
        &(&factor_b * &factor_b),
        &s * &s,
        recipe,
    )
}

/// Outcome of comparing a compound's exact spectra against the prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictionVerdict {
    pub eigen_match: bool,
    pub singular_match: bool,
}

impl PredictionVerdict {
    pub fn holds(&self) -> bool {
        self.eigen_match && self.singular_match
    }
}

fn seed_line_sum(seed: &IntTensor, which: &str) -> Result<BigInt> {
    check_semi_magic(seed)
        .common_sum()
        .map(BigInt::from)
        .ok_or_else(|| Error::Precondition(format!("seed {which} is not semi-magic")))
}

/// Checks `charpoly(C)` and `charpoly(CᵀC)` against the predictions for
/// `recipe` applied to seeds `a` and `b`, by exact polynomial equality.
pub fn verify_prediction(
    c: &IntTensor,
    a: &IntTensor,
    b: &IntTensor,
    recipe: &CompoundRecipe,
) -> Result<PredictionVerdict> {
    recipe.validate()?;
    if a.side() != recipe.m || b.side() != recipe.n {
        return Err(Error::InvalidArgument(format!(
            "recipe orders ({}, {}) do not match seed sides ({}, {})",
            recipe.m,
            recipe.n,
            a.side(),
            b.side()
        )));
    }
    if c.side() != recipe.order() {
        return Err(Error::InvalidArgument(format!(
            "recipe order {} does not match compound side {}",
            recipe.order(),
            c.side()
        )));
    }
    let sa = seed_line_sum(a, "A")?;
    let sb = seed_line_sum(b, "B")?;
    let eigen = predict_charpoly(&charpoly(a)?, &sa, &charpoly(b)?, &sb, recipe)?;
    let singular = predict_gramian_charpoly(
        &gramian_charpoly(a)?,
        &sa,
        &gramian_charpoly(b)?,
        &sb,
        recipe,
    )?;
    Ok(PredictionVerdict {
        eigen_match: charpoly(c)? == eigen,
        singular_match: gramian_charpoly(c)? == singular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compound::compound;
    use crate::fixtures::builtin;

    fn poly(roots: &[i64], extra: &[&[i64]]) -> IntPolynomial {
        extra.iter().fold(
            IntPolynomial::from_roots(roots.iter().copied()),
            |acc, f| &acc * &IntPolynomial::from_i64(f),
        )
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn latin_six_aggregated() {
        let recipe = CompoundRecipe::new(Variant::Aggregated, 1, 2, 3).unwrap();
        let p = predict_charpoly(
            &charpoly(&builtin("l2")).unwrap(),
            &big(1),
            &charpoly(&builtin("l3")).unwrap(),
            &big(3),
            &recipe,
        )
        .unwrap();
        assert_eq!(p, poly(&[0, 0, 15, -9], &[&[-12, 0, 1]]));
    }

    #[test]
    fn order_nine_aggregated() {
        let m3 = builtin("lo_shu");
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 3, 3).unwrap();
        let pm = charpoly(&m3).unwrap();
        let p = predict_charpoly(&pm, &big(12), &pm, &big(12), &recipe).unwrap();
        assert_eq!(p, poly(&[0, 0, 0, 0, 360], &[&[216, 0, 1], &[17496, 0, 1]]));
    }

    #[test]
    fn order_twelve_aggregated() {
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 4, 3).unwrap();
        let p = predict_charpoly(
            &charpoly(&builtin("m4")).unwrap(),
            &big(30),
            &charpoly(&builtin("lo_shu")).unwrap(),
            &big(12),
            &recipe,
        )
        .unwrap();
        assert_eq!(p, poly(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 858], &[&[384, 0, 1]]));
    }

    #[test]
    fn gramian_predictions() {
        let recipe = CompoundRecipe::new(Variant::Aggregated, 1, 2, 3).unwrap();
        let g = predict_gramian_charpoly(
            &gramian_charpoly(&builtin("l2")).unwrap(),
            &big(1),
            &gramian_charpoly(&builtin("l3")).unwrap(),
            &big(3),
            &recipe,
        )
        .unwrap();
        assert_eq!(g, poly(&[0, 0, 225, 81, 12, 12], &[]));

        let gm = gramian_charpoly(&builtin("lo_shu")).unwrap();
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 3, 3).unwrap();
        let g = predict_gramian_charpoly(&gm, &big(12), &gm, &big(12), &recipe).unwrap();
        assert_eq!(g, poly(&[0, 0, 0, 0, 129600, 34992, 8748, 432, 108], &[]));

        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 4, 3).unwrap();
        let g = predict_gramian_charpoly(
            &gramian_charpoly(&builtin("m4")).unwrap(),
            &big(30),
            &gm,
            &big(12),
            &recipe,
        )
        .unwrap();
        assert_eq!(
            g,
            poly(&[0, 0, 0, 0, 0, 0, 0, 736164, 233280, 14580, 768, 192], &[])
        );
    }

    #[test]
    fn missing_dominant_root_is_an_error() {
        let recipe = CompoundRecipe::new(Variant::Aggregated, 1, 2, 3).unwrap();
        let l2 = charpoly(&builtin("l2")).unwrap();
        let l3 = charpoly(&builtin("l3")).unwrap();
        assert!(predict_charpoly(&l2, &big(2), &l3, &big(3), &recipe).is_err());
        assert!(predict_charpoly(&l2, &big(1), &l3, &big(4), &recipe).is_err());
        assert!(predict_charpoly(&l3, &big(3), &l3, &big(3), &recipe).is_err());
    }

    #[test]
    fn verify_fixture_pairs() {
        let m3 = builtin("lo_shu");
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 3, 3).unwrap();
        let verdict = verify_prediction(&builtin("arabic"), &m3, &m3, &recipe).unwrap();
        assert!(verdict.holds());

        let recipe = CompoundRecipe::new(Variant::Gapda, 0, 3, 3).unwrap();
        let verdict =
            verify_prediction(&builtin("ksr"), &builtin("k1"), &builtin("k0"), &recipe).unwrap();
        assert!(verdict.holds());

        // identical seeds: aggregated and dispersed predictions coincide
        let dispersed = CompoundRecipe::new(Variant::Dispersed, 2, 3, 3).unwrap();
        assert!(verify_prediction(&builtin("arabic"), &m3, &m3, &dispersed)
            .unwrap()
            .holds());

        let wrong = CompoundRecipe::new(Variant::Gapda, 0, 3, 3).unwrap();
        let verdict = verify_prediction(&builtin("arabic"), &m3, &m3, &wrong).unwrap();
        assert!(!verdict.eigen_match);
        assert!(!verdict.singular_match);

        let (l2, l3) = (builtin("l2"), builtin("l3"));
        let wrong = CompoundRecipe::new(Variant::Dispersed, 1, 2, 3).unwrap();
        let verdict = verify_prediction(&builtin("l6a"), &l2, &l3, &wrong).unwrap();
        assert!(!verdict.eigen_match);
        assert!(!verdict.singular_match);
    }

    #[test]
    fn verify_rejects_inconsistent_orders() {
        let m3 = builtin("lo_shu");
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 3, 3).unwrap();
        assert!(verify_prediction(&builtin("l6a"), &m3, &m3, &recipe).is_err());
        let recipe = CompoundRecipe::new(Variant::Aggregated, 2, 2, 3).unwrap();
        assert!(verify_prediction(&builtin("arabic"), &m3, &m3, &recipe).is_err());
    }

    #[test]
    fn verify_all_isda_variants_on_latin_pair() {
        let (l2, l3) = (builtin("l2"), builtin("l3"));
        for v in Variant::ISDA {
            let c = compound(&l2, &l3, 1, v).unwrap();
            let recipe = CompoundRecipe::new(v, 1, 2, 3).unwrap();
            assert!(
                verify_prediction(&c, &l2, &l3, &recipe).unwrap().holds(),
                "{v}"
            );
        }
    }
}
