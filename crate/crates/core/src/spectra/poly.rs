//! Integer-coefficient univariate polynomials.

use std::fmt;
use std::ops::Mul;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `λ^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        Self { coeffs }
    }

    /// `λ - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    /// `∏ (λ - r)` over `roots`.
    pub fn from_roots<I, T>(roots: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Monic polynomial whose roots are `factor` times the roots of `self`:
    /// coefficient `a_i` becomes `a_i · factor^(deg - i)`.
    pub fn scale_roots(&self, factor: &BigInt) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::InvalidArgument(
                "root scale factor must be nonzero".into(),
            ));
        }
        if !self.is_monic() {
            return Err(Error::Precondition(format!("{self} is not monic")));
        }
        let degree = self.degree();
        let mut power = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for i in (0..=degree).rev() {
            coeffs[i] = &self.coeffs[i] * &power;
            power *= factor;
        }
        Ok(Self::new(coeffs))
    }

    /// Quotient by `λ - root`, failing unless the remainder is exactly zero.
    pub fn divide_by_linear(&self, root: &BigInt) -> Result<Self> {
        let (quotient, remainder) = self.synthetic_division(root);
        if !remainder.is_zero() {
            return Err(Error::Precondition(format!(
                "{root} is not a root of {self} (remainder {remainder})"
            )));
        }
        Ok(quotient)
    }

    fn synthetic_division(&self, root: &BigInt) -> (Self, BigInt) {
        if self.coeffs.len() <= 1 {
            return (Self::zero(), self.coeff(0));
        }
        let degree = self.degree();
        let mut quotient = vec![BigInt::zero(); degree];
        let mut carry = BigInt::zero();
        for i in (0..=degree).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!("loop returns at i == 0")
    }

    /// Multiplicity of `root`.
    pub fn root_multiplicity(&self, root: &BigInt) -> usize {
        let mut count = 0;
        let mut current = self.clone();
        while !current.is_zero() && current.degree() > 0 {
            match current.divide_by_linear(root) {
                Ok(q) => {
                    current = q;
                    count += 1;
                }
                Err(_) => break,
            }
        }
        count
    }

    /// All roots as complex floating-point approximations, via the eigenvalues
    /// of a rescaled companion matrix. For display only.
    pub fn approximate_roots(&self) -> Vec<Complex<f64>> {
        if !self.is_monic() || self.degree() == 0 {
            return Vec::new();
        }
        let zeros = self.zero_root_multiplicity();
        let mut roots = vec![Complex::new(0.0, 0.0); zeros];
        let reduced = Self::new(self.coeffs[zeros..].to_vec());
        let d = reduced.degree();
        if d == 0 {
            return roots;
        }
        // Fujiwara-style bound puts every root inside |λ| < scale.
        let scale = (0..d)
            .map(|i| {
                let c = reduced.coeffs[i].abs().to_f64().unwrap_or(f64::MAX);
                c.powf(1.0 / (d - i) as f64)
            })
            .fold(0.0f64, f64::max)
            .max(1.0)
            * 2.0;
        let mut companion = DMatrix::<f64>::zeros(d, d);
        for i in 1..d {
            companion[(i, i - 1)] = 1.0;
        }
        for i in 0..d {
            let c = reduced.coeffs[i].to_f64().unwrap_or(f64::MAX);
            companion[(i, d - 1)] = -c / scale.powi((d - i) as i32);
        }
        roots.extend(
            companion
                .complex_eigenvalues()
                .iter()
                .map(|z| Complex::new(z.re * scale, z.im * scale)),
        );
        roots
    }

    /// Integer roots with multiplicity, when the polynomial splits into linear
    /// factors over the integers; `None` otherwise.
    ///
    /// Candidates come from [`Self::approximate_roots`]; every returned root is
    /// confirmed by exact division.
    pub fn integer_roots(&self) -> Option<Vec<BigInt>> {
        if !self.is_monic() {
            return None;
        }
        let mut roots = Vec::with_capacity(self.degree());
        let mut remaining = self.clone();
        for z in self.approximate_roots() {
            if remaining.degree() == 0 {
                break;
            }
            let nearest = BigInt::from(z.re.round() as i128);
            for candidate in [nearest.clone(), &nearest - 1, &nearest + 1] {
                if let Ok(q) = remaining.divide_by_linear(&candidate) {
                    remaining = q;
                    roots.push(candidate);
                    break;
                }
            }
        }
        if remaining.degree() != 0 {
            return None;
        }
        roots.sort();
        Some(roots)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers of `λ`, e.g. `λ^3 - 12λ^2 + 24λ - 288`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !magnitude.is_one() || i == 0 {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}
