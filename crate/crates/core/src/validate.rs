//! Predicates for doubly-affine properties.
//!
//! Every check stops at the first violated line or element and records it as
//! the report's witness.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::tensor::IntTensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    FullCover,
    SemiMagic,
    Magic,
    Latin,
    DiagonalLatin,
    Pandiagonal,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::FullCover => "full cover",
            Property::SemiMagic => "semi-magic",
            Property::Magic => "magic",
            Property::Latin => "latin",
            Property::DiagonalLatin => "diagonal latin",
            Property::Pandiagonal => "pandiagonal",
        })
    }
}

/// First violation found by a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, found {}",
            self.location, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    property: Property,
    witness: Option<Witness>,
    common_sum: Option<i128>,
}

impl PropertyReport {
    fn pass(property: Property, common_sum: Option<i128>) -> Self {
        Self {
            property,
            witness: None,
            common_sum,
        }
    }

    fn fail(
        property: Property,
        location: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Self {
            property,
            witness: Some(Witness {
                location: location.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            }),
            common_sum: None,
        }
    }

    /// Re-labels a failed sub-check as a failure of `property`.
    fn relabel(mut self, property: Property) -> Self {
        self.property = property;
        self
    }

    pub fn property(&self) -> Property {
        self.property
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    /// The shared line sum, for passing sum-based checks.
    pub fn common_sum(&self) -> Option<i128> {
        self.common_sum
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.common_sum) {
            (None, Some(s)) => write!(f, "{}: holds (line sum {s})", self.property),
            (None, None) => write!(f, "{}: holds", self.property),
            (Some(w), _) => write!(f, "{}: fails at {w}", self.property),
        }
    }
}

/// Line sum `n(n^k - 1)/2` of an order-`n`, class-`k` doubly-affine object.
pub fn magic_sum(n: u64, k: u32) -> BigInt {
    let n = BigInt::from(n);
    &n * (num_traits::pow(n.clone(), k as usize) - 1) / 2
}

fn line_location(t: &IntTensor, axis: usize, line: usize) -> String {
    if t.is_matrix() {
        match axis {
            0 => format!("column {line}"),
            _ => format!("row {line}"),
        }
    } else {
        format!("axis {axis} line {line}")
    }
}

fn diagonal_location(t: &IntTensor, diagonal: usize) -> String {
    match (t.is_matrix(), diagonal) {
        (true, 0) => "main diagonal".into(),
        (true, _) => "antidiagonal".into(),
        (false, d) => format!("space diagonal {d}"),
    }
}

fn line_sum(line: &[i64]) -> i128 {
    line.iter().map(|&x| i128::from(x)).sum()
}

/// The element multiset is exactly `0..n^k`, each value repeated
/// `n^dims / n^k` times.
pub fn check_full_cover(t: &IntTensor, k: usize) -> Result<PropertyReport> {
    if k == 0 || k > t.dims() {
        return Err(Error::InvalidArgument(format!(
            "cover class k={k} must lie in 1..={}",
            t.dims()
        )));
    }
    let symbols = t.side().pow(k as u32);
    let copies = t.len() / symbols;
    let mut counts = vec![0usize; symbols];
    for (o, &x) in t.data().iter().enumerate() {
        match usize::try_from(x).ok().filter(|&v| v < symbols) {
            Some(v) => counts[v] += 1,
            None => {
                return Ok(PropertyReport::fail(
                    Property::FullCover,
                    format!("element {:?}", t.index_of(o)),
                    format!("a value in 0..{symbols}"),
                    x,
                ))
            }
        }
    }
    if let Some((v, &c)) = counts.iter().enumerate().find(|(_, &c)| c != copies) {
        return Ok(PropertyReport::fail(
            Property::FullCover,
            format!("value {v}"),
            format!("{copies} occurrence(s)"),
            c,
        ));
    }
    Ok(PropertyReport::pass(Property::FullCover, None))
}

/// Every axis-parallel line shares one sum.
pub fn check_semi_magic(t: &IntTensor) -> PropertyReport {
    let mut common = None;
    for axis in 0..t.dims() {
        for (i, line) in t.axis_lines(axis).iter().enumerate() {
            let s = line_sum(line);
            match common {
                None => common = Some(s),
                Some(c) if c != s => {
                    return PropertyReport::fail(
                        Property::SemiMagic,
                        line_location(t, axis, i),
                        format!("sum {c}"),
                        format!("sum {s}"),
                    )
                }
                _ => {}
            }
        }
    }
    PropertyReport::pass(Property::SemiMagic, common)
}

/// Semi-magic, and every main (space) diagonal carries the same sum.
pub fn check_magic(t: &IntTensor) -> PropertyReport {
    let semi = check_semi_magic(t);
    let Some(common) = semi.common_sum() else {
        return semi.relabel(Property::Magic);
    };
    for (d, diag) in t.main_diagonals().iter().enumerate() {
        let s = line_sum(diag);
        if s != common {
            return PropertyReport::fail(
                Property::Magic,
                diagonal_location(t, d),
                format!("sum {common}"),
                format!("sum {s}"),
            );
        }
    }
    PropertyReport::pass(Property::Magic, Some(common))
}

fn is_symbol_permutation(line: &[i64], seen: &mut [bool]) -> bool {
    seen.fill(false);
    line.iter().all(|&x| {
        usize::try_from(x)
            .ok()
            .filter(|&v| v < seen.len())
            .is_some_and(|v| !std::mem::replace(&mut seen[v], true))
    })
}

/// Every axis-parallel line is a permutation of `0..n`; with `diagonal`, so
/// is every main (space) diagonal.
pub fn check_latin(t: &IntTensor, diagonal: bool) -> PropertyReport {
    let property = if diagonal {
        Property::DiagonalLatin
    } else {
        Property::Latin
    };
    let n = t.side();
    let mut seen = vec![false; n];
    let expected = format!("a permutation of 0..{n}");
    for axis in 0..t.dims() {
        for (i, line) in t.axis_lines(axis).iter().enumerate() {
            if !is_symbol_permutation(line, &mut seen) {
                return PropertyReport::fail(
                    property,
                    line_location(t, axis, i),
                    &expected,
                    format!("{line:?}"),
                );
            }
        }
    }
    if diagonal {
        for (d, diag) in t.main_diagonals().iter().enumerate() {
            if !is_symbol_permutation(diag, &mut seen) {
                return PropertyReport::fail(
                    property,
                    diagonal_location(t, d),
                    &expected,
                    format!("{diag:?}"),
                );
            }
        }
    }
    PropertyReport::pass(property, Some(n as i128 * (n as i128 - 1) / 2))
}

/// Semi-magic with all `2n` broken diagonals (both wrap directions) summing
/// to the line sum. Matrices only.
pub fn check_pandiagonal(m: &IntTensor) -> Result<PropertyReport> {
    m.require_matrix()?;
    let semi = check_semi_magic(m);
    let Some(common) = semi.common_sum() else {
        return Ok(semi.relabel(Property::Pandiagonal));
    };
    let n = m.side();
    for shift in 0..n {
        let forward: i128 = (0..n).map(|i| i128::from(m.at(i, (i + shift) % n))).sum();
        if forward != common {
            return Ok(PropertyReport::fail(
                Property::Pandiagonal,
                format!("broken diagonal starting at (0, {shift})"),
                format!("sum {common}"),
                format!("sum {forward}"),
            ));
        }
    }
    for shift in 0..n {
        let backward: i128 = (0..n)
            .map(|i| i128::from(m.at(i, (shift + n * n - i) % n)))
            .sum();
        if backward != common {
            return Ok(PropertyReport::fail(
                Property::Pandiagonal,
                format!("broken antidiagonal starting at (0, {shift})"),
                format!("sum {common}"),
                format!("sum {backward}"),
            ));
        }
    }
    Ok(PropertyReport::pass(Property::Pandiagonal, Some(common)))
}
