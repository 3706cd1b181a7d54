//! Generalized arithmetic progressions (GAPs) and the GAPDA seed catalog.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::tensor::IntTensor;
use crate::validate::check_full_cover;

/// Strictly increasing non-negative integers starting at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapSequence(Vec<i64>);

impl GapSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.first() != Some(&0) {
            return Err(Error::InvalidArgument(format!(
                "GAP {values:?} must start at 0"
            )));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "GAP {values:?} must be strictly increasing"
            )));
        }
        Ok(Self(values))
    }

    /// `start, start + step, ..` with `len` terms; `start` must be 0.
    pub fn progression(len: usize, step: i64) -> Result<Self> {
        Self::new((0..len as i64).map(|i| i * step).collect())
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// True iff the sumset `{a + b}` has `|ga|·|gb|` distinct values forming
/// exactly `0..|ga|·|gb|`.
pub fn check_cover_pair(ga: &GapSequence, gb: &GapSequence) -> bool {
    let total = ga.len() * gb.len();
    let sums: BTreeSet<i64> = ga
        .values()
        .iter()
        .flat_map(|a| gb.values().iter().map(move |b| a + b))
        .collect();
    sums.len() == total && sums.iter().copied().eq(0..total as i64)
}

/// Replaces every element `r` of `base` by `gaps[r]`.
///
/// `base` must be a rank array: a full cover of `0..|gaps|` where `|gaps|` is
/// `side^k` for some class `k`.
pub fn pattern_map(base: &IntTensor, gaps: &GapSequence) -> Result<IntTensor> {
    let class = (1..=base.dims()).find(|&k| base.side().pow(k as u32) == gaps.len());
    let Some(k) = class else {
        return Err(Error::InvalidArgument(format!(
            "{} gaps do not match any cover class of a side-{} base",
            gaps.len(),
            base.side()
        )));
    };
    let report = check_full_cover(base, k)?;
    if let Some(w) = report.witness() {
        return Err(Error::Precondition(format!(
            "base is not a rank array for {} gaps ({w})",
            gaps.len()
        )));
    }
    Ok(base.map(|r| gaps.values()[r as usize]))
}

/// One GAP pair whose sumset covers `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapPairEntry {
    pub order: usize,
    pub pair: (GapSequence, GapSequence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapTableRow {
    pub order: usize,
    /// Number of Latin compounds the row's pairs produce.
    pub compound_count: usize,
    pub pairs: Vec<GapPairEntry>,
}

/// `(order, compound count, pairs)`.
type GapRow = (usize, usize, &'static [(&'static [i64], &'static [i64])]);

const GAP_TABLE: &[GapRow] = &[
    (4, 2, &[(&[0, 1], &[0, 2])]),
    (6, 4, &[(&[0, 1, 2], &[0, 3]), (&[0, 2, 4], &[0, 1])]),
    (8, 4, &[(&[0, 1, 2, 3], &[0, 4]), (&[0, 2, 4, 6], &[0, 1])]),
    (9, 2, &[(&[0, 1, 2], &[0, 3, 6])]),
    (
        10,
        4,
        &[(&[0, 1, 2, 3, 4], &[0, 5]), (&[0, 2, 4, 6, 8], &[0, 1])],
    ),
    (
        12,
        8,
        &[
            (&[0, 1, 2, 3, 4, 5], &[0, 6]),
            (&[0, 2, 4, 6, 8, 10], &[0, 1]),
            (&[0, 1, 2, 3], &[0, 4, 8]),
            (&[0, 3, 6, 9], &[0, 1, 2]),
        ],
    ),
    (
        14,
        4,
        &[
            (&[0, 1, 2, 3, 4, 5, 6], &[0, 7]),
            (&[0, 2, 4, 6, 8, 10, 12], &[0, 1]),
        ],
    ),
    (
        15,
        4,
        &[
            (&[0, 1, 2, 3, 4], &[0, 5, 10]),
            (&[0, 3, 6, 9, 12], &[0, 1, 2]),
        ],
    ),
    (
        16,
        10,
        &[
            (&[0, 1, 2, 3, 4, 5, 6, 7], &[0, 8]),
            (&[0, 2, 4, 6, 8, 10, 12, 14], &[0, 1]),
            (&[0, 4, 8, 12], &[0, 1, 2, 3]),
            (&[0, 2, 8, 10], &[0, 1, 4, 5]),
            (&[0, 1, 8, 9], &[0, 2, 4, 6]),
        ],
    ),
];

/// GAP pairs for compound Latin squares of small composite order.
pub fn gap_table() -> Vec<GapTableRow> {
    GAP_TABLE
        .iter()
        .map(|&(order, compound_count, pairs)| GapTableRow {
            order,
            compound_count,
            pairs: pairs
                .iter()
                .map(|&(a, b)| GapPairEntry {
                    order,
                    pair: (
                        GapSequence::new(a.to_vec()).expect("catalog GAP"),
                        GapSequence::new(b.to_vec()).expect("catalog GAP"),
                    ),
                })
                .collect(),
        })
        .collect()
}

pub fn gap_table_row(order: usize) -> Option<GapTableRow> {
    gap_table().into_iter().find(|row| row.order == order)
}
