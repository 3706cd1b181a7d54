//! Built-in fixture library of historical and worked-example arrays.
//!
//! Every matrix here is transcribed element by element, not generated, so the
//! compounder can be checked against it.

use std::fmt;

use crate::compound::{compound, compound_gapda, Variant};
use crate::error::{Error, Result};
use crate::gap::{pattern_map, GapSequence};
use crate::permutation::{conjugate, shuffle_permutation};
use crate::tensor::IntTensor;

/// The property set a fixture is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureProfile {
    /// Full cover `0..n^dims` with all lines and main diagonals equal.
    Magic,
    /// Every axis line is a permutation of `0..n`.
    Latin,
    /// Magic arrangement over a gapped element set.
    GapdaMagic,
}

impl fmt::Display for FixtureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureProfile::Magic => "magic",
            FixtureProfile::Latin => "latin",
            FixtureProfile::GapdaMagic => "gapda-magic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub tensor: IntTensor,
    pub provenance: &'static str,
    pub profile: FixtureProfile,
}

#[rustfmt::skip]
const LO_SHU: [i64; 9] = [
    3, 8, 1,
    2, 4, 6,
    7, 0, 5,
];

#[rustfmt::skip]
const M4: [i64; 16] = [
     4,  3, 15,  8,
    10, 13,  1,  6,
     9, 14,  2,  5,
     7,  0, 12, 11,
];

#[rustfmt::skip]
const L2: [i64; 4] = [
    0, 1,
    1, 0,
];

#[rustfmt::skip]
const L3: [i64; 9] = [
    0, 1, 2,
    1, 2, 0,
    2, 0, 1,
];

#[rustfmt::skip]
const ARABIC: [i64; 81] = [
    30, 35, 28, 75, 80, 73, 12, 17, 10,
    29, 31, 33, 74, 76, 78, 11, 13, 15,
    34, 27, 32, 79, 72, 77, 16,  9, 14,
    21, 26, 19, 39, 44, 37, 57, 62, 55,
    20, 22, 24, 38, 40, 42, 56, 58, 60,
    25, 18, 23, 43, 36, 41, 61, 54, 59,
    66, 71, 64,  3,  8,  1, 48, 53, 46,
    65, 67, 69,  2,  4,  6, 47, 49, 51,
    70, 63, 68,  7,  0,  5, 52, 45, 50,
];

#[rustfmt::skip]
const YH: [i64; 81] = [
    30, 75, 12, 35, 80, 17, 28, 73, 10,
    21, 39, 57, 26, 44, 62, 19, 37, 55,
    66,  3, 48, 71,  8, 53, 64,  1, 46,
    29, 74, 11, 31, 76, 13, 33, 78, 15,
    20, 38, 56, 22, 40, 58, 24, 42, 60,
    65,  2, 47, 67,  4, 49, 69,  6, 51,
    34, 79, 16, 27, 72,  9, 32, 77, 14,
    25, 43, 61, 18, 36, 54, 23, 41, 59,
    70,  7, 52, 63,  0, 45, 68,  5, 50,
];

#[rustfmt::skip]
const KSR: [i64; 81] = [
    36, 47, 28, 69, 80, 61, 12, 23,  4,
    29, 37, 45, 62, 70, 78,  5, 13, 21,
    46, 27, 38, 79, 60, 71, 22,  3, 14,
    15, 26,  7, 39, 50, 31, 63, 74, 55,
     8, 16, 24, 32, 40, 48, 56, 64, 72,
    25,  6, 17, 49, 30, 41, 73, 54, 65,
    66, 77, 58,  9, 20,  1, 42, 53, 34,
    59, 67, 75,  2, 10, 18, 35, 43, 51,
    76, 57, 68, 19,  0, 11, 52, 33, 44,
];

#[rustfmt::skip]
const K0: [i64; 9] = [
     9, 20,  1,
     2, 10, 18,
    19,  0, 11,
];

#[rustfmt::skip]
const K1: [i64; 9] = [
    27, 60,  3,
     6, 30, 54,
    57,  0, 33,
];

#[rustfmt::skip]
const FRIERSON_B: [i64; 81] = [
    36, 65, 10, 51, 80, 25, 30, 59,  4,
    11, 37, 63, 26, 52, 78,  5, 31, 57,
    64,  9, 38, 79, 24, 53, 58,  3, 32,
    33, 62,  7, 39, 68, 13, 45, 74, 19,
     8, 34, 60, 14, 40, 66, 20, 46, 72,
    61,  6, 35, 67, 12, 41, 73, 18, 47,
    48, 77, 22, 27, 56,  1, 42, 71, 16,
    23, 49, 75,  2, 28, 54, 17, 43, 69,
    76, 21, 50, 55,  0, 29, 70, 15, 44,
];

#[rustfmt::skip]
const L6A: [i64; 36] = [
    0, 1, 2, 3, 4, 5,
    1, 2, 0, 4, 5, 3,
    2, 0, 1, 5, 3, 4,
    3, 4, 5, 0, 1, 2,
    4, 5, 3, 1, 2, 0,
    5, 3, 4, 2, 0, 1,
];

#[rustfmt::skip]
const L6D: [i64; 36] = [
    0, 2, 4, 1, 3, 5,
    2, 4, 0, 3, 5, 1,
    4, 0, 2, 5, 1, 3,
    1, 3, 5, 0, 2, 4,
    3, 5, 1, 2, 4, 0,
    5, 1, 3, 4, 0, 2,
];

#[rustfmt::skip]
const L6A_REV: [i64; 36] = [
    0, 3, 1, 4, 2, 5,
    3, 0, 4, 1, 5, 2,
    1, 4, 2, 5, 0, 3,
    4, 1, 5, 2, 3, 0,
    2, 5, 0, 3, 1, 4,
    5, 2, 3, 0, 4, 1,
];

#[rustfmt::skip]
const L6D_REV: [i64; 36] = [
    0, 1, 2, 3, 4, 5,
    1, 0, 3, 2, 5, 4,
    2, 3, 4, 5, 0, 1,
    3, 2, 5, 4, 1, 0,
    4, 5, 0, 1, 2, 3,
    5, 4, 1, 0, 3, 2,
];

#[rustfmt::skip]
const L4_DISP: [i64; 16] = [
    0, 2, 1, 3,
    2, 0, 3, 1,
    1, 3, 0, 2,
    3, 1, 2, 0,
];

#[rustfmt::skip]
const ORDER12: [i64; 144] = [
     39,  44,  37,  30,  35,  28, 138, 143, 136,  75,  80,  73,
     38,  40,  42,  29,  31,  33, 137, 139, 141,  74,  76,  78,
     43,  36,  41,  34,  27,  32, 142, 135, 140,  79,  72,  77,
     93,  98,  91, 120, 125, 118,  12,  17,  10,  57,  62,  55,
     92,  94,  96, 119, 121, 123,  11,  13,  15,  56,  58,  60,
     97,  90,  95, 124, 117, 122,  16,   9,  14,  61,  54,  59,
     84,  89,  82, 129, 134, 127,  21,  26,  19,  48,  53,  46,
     83,  85,  87, 128, 130, 132,  20,  22,  24,  47,  49,  51,
     88,  81,  86, 133, 126, 131,  25,  18,  23,  52,  45,  50,
     66,  71,  64,   3,   8,   1, 111, 116, 109, 102, 107, 100,
     65,  67,  69,   2,   4,   6, 110, 112, 114, 101, 103, 105,
     70,  63,  68,   7,   0,   5, 115, 108, 113, 106,  99, 104,
];

#[rustfmt::skip]
const LATIN_CUBE: [i64; 8] = [
    0, 1,
    1, 0,

    1, 0,
    0, 1,
];

#[rustfmt::skip]
const LATIN_CUBE_AGG: [i64; 64] = [
    0, 1, 2, 3,
    1, 0, 3, 2,
    2, 3, 0, 1,
    3, 2, 1, 0,

    1, 0, 3, 2,
    0, 1, 2, 3,
    3, 2, 1, 0,
    2, 3, 0, 1,

    2, 3, 0, 1,
    3, 2, 1, 0,
    0, 1, 2, 3,
    1, 0, 3, 2,

    3, 2, 1, 0,
    2, 3, 0, 1,
    1, 0, 3, 2,
    0, 1, 2, 3,
];

#[rustfmt::skip]
const LATIN_CUBE_DISP: [i64; 64] = [
    0, 2, 1, 3,
    2, 0, 3, 1,
    1, 3, 0, 2,
    3, 1, 2, 0,

    2, 0, 3, 1,
    0, 2, 1, 3,
    3, 1, 2, 0,
    1, 3, 0, 2,

    1, 3, 0, 2,
    3, 1, 2, 0,
    0, 2, 1, 3,
    2, 0, 3, 1,

    3, 1, 2, 0,
    1, 3, 0, 2,
    2, 0, 3, 1,
    0, 2, 1, 3,
];

struct Builtin {
    name: &'static str,
    dims: usize,
    side: usize,
    data: &'static [i64],
    provenance: &'static str,
    profile: FixtureProfile,
}

const FIXTURES: &[Builtin] = &[
    Builtin {
        name: "lo_shu",
        dims: 2,
        side: 3,
        data: &LO_SHU,
        provenance: "Lo Shu, the order-3 magic square over 0..8",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "m4",
        dims: 2,
        side: 4,
        data: &M4,
        provenance: "rank-3 order-4 magic square with a single nonzero eigenvalue",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "l2",
        dims: 2,
        side: 2,
        data: &L2,
        provenance: "order-2 Latin square",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "l3",
        dims: 2,
        side: 3,
        data: &L3,
        provenance: "cyclic order-3 Latin square",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "arabic",
        dims: 2,
        side: 9,
        data: &ARABIC,
        provenance: "aggregated compound of the Lo Shu, Arabic manuscripts before 1000 CE",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "yh",
        dims: 2,
        side: 9,
        data: &YH,
        provenance: "dispersed compound of the Lo Shu, Yang Hui (1275 CE)",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "ksr",
        dims: 2,
        side: 9,
        data: &KSR,
        provenance: "Koo-Soo-Ryak square of Choi Seok-Jeong, GAPDA compound of k1 and k0",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "k0",
        dims: 2,
        side: 3,
        data: &K0,
        provenance: "GAPDA seed: GAP {0,1,2,9,10,11,18,19,20} in Lo Shu arrangement",
        profile: FixtureProfile::GapdaMagic,
    },
    Builtin {
        name: "k1",
        dims: 2,
        side: 3,
        data: &K1,
        provenance: "GAPDA seed: GAP {0,3,6,27,30,33,54,57,60} in Lo Shu arrangement",
        profile: FixtureProfile::GapdaMagic,
    },
    Builtin {
        name: "frierson_b",
        dims: 2,
        side: 9,
        data: &FRIERSON_B,
        provenance:
            "order-9 GAPDA compound from GAPs {0,3,..,24} and {0,1,2,27,28,29,54,55,56} (Frierson)",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "l6a",
        dims: 2,
        side: 6,
        data: &L6A,
        provenance: "aggregated compound of l2 and l3",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "l6d",
        dims: 2,
        side: 6,
        data: &L6D,
        provenance: "dispersed compound of l2 and l3",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "l6a_rev",
        dims: 2,
        side: 6,
        data: &L6A_REV,
        provenance: "reverse aggregated compound of l2 and l3",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "l6d_rev",
        dims: 2,
        side: 6,
        data: &L6D_REV,
        provenance: "reverse dispersed compound of l2 and l3",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "l4_disp",
        dims: 2,
        side: 4,
        data: &L4_DISP,
        provenance: "dispersed self-compound of l2",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "order12",
        dims: 2,
        side: 12,
        data: &ORDER12,
        provenance: "aggregated compound of m4 and lo_shu",
        profile: FixtureProfile::Magic,
    },
    Builtin {
        name: "latin_cube",
        dims: 3,
        side: 2,
        data: &LATIN_CUBE,
        provenance: "order-2 Latin cube",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "latin_cube_agg",
        dims: 3,
        side: 4,
        data: &LATIN_CUBE_AGG,
        provenance: "aggregated self-compound of latin_cube",
        profile: FixtureProfile::Latin,
    },
    Builtin {
        name: "latin_cube_disp",
        dims: 3,
        side: 4,
        data: &LATIN_CUBE_DISP,
        provenance: "dispersed self-compound of latin_cube",
        profile: FixtureProfile::Latin,
    },
];

fn normalize(name: &str) -> String {
    name.trim().to_ascii_lowercase().replace('-', "_")
}

fn entry(b: &Builtin) -> FixtureEntry {
    FixtureEntry {
        name: b.name,
        tensor: IntTensor::new(b.dims, b.side, b.data.to_vec()).expect("fixture shape"),
        provenance: b.provenance,
        profile: b.profile,
    }
}

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|s| s.name).collect()
}

pub fn all_fixtures() -> Vec<FixtureEntry> {
    FIXTURES.iter().map(entry).collect()
}

/// Looks up a fixture by name, ignoring case and treating `-` as `_`.
pub fn fixture(name: &str) -> Result<FixtureEntry> {
    let wanted = normalize(name);
    FIXTURES
        .iter()
        .find(|s| s.name == wanted)
        .map(entry)
        .ok_or_else(|| Error::UnknownFixture {
            name: name.to_string(),
            available: fixture_names().join(", "),
        })
}

/// Shorthand for fixture tensors known to exist.
pub(crate) fn builtin(name: &str) -> IntTensor {
    fixture(name).expect("built-in fixture").tensor
}

/// GAPs {0,1,2,9,10,11,18,19,20} and {0,3,6,27,30,33,54,57,60}.
pub fn ksr_gaps() -> (GapSequence, GapSequence) {
    (
        GapSequence::new(vec![0, 1, 2, 9, 10, 11, 18, 19, 20]).expect("gap"),
        GapSequence::new(vec![0, 3, 6, 27, 30, 33, 54, 57, 60]).expect("gap"),
    )
}

/// Seeds `(A, B)` whose GAPDA compound is `frierson_b`.
pub fn frierson_b_seeds() -> Result<(IntTensor, IntTensor)> {
    let lo_shu = builtin("lo_shu");
    let outer = GapSequence::progression(9, 3)?;
    let inner = GapSequence::new(vec![0, 1, 2, 27, 28, 29, 54, 55, 56])?;
    Ok((pattern_map(&lo_shu, &outer)?, pattern_map(&lo_shu, &inner)?))
}

/// The six basic order-9 compound magic squares: the aggregated and dispersed
/// Lo Shu compounds, the Koo-Soo-Ryak square and its shuffle, and the
/// `frierson_b` square and its shuffle.
pub fn frierson_six() -> Result<Vec<IntTensor>> {
    let lo_shu = builtin("lo_shu");
    let (k0_gaps, k1_gaps) = ksr_gaps();
    let k0 = pattern_map(&lo_shu, &k0_gaps)?;
    let k1 = pattern_map(&lo_shu, &k1_gaps)?;
    let (b_outer, b_inner) = frierson_b_seeds()?;
    let sigma = shuffle_permutation(3, 3)?;

    let c_a = compound(&lo_shu, &lo_shu, 2, Variant::Aggregated)?;
    let c_d = compound(&lo_shu, &lo_shu, 2, Variant::Dispersed)?;
    let c_c = compound_gapda(&k1, &k0)?;
    let c_c_shuffled = conjugate(&c_c, &sigma)?;
    let c_b = compound_gapda(&b_outer, &b_inner)?;
    let c_b_shuffled = conjugate(&c_b, &sigma)?;
    Ok(vec![c_a, c_d, c_c, c_c_shuffled, c_b, c_b_shuffled])
}
