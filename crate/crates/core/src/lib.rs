//! Exact construction and spectral analysis of compound doubly-affine arrays:
//! magic squares, Latin squares and their higher-dimensional relatives built
//! from seed pairs by weighted Kronecker sums.
//!
//! ```
//! use daa_core::{compound, fixture, spectra, Variant};
//!
//! let lo_shu = fixture("lo_shu").unwrap().tensor;
//! let c = compound(&lo_shu, &lo_shu, 2, Variant::Aggregated).unwrap();
//! assert_eq!(c, fixture("arabic").unwrap().tensor);
//! assert_eq!(spectra::rank_exact(&c).unwrap(), 5);
//! ```

pub mod compound;
pub mod error;
pub mod fixtures;
pub mod gap;
pub mod permutation;
pub mod spectra;
pub mod tensor;
pub mod validate;

pub use compound::{compound, compound_gapda, compound_linesum, CompoundRecipe, Variant};
pub use error::{Error, Result};
pub use fixtures::{
    all_fixtures, fixture, fixture_names, frierson_six, FixtureEntry, FixtureProfile,
};
pub use gap::{check_cover_pair, gap_table, pattern_map, GapPairEntry, GapSequence, GapTableRow};
pub use permutation::{conjugate, shuffle_permutation, IndexPermutation};
pub use spectra::{IntPolynomial, PredictionVerdict, SpectralReport};
pub use tensor::{kron, ones_tensor, IntTensor};
pub use validate::{
    check_full_cover, check_latin, check_magic, check_pandiagonal, check_semi_magic, magic_sum,
    Property, PropertyReport, Witness,
};
