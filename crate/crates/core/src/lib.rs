//! Clustering words under the Burrows-Wheeler transform, and the interval
//! exchange transformations that generate them.
//!
//! The crate provides:
//!
//! - [`word`]: words over ordered alphabets, Parikh vectors, primitivity,
//!   conjugates and permutation restriction;
//! - [`bwt`]: the (generalized) Burrows-Wheeler transform, its inverse on
//!   conjugacy classes, and clustering detection;
//! - [`iet_discrete`]: discrete interval exchange transformations on labeled
//!   points, orbits, minimality and clustering-word generation;
//! - [`iet_continuous`]: continuous interval exchange transformations over
//!   exact rational and real-quadratic arithmetic ([`exact`]), Sturmian
//!   codings and a Keane-condition collision search;
//! - [`oracle`]: exhaustive small-instance verification of the
//!   clustering <=> trajectory correspondence, and a clustering-word census.

pub mod bwt;
pub mod error;
pub mod exact;
pub mod iet_continuous;
pub mod iet_discrete;
pub mod oracle;
pub mod word;

pub use bwt::{bwt, clustering_image, clustering_report, inverse_bwt, ClusterReport, InverseResult};
pub use error::{Error, Result};
pub use exact::ExactReal;
pub use iet_continuous::{
    fibonacci_word, from_discrete, golden_alpha, golden_rotation, golden_slope, sturmian_word,
    ContinuousIet, KeaneVerdict,
};
pub use iet_discrete::{
    from_clustering_word, minimality_criterion_r3, DiscreteIet, OrbitDecomposition,
};
pub use oracle::{
    clustering_census, is_balanced, max_imbalance, primitive_words, verify_injectivity,
    verify_nonsurjectivity, verify_theorem1, VerificationReport,
};
pub use word::{restrict_permutation, OrderedAlphabet, ParikhVector, Permutation, Word};
