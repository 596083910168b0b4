//! Exact computations on finite permutation groups: p-element counts,
//! Sylow statistics, Wielandt subnormalizers, and a suite of exact checks
//! of the identities relating them.
//!
//! All counts are exact integers. Comparisons that involve roots are
//! cross-multiplied into integer powers in [`exact`], which is generic over
//! any [`exact::Natural`]; reports use the [`BigNat`] alias.

pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod subnormal;
pub mod sylow;

pub use error::{GroupError, Result};
pub use group::{FiniteGroup, DEFAULT_CAP};
pub use perm::Permutation;
pub use sylow::SylowData;

/// Group orders and element counts.
pub type Order = u64;

/// Arbitrary-precision natural used for every reported witness.
pub type BigNat = num_bigint::BigUint;

/// Machine-width natural for comparisons known not to overflow.
pub type WideNat = u128;
