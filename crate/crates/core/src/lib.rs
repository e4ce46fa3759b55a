//! Up-down, cycle-up-down and generalized cycle-up-down permutations.
//!
//! The crate has five layers:
//!
//! - [`perm`]: permutations on finite sets of naturals, cycle notation, the
//!   switch involution and family recognizers;
//! - [`stats`]: the permutation statistics and min-max subsequences;
//! - [`bijections`]: the constructive maps between up-down words and CUD
//!   permutations, and the Stirling-type maps;
//! - [`series`]: exact truncated power series and a catalog of generating
//!   functions;
//! - [`oracle`]: brute-force enumeration and a verification driver that
//!   checks every identity against it.
//!
//! [`matchings`] turns even CUD permutations into pairs of perfect matchings.

pub mod bijections;
pub mod error;
pub mod matchings;
pub mod oracle;
pub mod perm;
pub mod series;
pub mod stats;

pub use bijections::BitWord;
pub use error::{CudError, Result};
pub use matchings::MatchingPair;
pub use oracle::DistributionTable;
pub use perm::{CycleDecomposition, Entry, Family, Permutation};
pub use series::catalog::{catalog, SequenceId};
pub use series::{MPoly, Marker, Rational, Series};
pub use stats::{Extremum, MinMaxPattern, Stat, StatVector};
