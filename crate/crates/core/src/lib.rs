//! Combinatorial information set-distance.
//!
//! For finite sets `A` and `B` the asymmetric quantity
//!
//! ```text
//! delta(A, B) = log2(t(|B \ A| * |A|)),   t(x) = max(x, 1)
//! ```
//!
//! measures the description cost of the part of `B` that is new relative to
//! the "dictionary" `A`. The set-distance `d(A, B) = max(delta(A, B), delta(B, A))`
//! is a semi-metric on sets of cardinality at least two, and satisfies the
//! triangle inequality on triples where no set strictly contains another.
//!
//! Binary strings are compared by first mapping them to sets of substrings
//! (see [`mappers`]) and then measuring the distance between the sets.

pub mod bits;
pub mod error;
pub mod lz76;
pub mod mappers;
pub mod measure;
pub mod set;
pub mod verify;

pub use bits::{BinaryString, Element};
pub use error::{Error, Result};
pub use mappers::{dist_strings, map_string, MapperConfig};
pub use measure::{delta, dist, entropy, info, t_clamp, Distance};
pub use set::FiniteSet;
