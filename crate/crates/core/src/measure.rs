use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// A non-negative quantity measured in bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Distance(f64);

impl Distance {
    pub const ZERO: Distance = Distance(0.0);

    pub fn bits(self) -> f64 {
        self.0
    }

    fn max(self, other: Distance) -> Distance {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

impl From<Distance> for f64 {
    fn from(d: Distance) -> f64 {
        d.0
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `x` when `x >= 1`, otherwise `1`.
pub fn t_clamp(x: f64) -> f64 {
    if x >= 1.0 {
        x
    } else {
        1.0
    }
}

/// Asymmetric set dissimilarity `log2(t(|B \ A| * |A|))`.
///
/// Defined for every pair of finite sets. It is zero whenever `B ⊆ A` or
/// either set is empty.
pub fn delta(a: &FiniteSet, b: &FiniteSet) -> Distance {
    let novel = b.difference_count(a) as u128;
    let product = novel * a.cardinality() as u128;
    Distance(t_clamp(product as f64).log2())
}

/// Information set-distance `max(delta(A, B), delta(B, A))`.
pub fn dist(a: &FiniteSet, b: &FiniteSet) -> Result<Distance> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(delta(a, b).max(delta(b, a)))
}

/// Combinatorial entropy `log2 |A|`.
pub fn entropy(a: &FiniteSet) -> Result<Distance> {
    if a.is_empty() {
        return Err(Error::EmptyEntropy);
    }
    Ok(Distance((a.cardinality() as f64).log2()))
}

/// Information conveyed by the restriction `yx ⊆ y` about `y`:
/// `log2 |y| - log2 |yx|`.
pub fn info(yx: &FiniteSet, y: &FiniteSet) -> Result<Distance> {
    let whole = entropy(y)?;
    let restricted = entropy(yx)?;
    if !yx.is_subset(y) {
        return Err(Error::NotSubset);
    }
    Ok(Distance(whole.0 - restricted.0))
}
