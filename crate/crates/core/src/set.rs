use std::fmt;

use indexmap::IndexSet;

use crate::bits::Element;
use crate::error::{Error, Result};

/// A finite, deduplicated set of [`Element`]s with constant-time membership.
///
/// Iteration follows first-insertion order so printed output is stable;
/// equality ignores order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FiniteSet {
    elements: IndexSet<Element>,
}

impl FiniteSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter()
    }

    /// Whether the set has at least two elements, the domain on which the
    /// distance is a semi-metric.
    pub fn in_domain(&self) -> bool {
        self.cardinality() >= 2
    }

    pub fn require_domain(&self) -> Result<()> {
        if self.in_domain() {
            Ok(())
        } else {
            Err(Error::CardinalityTooSmall {
                cardinality: self.cardinality(),
            })
        }
    }

    /// `|A ∩ B|`, iterating over the smaller of the two sets.
    pub fn intersection_count(&self, other: &FiniteSet) -> usize {
        let (small, large) = if self.cardinality() <= other.cardinality() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().filter(|e| large.contains(e)).count()
    }

    /// `|self \ other|`, computed as `|self| - |self ∩ other|`.
    pub fn difference_count(&self, other: &FiniteSet) -> usize {
        self.cardinality() - self.intersection_count(other)
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.cardinality() <= other.cardinality() && self.iter().all(|e| other.contains(e))
    }

    /// `self ⊊ other`.
    pub fn is_strict_subset(&self, other: &FiniteSet) -> bool {
        self.cardinality() < other.cardinality() && self.is_subset(other)
    }
}

impl FromIterator<Element> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        Self {
            elements: iter.into_iter().collect(),
        }
    }
}

impl Extend<Element> for FiniteSet {
    fn extend<I: IntoIterator<Item = Element>>(&mut self, iter: I) {
        self.elements.extend(iter);
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Element;
    type IntoIter = indexmap::set::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> FiniteSet {
        words.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn duplicates_collapse() {
        let s = set(&["10", "01", "10"]);
        assert_eq!(s.cardinality(), 2);
        assert_eq!(s, set(&["01", "10"]));
    }

    #[test]
    fn counts() {
        let a = set(&["10", "01"]);
        let b = set(&["11", "00", "01"]);
        assert_eq!(a.intersection_count(&b), 1);
        assert_eq!(b.difference_count(&a), 2);
        assert_eq!(a.difference_count(&b), 1);
    }

    #[test]
    fn containment() {
        let a = set(&["10", "01"]);
        let b = set(&["10", "01", "11"]);
        assert!(a.is_subset(&b));
        assert!(a.is_strict_subset(&b));
        assert!(a.is_subset(&a));
        assert!(!a.is_strict_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn domain() {
        assert!(!FiniteSet::new().in_domain());
        assert!(!set(&["1"]).in_domain());
        assert!(set(&["1", "0"]).in_domain());
        assert_eq!(
            set(&["1"]).require_domain(),
            Err(Error::CardinalityTooSmall { cardinality: 1 })
        );
    }
}
