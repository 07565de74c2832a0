//! Checks for the properties the set-distance is known to satisfy.
//!
//! This module holds the per-instance checks (triangle inequality, the
//! counting inequality behind it, the max-combination step), an independent
//! brute-force exhaustive-history parser used to cross-check [`crate::lz76`],
//! and seeded random set generation. [`suites`] runs them exhaustively or
//! over randomized trials and produces [`PropertyReport`]s.

mod report;
pub mod suites;

use rand::seq::index;
use rand::Rng;

use crate::bits::Element;
use crate::error::{Error, Result};
use crate::measure::dist;
use crate::set::FiniteSet;

pub use report::{Counterexample, PropertyReport};

/// Absolute tolerance for real-valued inequality checks.
pub const TOLERANCE: f64 = 1e-9;

/// Strict-containment flags for a triple of sets. `a_in_b` means `A ⊊ B`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TripleCondition {
    pub a_in_b: bool,
    pub b_in_a: bool,
    pub a_in_c: bool,
    pub c_in_a: bool,
    pub b_in_c: bool,
    pub c_in_b: bool,
}

impl TripleCondition {
    pub fn of(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> Self {
        Self {
            a_in_b: a.is_strict_subset(b),
            b_in_a: b.is_strict_subset(a),
            a_in_c: a.is_strict_subset(c),
            c_in_a: c.is_strict_subset(a),
            b_in_c: b.is_strict_subset(c),
            c_in_b: c.is_strict_subset(b),
        }
    }

    /// No set of the triple is strictly contained in another.
    pub fn containment_free(&self) -> bool {
        !(self.a_in_b || self.b_in_a || self.a_in_c || self.c_in_a || self.b_in_c || self.c_in_b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleCheck {
    pub condition: TripleCondition,
    /// `d(A,C) <= d(A,B) + d(B,C)` within [`TOLERANCE`].
    pub holds: bool,
    /// `d(A,B) + d(B,C) - d(A,C)`.
    pub slack: f64,
}

pub fn check_triangle(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> Result<TriangleCheck> {
    for s in [a, b, c] {
        s.require_domain()?;
    }
    let lhs = dist(a, c)?.bits();
    let rhs = dist(a, b)?.bits() + dist(b, c)?.bits();
    Ok(TriangleCheck {
        condition: TripleCondition::of(a, b, c),
        holds: lhs <= rhs + TOLERANCE,
        slack: rhs - lhs,
    })
}

/// `|C \ A| <= 2 |B \ A| |C \ B|`, in exact integer arithmetic.
///
/// Returns `None` when one of the three counts is zero.
pub fn check_key_inequality(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> Option<bool> {
    let c_a = c.difference_count(a) as u128;
    let b_a = b.difference_count(a) as u128;
    let c_b = c.difference_count(b) as u128;
    if c_a == 0 || b_a == 0 || c_b == 0 {
        return None;
    }
    Some(c_a <= 2 * b_a * c_b)
}

/// `max(a1, b1) <= max(a2, b2) + max(a3, b3)` given `a1 <= a2 + a3` and
/// `b1 <= b2 + b3`.
///
/// Returns `None` when an input is negative or a premise fails.
pub fn check_max_combination(a: [f64; 3], b: [f64; 3]) -> Option<bool> {
    if a.iter().chain(&b).any(|&v| v < 0.0 || !v.is_finite()) {
        return None;
    }
    if a[0] > a[1] + a[2] + TOLERANCE || b[0] > b[1] + b[2] + TOLERANCE {
        return None;
    }
    Some(a[0].max(b[0]) <= a[1].max(b[1]) + a[2].max(b[2]) + TOLERANCE)
}

/// Exhaustive-history parse by explicit search, independent of [`crate::lz76`].
///
/// For every candidate endpoint the component is compared against each
/// possible copy start in the preceding prefix, overlapping copies included.
pub fn lz76_oracle(bits: &[bool]) -> Vec<Vec<bool>> {
    let n = bits.len();
    let mut components = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        loop {
            let candidate = &bits[start..end];
            let len = candidate.len();
            // copies must lie inside bits[..end - 1]
            let last_copy_start = (end - 1).checked_sub(len);
            let reproducible = match last_copy_start {
                None => false,
                Some(last) => (0..=last).any(|j| (0..len).all(|i| bits[j + i] == candidate[i])),
            };
            if !reproducible || end == n {
                break;
            }
            end += 1;
        }
        components.push(bits[start..end].to_vec());
        start = end;
    }
    components
}

/// Bit width used for universe elements `0..size`.
pub fn universe_width(size: usize) -> usize {
    let mut width = 1;
    while width < 64 && (1u64 << width) < size as u64 {
        width += 1;
    }
    width
}

/// The fixed-width words `0..size`.
pub fn universe(size: usize) -> Vec<Element> {
    let width = universe_width(size);
    (0..size as u64)
        .map(|i| Element::from_uint(i, width).expect("width is at least 1"))
        .collect()
}

/// The subset of `universe` selected by the bits of `mask`.
pub fn subset(universe: &[Element], mask: u64) -> FiniteSet {
    universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e.clone())
        .collect()
}

/// All `2^n` subsets of `universe`, indexed by bit mask.
pub fn all_subsets(universe: &[Element]) -> Vec<FiniteSet> {
    assert!(
        universe.len() < 32,
        "exhaustive enumeration limited to 31 elements"
    );
    (0..1u64 << universe.len())
        .map(|mask| subset(universe, mask))
        .collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A uniformly random subset of the `universe_size`-word universe among those
/// with at least `min_card` elements.
pub fn random_set<R: Rng + ?Sized>(
    universe_size: usize,
    min_card: usize,
    rng: &mut R,
) -> Result<FiniteSet> {
    if min_card > universe_size {
        return Err(Error::UniverseTooSmall {
            universe: universe_size,
            min_card,
        });
    }
    let weights: Vec<f64> = (min_card..=universe_size)
        .map(|k| binomial(universe_size, k))
        .collect();
    let mut pick = rng.gen::<f64>() * weights.iter().sum::<f64>();
    let mut card = universe_size;
    for (k, w) in (min_card..).zip(&weights) {
        if pick < *w {
            card = k;
            break;
        }
        pick -= w;
    }
    let width = universe_width(universe_size);
    let mut indices = index::sample(rng, universe_size, card).into_vec();
    indices.sort_unstable();
    Ok(indices
        .into_iter()
        .map(|i| Element::from_uint(i as u64, width).expect("width is at least 1"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(words: &[&str]) -> FiniteSet {
        words.iter().map(|w| w.parse().unwrap()).collect()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.bytes().map(|b| b == b'1').collect()
    }

    fn render(components: &[Vec<bool>]) -> Vec<String> {
        components
            .iter()
            .map(|c| c.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }

    #[test]
    fn triangle_identical_sets() {
        let a = set(&["000", "001"]);
        let check = check_triangle(&a, &a, &a).unwrap();
        assert!(check.condition.containment_free());
        assert!(check.holds);
        assert_eq!(check.slack, 0.0);
    }

    #[test]
    fn triangle_disjoint_pairs() {
        let a = set(&["000", "001"]);
        let b = set(&["010", "011"]);
        let c = set(&["100", "101"]);
        let check = check_triangle(&a, &b, &c).unwrap();
        assert!(check.condition.containment_free());
        assert!(check.holds);
        assert_eq!(check.slack, 2.0);
    }

    #[test]
    fn triangle_with_containment() {
        let a = set(&["00", "01"]);
        let b = set(&["00", "01", "10"]);
        let c = set(&["00", "10"]);
        let check = check_triangle(&a, &b, &c).unwrap();
        assert!(check.condition.a_in_b);
        assert!(!check.condition.containment_free());
    }

    #[test]
    fn triangle_rejects_small_sets() {
        let a = set(&["00", "01"]);
        assert!(check_triangle(&a, &set(&["1"]), &a).is_err());
    }

    #[test]
    fn key_inequality_examples() {
        let a = set(&["00", "01"]);
        let b = set(&["00", "10"]);
        let c = set(&["01", "10"]);
        assert_eq!(check_key_inequality(&a, &b, &c), Some(true));

        let a = set(&["000", "001"]);
        let b = set(&["010", "011"]);
        let c = set(&["100", "101"]);
        assert_eq!(check_key_inequality(&a, &b, &c), Some(true));

        assert_eq!(check_key_inequality(&a, &a, &c), None);
    }

    #[test]
    fn max_combination_examples() {
        assert_eq!(check_max_combination([0.0; 3], [0.0; 3]), Some(true));
        assert_eq!(
            check_max_combination([3.0, 1.0, 2.0], [2.0, 2.0, 0.0]),
            Some(true)
        );
        assert_eq!(check_max_combination([5.0, 1.0, 2.0], [0.0; 3]), None);
        assert_eq!(check_max_combination([-1.0, 1.0, 2.0], [0.0; 3]), None);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(render(&lz76_oracle(&bits("01"))), ["0", "1"]);
        assert_eq!(render(&lz76_oracle(&bits("0"))), ["0"]);
        assert_eq!(render(&lz76_oracle(&bits("0000"))), ["0", "000"]);
        assert_eq!(
            render(&lz76_oracle(&bits("0001101001000101"))),
            ["0", "001", "10", "100", "1000", "101"]
        );
    }

    #[test]
    fn universe_words() {
        assert_eq!(universe_width(1), 1);
        assert_eq!(universe_width(4), 2);
        assert_eq!(universe_width(5), 3);
        let u = universe(5);
        assert_eq!(u.len(), 5);
        assert_eq!(u[4].to_string(), "100");
        assert_eq!(all_subsets(&u).len(), 32);
        assert_eq!(subset(&u, 0b10001).cardinality(), 2);
    }

    #[test]
    fn random_set_forced_full() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = random_set(4, 4, &mut rng).unwrap();
        assert_eq!(s, universe(4).into_iter().collect());
    }

    #[test]
    fn random_set_deterministic() {
        let a = random_set(8, 2, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let b = random_set(8, 2, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_set_cardinality_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let s = random_set(8, 2, &mut rng).unwrap();
            assert!((2..=8).contains(&s.cardinality()));
        }
    }

    #[test]
    fn random_set_too_small_universe() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(
            random_set(3, 4, &mut rng),
            Err(Error::UniverseTooSmall {
                universe: 3,
                min_card: 4
            })
        );
    }
}
