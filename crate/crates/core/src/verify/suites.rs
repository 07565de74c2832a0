//! Exhaustive and randomized verification suites.
//!
//! Randomized suites split their trials over a fixed number of workers, each
//! with its own ChaCha stream derived from `(seed, worker)`, so results do
//! not depend on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    all_subsets, check_key_inequality, check_max_combination, check_triangle, lz76_oracle,
    random_set, universe, Counterexample, PropertyReport,
};
use crate::lz76;
use crate::measure::{delta, dist, info};
use crate::set::FiniteSet;

const WORKERS: u64 = 8;

/// Tolerance for the two closed forms of the information quantity.
pub const INFO_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Trials for the randomized triangle and max-combination suites.
    pub trials: u64,
    /// Size of the universe enumerated by the exhaustive set suites.
    pub universe: usize,
    pub seed: u64,
    /// Universe size for randomized triangle triples.
    pub random_universe: usize,
    /// Every string up to this length is parsed by both LZ76 routes.
    pub lz76_exhaustive_len: usize,
    pub lz76_random_strings: u64,
    pub lz76_random_max_len: usize,
    pub info_trials: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            trials: 100_000,
            universe: 5,
            seed: 0,
            random_universe: 12,
            lz76_exhaustive_len: 14,
            lz76_random_strings: 10_000,
            lz76_random_max_len: 256,
            info_trials: 1_000,
        }
    }
}

fn worker_rng(seed: u64, worker: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker);
    rng
}

fn partitioned<F>(suite: &str, trials: u64, seed: u64, run: F) -> PropertyReport
where
    F: Fn(&mut ChaCha8Rng, u64, &mut PropertyReport) + Sync,
{
    (0..WORKERS)
        .into_par_iter()
        .map(|worker| {
            let share = trials / WORKERS + u64::from(worker < trials % WORKERS);
            let mut report = PropertyReport::new(suite);
            let mut rng = worker_rng(seed, worker);
            run(&mut rng, share, &mut report);
            report.trials = share;
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(
            PropertyReport::new(suite).with_seed(seed),
            PropertyReport::merge,
        )
}

fn render_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn triple_inputs(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> String {
    format!("A={a:?} B={b:?} C={c:?}")
}

/// Zero set of `delta`: over every ordered pair of subsets, `delta(A,B) = 0`
/// exactly when `|B \ A| * |A| <= 1`, and always when `B ⊆ A`.
pub fn delta_zero_exhaustive(universe_size: usize) -> PropertyReport {
    let sets = all_subsets(&universe(universe_size));
    let mut report = PropertyReport::new("delta zero set (exhaustive)")
        .with_note("delta(A,B)=0 iff |B\\A|*|A| <= 1; B subset of A always gives 0");
    for a in &sets {
        for b in &sets {
            report.trials += 1;
            report.applicable += 1;
            let value = delta(a, b).bits();
            let product = b.difference_count(a) * a.cardinality();
            let zero = value == 0.0;
            if zero != (product <= 1) || (b.is_subset(a) && !zero) {
                report.violation(Counterexample {
                    inputs: format!("A={a:?} B={b:?}"),
                    lhs: value,
                    rhs: product as f64,
                });
            }
        }
    }
    report
}

/// Symmetry and identity over all non-empty subsets, and strict positivity
/// for distinct sets of cardinality at least two.
pub fn semimetric_exhaustive(universe_size: usize) -> PropertyReport {
    let sets: Vec<FiniteSet> = all_subsets(&universe(universe_size))
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let mut report = PropertyReport::new("semi-metric axioms (exhaustive)");
    for a in &sets {
        for b in &sets {
            report.trials += 1;
            report.applicable += 1;
            let ab = dist(a, b).expect("non-empty").bits();
            let ba = dist(b, a).expect("non-empty").bits();
            let inputs = || format!("A={a:?} B={b:?}");
            if ab != ba {
                report.violation(Counterexample {
                    inputs: format!("symmetry {}", inputs()),
                    lhs: ab,
                    rhs: ba,
                });
            }
            if a == b && ab != 0.0 {
                report.violation(Counterexample {
                    inputs: format!("identity {}", inputs()),
                    lhs: ab,
                    rhs: 0.0,
                });
            }
            if a != b && a.in_domain() && b.in_domain() && ab <= 0.0 {
                report.violation(Counterexample {
                    inputs: format!("positivity {}", inputs()),
                    lhs: ab,
                    rhs: 0.0,
                });
            }
        }
    }
    report
}

/// Triangle inequality over every ordered triple of subsets with at least two
/// elements. Triples with strict containment are counted as informational.
pub fn triangle_exhaustive(universe_size: usize) -> PropertyReport {
    let sets: Vec<FiniteSet> = all_subsets(&universe(universe_size))
        .into_iter()
        .filter(FiniteSet::in_domain)
        .collect();
    sets.par_iter()
        .map(|a| {
            let mut report = PropertyReport::new("triangle inequality (exhaustive)");
            for b in &sets {
                for c in &sets {
                    record_triangle(&mut report, a, b, c);
                }
            }
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(
            PropertyReport::new("triangle inequality (exhaustive)"),
            PropertyReport::merge,
        )
}

fn record_triangle(report: &mut PropertyReport, a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) {
    report.trials += 1;
    let check = check_triangle(a, b, c).expect("sets have at least two elements");
    let counterexample = || Counterexample {
        inputs: triple_inputs(a, b, c),
        lhs: check.slack,
        rhs: 0.0,
    };
    if check.condition.containment_free() {
        report.applicable += 1;
        if !check.holds {
            report.violation(counterexample());
        }
    } else if !check.holds {
        report.informational(counterexample());
    }
}

/// Triangle inequality on random triples of sets with at least two elements.
pub fn triangle_random(universe_size: usize, trials: u64, seed: u64) -> PropertyReport {
    let mut report = partitioned(
        "triangle inequality (random)",
        trials,
        seed,
        |rng, share, report| {
            for _ in 0..share {
                let a = random_set(universe_size, 2, rng).expect("universe holds two elements");
                let b = random_set(universe_size, 2, rng).expect("universe holds two elements");
                let c = random_set(universe_size, 2, rng).expect("universe holds two elements");
                record_triangle(report, &a, &b, &c);
            }
        },
    );
    report.trials = trials;
    report
}

/// `|C \ A| <= 2 |B \ A| |C \ B|` over all triples of non-empty subsets with at
/// least two elements each and all three counts positive.
pub fn key_inequality_exhaustive(universe_size: usize) -> PropertyReport {
    let sets: Vec<FiniteSet> = all_subsets(&universe(universe_size))
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let mut report = PropertyReport::new("key counting inequality (exhaustive)");
    for a in &sets {
        for b in &sets {
            for c in &sets {
                report.trials += 1;
                if !(a.in_domain() && b.in_domain() && c.in_domain()) {
                    continue;
                }
                if let Some(holds) = check_key_inequality(a, b, c) {
                    report.applicable += 1;
                    if !holds {
                        report.violation(Counterexample {
                            inputs: triple_inputs(a, b, c),
                            lhs: c.difference_count(a) as f64,
                            rhs: (2 * b.difference_count(a) * c.difference_count(b)) as f64,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Max-combination step on random non-negative tuples whose premises hold by
/// construction: `a1 = (a2 + a3) u`, `b1 = (b2 + b3) v` with `u, v` in `[0, 1]`.
pub fn max_combination_random(trials: u64, seed: u64) -> PropertyReport {
    let mut report = partitioned(
        "max-combination inequality (random)",
        trials,
        seed,
        |rng, share, report| {
            for _ in 0..share {
                let (a2, a3, b2, b3): (f64, f64, f64, f64) = (
                    rng.gen_range(0.0..16.0),
                    rng.gen_range(0.0..16.0),
                    rng.gen_range(0.0..16.0),
                    rng.gen_range(0.0..16.0),
                );
                let a1 = (a2 + a3) * rng.gen::<f64>();
                let b1 = (b2 + b3) * rng.gen::<f64>();
                match check_max_combination([a1, a2, a3], [b1, b2, b3]) {
                    Some(true) => report.applicable += 1,
                    Some(false) => {
                        report.applicable += 1;
                        report.violation(Counterexample {
                            inputs: format!("a=({a1},{a2},{a3}) b=({b1},{b2},{b3})"),
                            lhs: a1.max(b1),
                            rhs: a2.max(b2) + a3.max(b3),
                        });
                    }
                    None => {}
                }
            }
        },
    )
    .with_note("premises checked as a1 <= a2 + a3 and b1 <= b2 + b3");
    report.trials = trials;
    report
}

fn lz76_agrees(bits: &[bool], report: &mut PropertyReport) {
    report.trials += 1;
    report.applicable += 1;
    let fast: Vec<&[bool]> = lz76::decompose(bits)
        .into_iter()
        .map(|r| &bits[r])
        .collect();
    let oracle = lz76_oracle(bits);
    let concatenated: Vec<bool> = fast.concat();
    let same = fast.len() == oracle.len() && fast.iter().zip(&oracle).all(|(f, o)| *f == &o[..]);
    if !same || concatenated != bits {
        report.violation(Counterexample {
            inputs: format!("x={}", render_bits(bits)),
            lhs: fast.len() as f64,
            rhs: oracle.len() as f64,
        });
    }
}

/// Fast and brute-force exhaustive-history parses agree on every string of
/// length `1..=max_len`, and the components concatenate back to the input.
pub fn lz76_exhaustive(max_len: usize) -> PropertyReport {
    (1..=max_len)
        .into_par_iter()
        .map(|len| {
            let mut report = PropertyReport::new("lz76 oracle agreement (exhaustive)");
            for word in 0..1u64 << len {
                let bits: Vec<bool> = (0..len).rev().map(|i| word >> i & 1 == 1).collect();
                lz76_agrees(&bits, &mut report);
            }
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(
            PropertyReport::new("lz76 oracle agreement (exhaustive)"),
            PropertyReport::merge,
        )
}

pub fn lz76_random(count: u64, max_len: usize, seed: u64) -> PropertyReport {
    let mut report = partitioned(
        "lz76 oracle agreement (random)",
        count,
        seed,
        |rng, share, report| {
            for _ in 0..share {
                let len = rng.gen_range(1..=max_len);
                let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
                lz76_agrees(&bits, report);
            }
        },
    );
    report.trials = count;
    report
}

/// The restriction information equals both `log|Y| - log|Yx|` and
/// `log(|Y|^2) - log(|Y| |Yx|)` on random nested pairs.
pub fn info_identities_random(trials: u64, seed: u64) -> PropertyReport {
    const UNIVERSE: usize = 16;
    let mut report = partitioned(
        "information identities (random)",
        trials,
        seed,
        |rng, share, report| {
            for _ in 0..share {
                let y = random_set(UNIVERSE, 1, rng).expect("universe is non-empty");
                let keep = rng.gen_range(1..=y.cardinality());
                let yx: FiniteSet = y.iter().take(keep).cloned().collect();
                report.applicable += 1;
                let value = info(&yx, &y).expect("nested non-empty pair").bits();
                let (whole, part) = (y.cardinality() as f64, yx.cardinality() as f64);
                let difference = whole.log2() - part.log2();
                let pair_form = (whole * whole).log2() - (whole * part).log2();
                for reference in [difference, pair_form] {
                    if (value - reference).abs() > INFO_TOLERANCE {
                        report.violation(Counterexample {
                            inputs: format!("|Y|={whole} |Yx|={part}"),
                            lhs: value,
                            rhs: reference,
                        });
                    }
                }
            }
        },
    );
    report.trials = trials;
    report
}

/// Runs every suite.
pub fn run_all(cfg: &VerifyConfig) -> Vec<PropertyReport> {
    vec![
        delta_zero_exhaustive(cfg.universe),
        semimetric_exhaustive(cfg.universe),
        triangle_exhaustive(cfg.universe),
        triangle_random(cfg.random_universe, cfg.trials, cfg.seed),
        key_inequality_exhaustive(cfg.universe),
        max_combination_random(cfg.trials, cfg.seed),
        lz76_exhaustive(cfg.lz76_exhaustive_len),
        lz76_random(cfg.lz76_random_strings, cfg.lz76_random_max_len, cfg.seed),
        info_identities_random(cfg.info_trials, cfg.seed),
    ]
}
