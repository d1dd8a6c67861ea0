//! Sampled cluster testers and exact promise-instance labelling.
//!
//! Each round draws its sample from `derive_seed(seed, round)`, so rounds can
//! run in any order; the reported witness is always the one from the
//! lowest-indexed rejecting round.

mod kg;
mod one_s;
mod promise;
mod scattered;

pub use kg::{k_g_tester, DEFAULT_ROUND_CONSTANT, KG_MAX_K};
pub use one_s::one_s_tester;
pub use promise::{promise_label, Label, PromiseLabel, PROMISE_MAX_POINTS};
pub use scattered::{scattered_points, ScatteredPoints, SCATTERED_EXACT_LIMIT};

use rand::seq::index;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::PointSet;
use crate::rng::{derive_seed, rng_from_seed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Accept,
    Reject,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// Indices into the input, ascending.
    pub indices: Vec<usize>,
    pub points: PointSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct TestVerdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Rounds executed up to and including the rejecting one.
    pub rounds_used: usize,
    pub round_budget: usize,
    pub seed: u64,
}

impl TestVerdict {
    pub fn accepted(&self) -> bool {
        self.outcome == Outcome::Accept
    }
}

/// `ceil(ln(1/delta) / rate)`; zero when `delta == 1`.
pub(crate) fn round_budget(rate: f64, delta: f64) -> usize {
    let x = (1.0 / delta).ln() / rate;
    if x <= 0.0 {
        0
    } else {
        crate::mkeb::ceil_count(x)
    }
}

/// Sorted sample of `size` distinct indices for `round`.
pub(crate) fn round_sample(n: usize, size: usize, seed: u64, round: usize) -> Vec<usize> {
    let mut rng = rng_from_seed(derive_seed(seed, round as u64));
    let mut s = index::sample(&mut rng, n, size).into_vec();
    s.sort_unstable();
    s
}

/// Runs `budget` rounds of `fails(sample)` and reports the first failure.
pub(crate) fn run_rounds(
    points: &PointSet,
    sample_size: usize,
    budget: usize,
    seed: u64,
    fails: impl Fn(&PointSet) -> Result<bool> + Sync,
) -> Result<TestVerdict> {
    let n = points.len();
    let check = |round: usize| -> Result<Option<Vec<usize>>> {
        let idx = round_sample(n, sample_size, seed, round);
        let w = points.subset(&idx)?;
        Ok(fails(&w)?.then_some(idx))
    };
    let hit = (0..budget)
        .into_par_iter()
        .map(|r| check(r).map(|w| w.map(|w| (r, w))))
        .find_first(|res| !matches!(res, Ok(None)));
    match hit {
        None => Ok(TestVerdict {
            outcome: Outcome::Accept,
            witness: None,
            rounds_used: budget,
            round_budget: budget,
            seed,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!(),
        Some(Ok(Some((round, indices)))) => Ok(TestVerdict {
            outcome: Outcome::Reject,
            witness: Some(Witness {
                points: points.subset(&indices)?,
                indices,
            }),
            rounds_used: round + 1,
            round_budget: budget,
            seed,
        }),
    }
}
