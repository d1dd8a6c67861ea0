use super::{round_budget, run_rounds, Outcome, TestVerdict, Witness};
use crate::error::Result;
use crate::geometry::{fits_in_translate, ConvexBody, PointSet};
use crate::mkeb::check_unit;

/// Samples `d+1` distinct points per round and rejects as soon as a sample
/// does not fit in a translate of `body`. Runs
/// `ceil(ln(1/delta) / eps^(d+1))` rounds.
///
/// An input that fits in one translate is accepted for every seed. With
/// fewer than `d+1` points the whole input is checked once.
pub fn one_s_tester(points: &PointSet, body: &ConvexBody, eps: f64, delta: f64, seed: u64) -> Result<TestVerdict> {
    check_unit("eps", eps)?;
    check_unit("delta", delta)?;
    let d = points.dim();
    let n = points.len();
    let budget = round_budget(eps.powi(d as i32 + 1), delta);
    if budget == 0 {
        return run_rounds(points, 0, 0, seed, |_| Ok(false));
    }
    if n < d + 1 {
        let fits = fits_in_translate(body, points)?;
        return Ok(TestVerdict {
            outcome: if fits { Outcome::Accept } else { Outcome::Reject },
            witness: (!fits).then(|| Witness {
                indices: (0..n).collect(),
                points: points.clone(),
            }),
            rounds_used: 1,
            round_budget: 1,
            seed,
        });
    }
    run_rounds(points, d + 1, budget, seed, |w| Ok(!fits_in_translate(body, w)?))
}
