use super::{round_budget, run_rounds, TestVerdict};
use crate::error::{MebError, Result};
use crate::geometry::{fits_in_translate, ConvexBody, PointSet};
use crate::mkeb::check_unit;

/// Largest `k` accepted by [`k_g_tester`].
pub const KG_MAX_K: usize = 8;
/// Default round constant `c`.
pub const DEFAULT_ROUND_CONSTANT: f64 = 0.01;

/// Whether `w` splits into at most `k` groups each fitting in a translate of
/// `body`. Groups are grown as restricted growth strings so each partition is
/// visited once; a group is re-checked whenever it gains a point.
fn coverable(body: &ConvexBody, w: &PointSet, k: usize) -> Result<bool> {
    fn go(body: &ConvexBody, w: &PointSet, k: usize, next: usize, groups: &mut Vec<Vec<usize>>) -> Result<bool> {
        if next == w.len() {
            return Ok(true);
        }
        for g in 0..groups.len() {
            groups[g].push(next);
            let ok = fits_in_translate(body, &w.subset(&groups[g])?)? && go(body, w, k, next + 1, groups)?;
            groups[g].pop();
            if ok {
                return Ok(true);
            }
        }
        if groups.len() < k {
            groups.push(vec![next]);
            let ok = fits_in_translate(body, &w.subset(&[next])?)? && go(body, w, k, next + 1, groups)?;
            groups.pop();
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
    go(body, w, k, 0, &mut Vec::with_capacity(k))
}

/// Samples `k+1` distinct points per round and rejects when they cannot be
/// covered by `k` translates of `body`. Runs `ceil(ln(1/delta) / c)` rounds.
pub fn k_g_tester(
    points: &PointSet,
    body: &ConvexBody,
    k: usize,
    c: f64,
    delta: f64,
    seed: u64,
) -> Result<TestVerdict> {
    if k == 0 || k > KG_MAX_K {
        return Err(MebError::param("k", format!("must lie in 1..={KG_MAX_K}, got {k}")));
    }
    check_unit("c", c)?;
    check_unit("delta", delta)?;
    if points.len() < k + 1 {
        return Err(MebError::TooFewPoints {
            required: k + 1,
            got: points.len(),
        });
    }
    let budget = round_budget(c, delta);
    run_rounds(points, k + 1, budget, seed, |w| Ok(!coverable(body, w, k)?))
}
