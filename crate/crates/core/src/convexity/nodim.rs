//! Greedy selection of `r` points whose hull approaches a target point.
//!
//! Each step adds the point that minimises the distance from the target to
//! the hull of the chosen set. Comparing with one Frank-Wolfe step toward
//! the best support point shows `dist^2` drops from `D` to at most
//! `D - D^2 / diam^2`, so after `r` points `dist <= diam / sqrt(r)`. The
//! sharper `diam / sqrt(2r)` is an existence statement over all subsets and
//! is not claimed for the greedy choice.

use serde::Serialize;

use super::caratheodory::ConvexCombination;
use super::projection::project_onto_hull;
use crate::diameter::diameter_bruteforce;
use crate::error::{MebError, Result};
use crate::geometry::PointSet;

#[derive(Debug, Clone, Serialize)]
pub struct NoDimCaratheodory {
    /// Chosen indices in selection order.
    pub indices: Vec<usize>,
    /// Distance from the target to the hull of the chosen points.
    pub achieved: f64,
    /// `diam / sqrt(r)`, guaranteed for the greedy choice.
    pub greedy_bound: f64,
    /// `diam / sqrt(2r)`, guaranteed for some `r`-subset.
    pub existence_bound: f64,
}

pub fn nodim_caratheodory(points: &PointSet, combo: &ConvexCombination, r: usize) -> Result<NoDimCaratheodory> {
    let n = points.len();
    if r == 0 || r > n {
        return Err(MebError::param("r", format!("must lie in 1..={n}, got {r}")));
    }
    combo.validate(points)?;
    let a = combo.target.coords();
    let pts = points.slices();
    let diam = if n >= 2 {
        diameter_bruteforce(points)?.value
    } else {
        0.0
    };

    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    let mut taken = vec![false; n];
    let mut achieved = f64::INFINITY;
    for _ in 0..r {
        let mut best = (usize::MAX, f64::INFINITY);
        for i in (0..n).filter(|&i| !taken[i]) {
            let mut cand: Vec<&[f64]> = chosen.iter().map(|&j| pts[j]).collect();
            cand.push(pts[i]);
            let dist = project_onto_hull(a, &cand).distance;
            if dist < best.1 {
                best = (i, dist);
            }
        }
        taken[best.0] = true;
        chosen.push(best.0);
        achieved = best.1;
    }
    Ok(NoDimCaratheodory {
        indices: chosen,
        achieved,
        greedy_bound: diam / (r as f64).sqrt(),
        existence_bound: diam / (2.0 * r as f64).sqrt(),
    })
}
