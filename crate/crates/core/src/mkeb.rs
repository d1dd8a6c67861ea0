//! Minimum k-enclosing ball: exact enumeration at desk scale and the
//! sampled outlier-tolerant variant.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::{circumball_raw, Ball, Point, PointSet};
use crate::linalg;
use crate::meb::welzl::solve_slices;
use crate::rng::{derive_seed, rng_from_seed};

/// Largest `n^(d+1)` accepted by [`exact_mkeb`].
pub const MKEB_CANDIDATE_BUDGET: u128 = 10_000_000;
const SAMPLE_TAG: u64 = 0x006f_7574_6c69_6572;

#[derive(Debug, Clone, Serialize)]
pub struct MkebSolution {
    pub ball: Ball,
    /// Indices within `radius + tol` of the center, ascending.
    pub covered: Vec<usize>,
    /// Target count.
    pub k: usize,
}

impl MkebSolution {
    pub fn radius(&self) -> f64 {
        self.ball.radius
    }

    pub fn center(&self) -> &Point {
        &self.ball.center
    }

    fn from_center(points: &PointSet, center: Vec<f64>, radius: f64, k: usize) -> Self {
        let tol = points.tolerance();
        let covered = points
            .iter()
            .enumerate()
            .filter(|(_, p)| linalg::dist2(p.coords(), &center).sqrt() <= radius + tol)
            .map(|(i, _)| i)
            .collect();
        MkebSolution {
            ball: Ball {
                center: Point::from_vec_unchecked(center),
                radius,
            },
            covered,
            k,
        }
    }
}

#[derive(Clone)]
struct Candidate {
    radius: f64,
    center: Vec<f64>,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        match self.radius.total_cmp(&other.radius) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                for (a, b) in self.center.iter().zip(&other.center) {
                    match a.total_cmp(b) {
                        std::cmp::Ordering::Less => return true,
                        std::cmp::Ordering::Greater => return false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                false
            }
        }
    }
}

fn pick(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.better_than(&a) { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

struct Search<'a> {
    pts: &'a [&'a [f64]],
    k: usize,
    tol: f64,
    max_size: usize,
}

impl Search<'_> {
    /// Best covering candidate among subsets extending `chosen` with indices
    /// greater than its last element.
    fn extend(&self, chosen: &mut Vec<usize>, best: &mut Option<Candidate>) {
        self.evaluate(chosen, best);
        if chosen.len() == self.max_size {
            return;
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        for j in start..self.pts.len() {
            chosen.push(j);
            self.extend(chosen, best);
            chosen.pop();
        }
    }

    fn evaluate(&self, chosen: &[usize], best: &mut Option<Candidate>) {
        let sub: Vec<&[f64]> = chosen.iter().map(|&i| self.pts[i]).collect();
        let Ok((center, r2)) = circumball_raw(&sub) else {
            return;
        };
        let radius = r2.sqrt();
        if best.as_ref().is_some_and(|b| b.radius < radius) {
            return;
        }
        let covered = self
            .pts
            .iter()
            .filter(|p| linalg::dist2(p, &center).sqrt() <= radius + self.tol)
            .count();
        if covered >= self.k {
            *best = pick(best.take(), Some(Candidate { radius, center }));
        }
    }
}

/// Smallest ball covering at least `k` of the points, found by enumerating
/// zero-radius balls at the points and circumballs of affinely independent
/// subsets of size `2..=d+1`.
pub fn exact_mkeb(points: &PointSet, k: usize) -> Result<MkebSolution> {
    let n = points.len();
    if k == 0 || k > n {
        return Err(MebError::param("k", format!("must lie in 1..={n}, got {k}")));
    }
    let d = points.dim();
    let required = (n as u128).checked_pow(d as u32 + 1).unwrap_or(u128::MAX);
    if required > MKEB_CANDIDATE_BUDGET {
        return Err(MebError::BudgetExceeded {
            what: "exact k-enclosing ball candidates (use the sampled variant)",
            required,
            budget: MKEB_CANDIDATE_BUDGET,
        });
    }
    let pts = points.slices();
    let search = Search {
        pts: &pts,
        k,
        tol: points.tolerance(),
        max_size: (d + 1).min(n),
    };
    let best = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut best = None;
            search.extend(&mut vec![first], &mut best);
            best
        })
        .reduce(|| None, pick)
        .expect("a ball through all points covers k");
    Ok(MkebSolution::from_center(points, best.center, best.radius, k))
}

/// `max(1, ceil((d+1) / eps^(d+1) * ln(1/delta)))`, saturating at `usize::MAX`.
pub fn outlier_sample_size(d: usize, eps: f64, delta: f64) -> Result<usize> {
    check_unit("eps", eps)?;
    check_unit("delta", delta)?;
    let m = (d as f64 + 1.0) / eps.powi(d as i32 + 1) * (1.0 / delta).ln();
    Ok(ceil_count(m))
}

pub(crate) fn check_unit(name: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(MebError::param(name, format!("must lie in (0, 1], got {x}")))
    }
}

/// Ceiling that forgives rounding just above an integer; at least 1.
pub(crate) fn ceil_count(x: f64) -> usize {
    let c = (x - 1e-9 * x.abs().max(1.0)).ceil();
    if c >= usize::MAX as f64 {
        usize::MAX
    } else {
        (c as usize).max(1)
    }
}

/// Exact MEB of `m` indices drawn uniformly with replacement, where `m` is
/// [`outlier_sample_size`]. When `m >= n` the whole set is used. The target
/// count is `ceil((1 - eps) n)`; covering it is the probabilistic part of the
/// contract and is not enforced.
pub fn outlier_meb_sample(points: &PointSet, eps: f64, delta: f64, seed: u64) -> Result<MkebSolution> {
    let n = points.len();
    let m = outlier_sample_size(points.dim(), eps, delta)?;
    let k = ((1.0 - eps) * n as f64 - 1e-9).ceil().max(1.0) as usize;
    let pts = points.slices();
    let tol = points.tolerance();
    let sol = if m >= n {
        solve_slices(&pts, seed, tol)
    } else {
        let mut rng = rng_from_seed(derive_seed(seed, SAMPLE_TAG));
        let sample: Vec<&[f64]> = (0..m).map(|_| pts[rng.random_range(0..n)]).collect();
        solve_slices(&sample, seed, tol)
    };
    let radius = sol.radius();
    Ok(MkebSolution::from_center(points, sol.ball.center.into_vec(), radius, k))
}
