//! Exact MEB by move-to-front recursion over support sets.

use rand::seq::SliceRandom;

use super::{enclosing_radius, support_for, Algorithm, MebSolution};
use crate::error::Result;
use crate::geometry::{circumball_raw, PointSet};
use crate::linalg;
use crate::rng::rng_from_seed;

/// Seed used by [`exact_meb`] for the initial shuffle.
pub const DEFAULT_SHUFFLE_SEED: u64 = 0x005E_ED0F_BA11;

#[derive(Debug, Clone)]
pub(crate) struct SupportBall {
    pub center: Vec<f64>,
    pub radius: f64,
}

struct MoveToFront<'a> {
    pts: &'a [&'a [f64]],
    dim: usize,
    /// absolute slack on "outside" tests
    slack: f64,
    order: Vec<usize>,
    updates: usize,
}

impl MoveToFront<'_> {
    fn ball_through(&self, support: &[usize]) -> Option<SupportBall> {
        if support.is_empty() {
            return None;
        }
        let sp: Vec<&[f64]> = support.iter().map(|&i| self.pts[i]).collect();
        match circumball_raw(&sp) {
            Ok((center, r2)) => Some(SupportBall {
                center,
                radius: r2.sqrt(),
            }),
            // numerically dependent support: fall back to the smallest
            // circumball of a sub-support that still encloses all of it
            Err(_) => Some(self.smallest_enclosing_sub_ball(support)),
        }
    }

    fn smallest_enclosing_sub_ball(&self, support: &[usize]) -> SupportBall {
        let m = support.len();
        let mut best: Option<SupportBall> = None;
        for mask in 1u32..(1u32 << m) {
            let sub: Vec<usize> = (0..m).filter(|k| mask & (1 << k) != 0).map(|k| support[k]).collect();
            let sp: Vec<&[f64]> = sub.iter().map(|&i| self.pts[i]).collect();
            let Ok((center, r2)) = circumball_raw(&sp) else { continue };
            let radius = r2.sqrt();
            if best.as_ref().is_some_and(|b| b.radius <= radius) {
                continue;
            }
            let encloses = support
                .iter()
                .all(|&i| linalg::dist2(&center, self.pts[i]).sqrt() <= radius + self.slack);
            if encloses {
                best = Some(SupportBall { center, radius });
            }
        }
        best.expect("a single point always yields a ball")
    }

    fn outside(&self, ball: &Option<SupportBall>, idx: usize) -> bool {
        match ball {
            None => true,
            Some(b) => linalg::dist2(&b.center, self.pts[idx]).sqrt() > b.radius + self.slack,
        }
    }

    /// Smallest ball enclosing `order[..end]` with `support` on its boundary.
    fn run(&mut self, end: usize, support: &mut Vec<usize>) -> Option<SupportBall> {
        let mut ball = self.ball_through(support);
        if support.len() == self.dim + 1 {
            return ball;
        }
        for i in 0..end {
            let idx = self.order[i];
            if self.outside(&ball, idx) {
                support.push(idx);
                ball = self.run(i, support);
                support.pop();
                self.order[..=i].rotate_right(1);
                self.updates += 1;
            }
        }
        ball
    }
}

pub(crate) fn welzl(pts: &[&[f64]], seed: u64) -> (SupportBall, usize) {
    let dim = pts[0].len();
    let scale = pts
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, c| m.max(c.abs()));
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.shuffle(&mut rng_from_seed(seed));
    let mut mtf = MoveToFront {
        pts,
        dim,
        slack: 1e-12 * (1.0 + scale),
        order,
        updates: 0,
    };
    let n = pts.len();
    let ball = mtf.run(n, &mut Vec::with_capacity(dim + 1)).expect("nonempty input");
    (ball, mtf.updates)
}

/// Exact MEB radius of a raw point list.
pub(crate) fn meb_radius(pts: &[&[f64]]) -> f64 {
    let (ball, _) = welzl(pts, DEFAULT_SHUFFLE_SEED);
    enclosing_radius(pts, &ball.center)
}

pub(crate) fn solve_slices(pts: &[&[f64]], seed: u64, tol: f64) -> MebSolution {
    let (ball, updates) = welzl(pts, seed);
    let radius = enclosing_radius(pts, &ball.center);
    let support = support_for(pts, &ball.center, radius, tol);
    MebSolution::new(ball.center, radius, support, updates, Algorithm::Welzl)
}

/// The unique minimum enclosing ball of `points`.
pub fn exact_meb(points: &PointSet) -> Result<MebSolution> {
    exact_meb_seeded(points, DEFAULT_SHUFFLE_SEED)
}

/// [`exact_meb`] with an explicit seed for the initial shuffle. The result
/// does not depend on the seed beyond rounding.
pub fn exact_meb_seeded(points: &PointSet, seed: u64) -> Result<MebSolution> {
    Ok(solve_slices(&points.slices(), seed, points.tolerance()))
}
