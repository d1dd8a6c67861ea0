//! Minimum enclosing ball solvers.
//!
//! * [`exact_meb`]: move-to-front recursion over support sets (expected linear time).
//! * [`hopp_reeve_meb`]: geometric shrink-toward-target construction.
//! * [`badoiu_clarkson`]: farthest-point core-set iteration with an a-priori error bound.
//! * [`elzinga_hearn_dual`]: the concave QP dual over the simplex, certified by [`kt_residuals`].

mod badoiu_clarkson;
mod dual;
mod hopp_reeve;
mod kkt;
pub(crate) mod welzl;

pub use badoiu_clarkson::{badoiu_clarkson, CoreSetRun, StartPoint};
pub use dual::{dual_objective, elzinga_hearn_dual, DualOptions, DualSolution};
pub use hopp_reeve::{hopp_reeve_iteration_bound, hopp_reeve_meb, HOPP_REEVE_HARD_CAP_FACTOR};
pub use kkt::{kt_residuals, KtResiduals};
pub use welzl::{exact_meb, exact_meb_seeded};

use serde::Serialize;

use crate::convexity::projection::project_onto_hull;
use crate::geometry::{Ball, Point, PointSet};
use crate::linalg;

/// Multipliers below this are treated as zero when pruning a support set.
pub const MULTIPLIER_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Welzl,
    HoppReeve,
    BadoiuClarkson,
    ElzingaHearnDual,
}

/// Boundary points with convex multipliers expressing the ball center.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SupportSet {
    pub indices: Vec<usize>,
    pub multipliers: Vec<f64>,
}

impl SupportSet {
    /// `sum_i lambda_i p_i`.
    pub fn reconstruct(&self, points: &PointSet) -> Point {
        let mut c = vec![0.0; points.dim()];
        for (&i, &l) in self.indices.iter().zip(&self.multipliers) {
            linalg::axpy(l, points[i].coords(), &mut c);
        }
        Point::from_vec_unchecked(c)
    }

    /// Full-length multiplier vector over `n` points.
    pub fn dense(&self, n: usize) -> Vec<f64> {
        let mut lambda = vec![0.0; n];
        for (&i, &l) in self.indices.iter().zip(&self.multipliers) {
            lambda[i] = l;
        }
        lambda
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MebSolution {
    pub ball: Ball,
    pub support: SupportSet,
    /// Squared radius.
    pub s: f64,
    pub iterations: usize,
    pub algorithm: Algorithm,
}

impl MebSolution {
    pub(crate) fn new(
        center: Vec<f64>,
        radius: f64,
        support: SupportSet,
        iterations: usize,
        algorithm: Algorithm,
    ) -> Self {
        MebSolution {
            ball: Ball {
                center: Point::from_vec_unchecked(center),
                radius,
            },
            s: radius * radius,
            support,
            iterations,
            algorithm,
        }
    }

    pub fn radius(&self) -> f64 {
        self.ball.radius
    }

    pub fn center(&self) -> &Point {
        &self.ball.center
    }
}

/// Largest distance from `center` to any point.
pub(crate) fn enclosing_radius(pts: &[&[f64]], center: &[f64]) -> f64 {
    pts.iter()
        .map(|p| linalg::dist2(center, p))
        .fold(0.0, f64::max)
        .sqrt()
}

/// Multipliers certifying `center` against the points within `tol` of the
/// sphere of radius `radius`: the projection of the center onto the hull of
/// those boundary points, pruned below [`MULTIPLIER_FLOOR`].
pub(crate) fn support_for(pts: &[&[f64]], center: &[f64], radius: f64, tol: f64) -> SupportSet {
    let boundary: Vec<usize> = (0..pts.len())
        .filter(|&i| radius - linalg::dist2(center, pts[i]).sqrt() <= tol)
        .collect();
    if boundary.is_empty() {
        return SupportSet::default();
    }
    let bpts: Vec<&[f64]> = boundary.iter().map(|&i| pts[i]).collect();
    let proj = project_onto_hull(center, &bpts);
    let mut pairs: Vec<(usize, f64)> = proj
        .indices
        .iter()
        .zip(&proj.weights)
        .filter(|(_, &w)| w >= MULTIPLIER_FLOOR)
        .map(|(&k, &w)| (boundary[k], w))
        .collect();
    pairs.sort_unstable_by_key(|&(i, _)| i);
    let total: f64 = pairs.iter().map(|(_, w)| w).sum();
    SupportSet {
        indices: pairs.iter().map(|&(i, _)| i).collect(),
        multipliers: pairs.iter().map(|&(_, w)| w / total).collect(),
    }
}

/// Index and squared distance of the point farthest from `c`; ties go to the
/// lowest index, so the parallel and sequential scans agree bitwise.
pub(crate) fn farthest(pts: &[&[f64]], c: &[f64]) -> (usize, f64) {
    use rayon::prelude::*;

    const PAR_THRESHOLD: usize = 1 << 14;
    let pick = |a: (usize, f64), b: (usize, f64)| {
        if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
            b
        } else {
            a
        }
    };
    if pts.len() >= PAR_THRESHOLD {
        pts.par_iter()
            .enumerate()
            .map(|(i, p)| (i, linalg::dist2(c, p)))
            .reduce(|| (usize::MAX, f64::NEG_INFINITY), pick)
    } else {
        pts.iter()
            .enumerate()
            .map(|(i, p)| (i, linalg::dist2(c, p)))
            .fold((usize::MAX, f64::NEG_INFINITY), pick)
    }
}
