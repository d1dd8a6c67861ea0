//! Enclosing-radius bounds in terms of the diameter and of small-subset
//! barycenters, plus the fractional Helly constant.

use serde::Serialize;

use crate::combinatorics::for_each_combination;
use crate::diameter::diameter_bruteforce;
use crate::error::{MebError, Result};
use crate::geometry::{mean_of, PointSet};
use crate::linalg;
use crate::meb::exact_meb;

/// `beta(d, alpha) = 1 - (1 - alpha)^(1/(d+1))`: if an `alpha` fraction of
/// the `(d+1)`-subfamilies of `n` convex sets intersect, some point lies in
/// at least `beta * n` of the sets.
pub fn fractional_helly_beta(d: usize, alpha: f64) -> Result<f64> {
    if d == 0 {
        return Err(MebError::ZeroDimension);
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(MebError::param("alpha", format!("must lie in (0, 1], got {alpha}")));
    }
    Ok(1.0 - (1.0 - alpha).powf(1.0 / (d as f64 + 1.0)))
}

/// `sqrt(d / (2 (d + 1)))`.
pub fn jung_coefficient(d: usize) -> f64 {
    (d as f64 / (2.0 * (d as f64 + 1.0))).sqrt()
}

#[derive(Debug, Clone, Serialize)]
pub struct JungBound {
    pub bound: f64,
    pub diameter: f64,
    pub meb_radius: f64,
    /// The MEB radius attains the bound within tolerance.
    pub tight: bool,
}

pub fn jung_bound(points: &PointSet) -> Result<JungBound> {
    let diam = diameter_bruteforce(points)?.value;
    let bound = jung_coefficient(points.dim()) * diam;
    let meb_radius = exact_meb(points)?.radius();
    Ok(JungBound {
        bound,
        diameter: diam,
        meb_radius,
        tight: (meb_radius - bound).abs() <= points.tolerance(),
    })
}

/// Largest exhaustive input for [`barycentric_circumradius`].
pub const BARYCENTRIC_MAX_POINTS: usize = 16;

/// Max over subsets `T` with `2 <= |T| <= d + 1` of the largest distance
/// from a vertex of `T` to the barycenter of `T`.
pub fn barycentric_circumradius(points: &PointSet) -> Result<f64> {
    let n = points.len();
    if n < 2 {
        return Err(MebError::TooFewPoints { required: 2, got: n });
    }
    if n > BARYCENTRIC_MAX_POINTS {
        return Err(MebError::BudgetExceeded {
            what: "barycentric circumradius subset enumeration",
            required: n as u128,
            budget: BARYCENTRIC_MAX_POINTS as u128,
        });
    }
    let pts = points.slices();
    let mut best: f64 = 0.0;
    for size in 2..=(points.dim() + 1).min(n) {
        for_each_combination(n, size, |sub| {
            let sp: Vec<&[f64]> = sub.iter().map(|&i| pts[i]).collect();
            let bary = mean_of(&sp);
            for p in &sp {
                best = best.max(linalg::dist2(p, &bary));
            }
            true
        });
    }
    Ok(best.sqrt())
}
