use serde::Serialize;

use super::projection::project_onto_hull;
use crate::error::{MebError, Result};
use crate::geometry::{Point, PointSet};
use crate::linalg;

/// Split of `d + 2` points into two parts whose hulls share `witness`.
#[derive(Debug, Clone, Serialize)]
pub struct RadonPartition {
    /// Points with positive dependence coefficient.
    pub positive: Vec<usize>,
    /// Points with nonpositive coefficient (zero-weight points land here).
    pub negative: Vec<usize>,
    pub witness: Point,
    /// Affine dependence: `sum a_i p_i = 0`, `sum a_i = 0`, scaled to max |a_i| = 1.
    pub coefficients: Vec<f64>,
    /// Distance from the witness to each side's hull (both ~0).
    pub dist_to_positive: f64,
    pub dist_to_negative: f64,
}

pub fn radon_partition(points: &PointSet) -> Result<RadonPartition> {
    let d = points.dim();
    if points.len() != d + 2 {
        return Err(MebError::param(
            "points",
            format!("need exactly d+2 = {} points, got {}", d + 2, points.len()),
        ));
    }
    let pts = points.slices();
    let mut alpha = linalg::affine_dependence(&pts)
        .ok_or_else(|| MebError::Degenerate {
            indices: (0..pts.len()).collect(),
        })?;
    let amax = alpha.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    if amax == 0.0 {
        return Err(MebError::Degenerate {
            indices: (0..pts.len()).collect(),
        });
    }
    alpha.iter_mut().for_each(|a| *a /= amax);

    let positive: Vec<usize> = (0..pts.len()).filter(|&i| alpha[i] > 0.0).collect();
    let negative: Vec<usize> = (0..pts.len()).filter(|&i| alpha[i] <= 0.0).collect();
    let wsum: f64 = positive.iter().map(|&i| alpha[i]).sum();
    let mut witness = vec![0.0; d];
    for &i in &positive {
        linalg::axpy(alpha[i] / wsum, pts[i], &mut witness);
    }
    let side = |idx: &[usize]| {
        let s: Vec<&[f64]> = idx.iter().map(|&i| pts[i]).collect();
        project_onto_hull(&witness, &s).distance
    };
    let dist_to_positive = side(&positive);
    let dist_to_negative = side(&negative);
    Ok(RadonPartition {
        positive,
        negative,
        witness: Point::from_vec_unchecked(witness),
        coefficients: alpha,
        dist_to_positive,
        dist_to_negative,
    })
}
