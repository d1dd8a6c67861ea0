use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::{Point, PointSet};
use crate::linalg;

/// `target = sum_i coefficients[i] * P[indices[i]]` with nonnegative
/// coefficients summing to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexCombination {
    pub indices: Vec<usize>,
    pub coefficients: Vec<f64>,
    pub target: Point,
}

const SUM_TOL: f64 = 1e-9;

impl ConvexCombination {
    /// Builds the combination and computes its target.
    pub fn from_weights(points: &PointSet, indices: Vec<usize>, coefficients: Vec<f64>) -> Result<Self> {
        if indices.len() != coefficients.len() {
            return Err(MebError::LengthMismatch {
                expected: indices.len(),
                got: coefficients.len(),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= points.len()) {
            return Err(MebError::InvalidCombination(format!("index {bad} out of range")));
        }
        let target = Point::new(combine(points, &indices, &coefficients))
            .map_err(|e| MebError::InvalidCombination(e.to_string()))?;
        let combo = ConvexCombination {
            indices,
            coefficients,
            target,
        };
        combo.validate(points)?;
        Ok(combo)
    }

    /// Uniform weights over every point: the target is the barycenter.
    pub fn uniform(points: &PointSet) -> Self {
        let n = points.len();
        Self::from_weights(points, (0..n).collect(), vec![1.0 / n as f64; n])
            .expect("uniform weights are a valid combination")
    }

    pub fn validate(&self, points: &PointSet) -> Result<()> {
        let bad = |msg: String| Err(MebError::InvalidCombination(msg));
        if self.indices.is_empty() {
            return bad("no points".into());
        }
        if self.indices.len() != self.coefficients.len() {
            return bad("indices and coefficients differ in length".into());
        }
        if let Some(&i) = self.indices.iter().find(|&&i| i >= points.len()) {
            return bad(format!("index {i} out of range"));
        }
        if let Some(c) = self.coefficients.iter().find(|c| !(**c >= 0.0) || !c.is_finite()) {
            return bad(format!("coefficient {c} is negative or not finite"));
        }
        let sum: f64 = self.coefficients.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return bad(format!("coefficients sum to {sum}"));
        }
        points.check_dim(&self.target)?;
        let rec = combine(points, &self.indices, &self.coefficients);
        let err = linalg::dist2(&rec, self.target.coords()).sqrt();
        if err > points.tolerance() {
            return bad(format!("reconstruction misses target by {err:e}"));
        }
        Ok(())
    }

    /// Number of strictly positive coefficients.
    pub fn support_size(&self) -> usize {
        self.coefficients.iter().filter(|&&c| c > 0.0).count()
    }

    pub fn reconstruct(&self, points: &PointSet) -> Point {
        Point::from_vec_unchecked(combine(points, &self.indices, &self.coefficients))
    }
}

fn combine(points: &PointSet, indices: &[usize], coefficients: &[f64]) -> Vec<f64> {
    let mut acc = vec![0.0; points.dim()];
    for (&i, &w) in indices.iter().zip(coefficients) {
        linalg::axpy(w, points[i].coords(), &mut acc);
    }
    acc
}

/// Rewrites a convex combination over at most `d + 1` points with the same
/// target, by repeatedly shifting weight along an affine dependence until a
/// coefficient vanishes.
pub fn caratheodory_reduce(points: &PointSet, combo: &ConvexCombination) -> Result<ConvexCombination> {
    combo.validate(points)?;
    let d = points.dim();
    if combo.indices.len() <= d + 1 {
        return Ok(combo.clone());
    }
    let mut active: Vec<(usize, f64)> = combo
        .indices
        .iter()
        .copied()
        .zip(combo.coefficients.iter().copied())
        .filter(|&(_, w)| w > 0.0)
        .collect();

    while active.len() > d + 1 {
        let head = &active[..d + 2];
        let pts: Vec<&[f64]> = head.iter().map(|&(i, _)| points[i].coords()).collect();
        let mut alpha = linalg::affine_dependence(&pts)
            .ok_or_else(|| MebError::InvalidCombination("no affine dependence among d+2 points".into()))?;
        if alpha.iter().all(|&a| a <= 0.0) {
            alpha.iter_mut().for_each(|a| *a = -*a);
        }
        let (hit, t) = head
            .iter()
            .zip(&alpha)
            .enumerate()
            .filter(|(_, (_, &a))| a > 0.0)
            .map(|(k, (&(_, w), &a))| (k, w / a))
            .fold((0, f64::INFINITY), |acc, cur| if cur.1 < acc.1 { cur } else { acc });
        for (k, a) in alpha.iter().enumerate() {
            active[k].1 -= t * a;
        }
        active[hit].1 = 0.0;
        let floor = 1e-15;
        active.retain(|&(_, w)| w > floor);
    }

    let total: f64 = active.iter().map(|(_, w)| w).sum();
    active.sort_unstable_by_key(|&(i, _)| i);
    let indices: Vec<usize> = active.iter().map(|&(i, _)| i).collect();
    let coefficients: Vec<f64> = active.iter().map(|&(_, w)| w / total).collect();
    Ok(ConvexCombination {
        indices,
        coefficients,
        target: combo.target.clone(),
    })
}
