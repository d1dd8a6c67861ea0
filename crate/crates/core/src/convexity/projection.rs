//! Euclidean projection onto the convex hull of a finite set, by
//! support-point descent with affine corrections (min-norm-point scheme).

use crate::error::{MebError, Result};
use crate::geometry::{Point, PointSet};
use crate::linalg::{affine_min_norm, dot, norm2, sub};

/// Nearest point of a hull together with its convex-combination certificate.
#[derive(Debug, Clone)]
pub struct HullProjection {
    pub point: Vec<f64>,
    pub distance: f64,
    /// Indices into the hull's point list with strictly positive weight.
    pub indices: Vec<usize>,
    pub weights: Vec<f64>,
}

const WEIGHT_FLOOR: f64 = 1e-15;

pub(crate) fn project_onto_hull(a: &[f64], pts: &[&[f64]]) -> HullProjection {
    let ys: Vec<Vec<f64>> = pts.iter().map(|p| sub(p, a)).collect();
    let scale2 = ys.iter().map(|y| norm2(y)).fold(0.0, f64::max);
    let (j0, _) = ys
        .iter()
        .enumerate()
        .map(|(i, y)| (i, norm2(y)))
        .fold((0, f64::INFINITY), |acc, cur| if cur.1 < acc.1 { cur } else { acc });
    if scale2 == 0.0 {
        return HullProjection {
            point: a.to_vec(),
            distance: 0.0,
            indices: vec![j0],
            weights: vec![1.0],
        };
    }

    let gap_tol = 1e-15 * scale2;
    let mut active = vec![j0];
    let mut w = vec![1.0];
    let mut x = ys[j0].clone();
    let max_major = 50 * (pts.len() + a.len()) + 100;

    for _ in 0..max_major {
        let xx = norm2(&x);
        let (j, xy) = ys
            .iter()
            .enumerate()
            .map(|(i, y)| (i, dot(&x, y)))
            .fold((0, f64::INFINITY), |acc, cur| if cur.1 < acc.1 { cur } else { acc });
        if xx - xy <= gap_tol || active.contains(&j) {
            break;
        }
        active.push(j);
        w.push(0.0);

        // minor cycles: move toward the affine minimiser of the active set
        // until it lies inside the relative interior of its simplex
        loop {
            let refs: Vec<&[f64]> = active.iter().map(|&i| ys[i].as_slice()).collect();
            let alpha = affine_min_norm(&refs);
            if alpha.iter().all(|&v| v > WEIGHT_FLOOR) {
                w = alpha;
                break;
            }
            let mut theta = 1.0f64;
            let mut drop = 0;
            for (k, (&wk, &ak)) in w.iter().zip(&alpha).enumerate() {
                if ak <= WEIGHT_FLOOR && wk - ak > 0.0 {
                    let t = wk / (wk - ak);
                    if t < theta {
                        theta = t;
                        drop = k;
                    }
                }
            }
            for (wk, ak) in w.iter_mut().zip(&alpha) {
                *wk += theta * (ak - *wk);
            }
            w[drop] = 0.0;
            let mut k = 0;
            while k < w.len() {
                if w[k] <= WEIGHT_FLOOR {
                    w.remove(k);
                    active.remove(k);
                } else {
                    k += 1;
                }
            }
            if active.is_empty() {
                active.push(j);
            }
            if active.len() == 1 {
                w = vec![1.0];
                break;
            }
        }
        let total: f64 = w.iter().sum();
        w.iter_mut().for_each(|v| *v /= total);
        x = vec![0.0; a.len()];
        for (&i, &wi) in active.iter().zip(&w) {
            crate::linalg::axpy(wi, &ys[i], &mut x);
        }
    }

    let mut dist2 = norm2(&x);
    if dist2 <= 1e-24 * scale2 {
        dist2 = 0.0;
    }
    let point = a.iter().zip(&x).map(|(ai, xi)| ai + xi).collect();
    HullProjection {
        point,
        distance: dist2.sqrt(),
        indices: active,
        weights: w,
    }
}

/// Euclidean distance from `a` to the convex hull of `q`.
pub fn dist_to_hull(a: &Point, q: &PointSet) -> Result<f64> {
    q.check_dim(a)?;
    Ok(project_onto_hull(a.coords(), &q.slices()).distance)
}

/// Nearest hull point and the convex combination realising it.
pub fn project_to_hull(a: &Point, q: &PointSet) -> Result<HullProjection> {
    if q.is_empty() {
        return Err(MebError::EmptyInput("hull"));
    }
    q.check_dim(a)?;
    Ok(project_onto_hull(a.coords(), &q.slices()))
}
