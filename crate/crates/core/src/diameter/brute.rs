use super::DiameterResult;
use crate::error::{MebError, Result};
use crate::geometry::PointSet;
use crate::linalg;

/// Exact diameter by comparing every pair.
pub fn diameter_bruteforce(points: &PointSet) -> Result<DiameterResult> {
    let n = points.len();
    if n < 2 {
        return Err(MebError::TooFewPoints { required: 2, got: n });
    }
    let pts = points.slices();
    let mut best = (0usize, 1usize, f64::NEG_INFINITY);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = linalg::dist2(pts[i], pts[j]).sqrt();
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    let tol = points.tolerance();
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if linalg::dist2(pts[i], pts[j]).sqrt() >= best.2 - tol {
                count += 1;
            }
        }
    }
    Ok(DiameterResult {
        value: best.2,
        pair: Some((best.0, best.1)),
        exact: true,
        pairs_at_max: count,
    })
}
