use std::collections::BTreeSet;

use super::DiameterResult;
use crate::error::{MebError, Result};
use crate::geometry::PointSet;
use crate::linalg;

fn cross(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counter-clockwise hull vertex indices by Andrew's monotone chain;
/// collinear and duplicate points are dropped.
pub fn convex_hull_2d(points: &PointSet) -> Result<Vec<usize>> {
    if points.dim() != 2 {
        return Err(MebError::DimensionMismatch {
            expected: 2,
            got: points.dim(),
        });
    }
    let pts = points.slices();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a][0]
            .total_cmp(&pts[b][0])
            .then(pts[a][1].total_cmp(&pts[b][1]))
            .then(a.cmp(&b))
    });
    order.dedup_by(|a, b| pts[*a] == pts[*b]);
    if order.len() <= 2 {
        return Ok(order);
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && cross(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0.0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    Ok(hull)
}

/// Exact planar diameter: convex hull, then rotating calipers over the
/// antipodal vertex pairs.
pub fn diameter_calipers_2d(points: &PointSet) -> Result<DiameterResult> {
    if points.dim() != 2 {
        return Err(MebError::DimensionMismatch {
            expected: 2,
            got: points.dim(),
        });
    }
    let n = points.len();
    if n < 2 {
        return Err(MebError::TooFewPoints { required: 2, got: n });
    }
    let pts = points.slices();
    let hull = convex_hull_2d(points)?;
    let h = hull.len();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let canon = |a: usize, b: usize| (a.min(b), a.max(b));
    match h {
        1 => {
            // all points coincide
            pairs.insert((0, 1));
        }
        2 => {
            pairs.insert(canon(hull[0], hull[1]));
        }
        _ => {
            let area = |i: usize, j: usize, k: usize| cross(pts[hull[i]], pts[hull[j]], pts[hull[k]]).abs();
            let mut j = 1;
            for i in 0..h {
                let ni = (i + 1) % h;
                while area(i, ni, (j + 1) % h) > area(i, ni, j) {
                    j = (j + 1) % h;
                }
                pairs.insert(canon(hull[i], hull[j]));
                pairs.insert(canon(hull[ni], hull[j]));
                // parallel edge: the next vertex is antipodal too
                if area(i, ni, (j + 1) % h) == area(i, ni, j) {
                    pairs.insert(canon(hull[i], hull[(j + 1) % h]));
                    pairs.insert(canon(hull[ni], hull[(j + 1) % h]));
                }
            }
        }
    }
    let dist = |(a, b): (usize, usize)| linalg::dist2(pts[a], pts[b]).sqrt();
    let (best_pair, best) = pairs
        .iter()
        .map(|&p| (p, dist(p)))
        .fold(((0, 1), f64::NEG_INFINITY), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
    let tol = points.tolerance();
    let pairs_at_max = pairs.iter().filter(|&&p| dist(p) >= best - tol).count();
    Ok(DiameterResult {
        value: best,
        pair: Some(best_pair),
        exact: true,
        pairs_at_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diameter::diameter_bruteforce;

    #[test]
    fn square() {
        let p = PointSet::from_rows(&[[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [0.0, 0.2]]).unwrap();
        let r = diameter_calipers_2d(&p).unwrap();
        assert!((r.value - 8f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.pairs_at_max, 2);
        assert_eq!(convex_hull_2d(&p).unwrap().len(), 4);
    }

    #[test]
    fn collinear_points() {
        let p = PointSet::from_rows(&[[1.0, 1.0], [3.0, 3.0], [0.0, 0.0], [2.0, 2.0]]).unwrap();
        let r = diameter_calipers_2d(&p).unwrap();
        assert_eq!(r.pair, Some((1, 2)));
        assert!((r.value - 18f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn duplicates_and_wrong_dimension() {
        let p = PointSet::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert_eq!(diameter_calipers_2d(&p).unwrap().value, 0.0);
        let q = PointSet::from_rows(&[[1.0, 1.0, 0.0], [1.0, 1.0, 1.0]]).unwrap();
        assert!(diameter_calipers_2d(&q).is_err());
    }

    #[test]
    fn polygon_matches_brute_force() {
        let rows: Vec<[f64; 2]> = (0..10)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 10.0;
                [t.cos(), t.sin()]
            })
            .collect();
        let p = PointSet::from_rows(&rows).unwrap();
        let c = diameter_calipers_2d(&p).unwrap();
        let b = diameter_bruteforce(&p).unwrap();
        assert_eq!(c.value, b.value);
        assert_eq!(c.pairs_at_max, 5);
    }
}
