//! Geometric MEB construction: keep an enclosing ball with a candidate set
//! `Q` on its surface, aim the center at the MEB center of `Q`, and shrink
//! toward it until the surface touches a new point.

use super::welzl::{solve_slices, DEFAULT_SHUFFLE_SEED};
use super::{enclosing_radius, farthest, Algorithm, MebSolution, SupportSet};
use crate::error::{MebError, Result};
use crate::geometry::{Ball, Point, PointSet};
use crate::linalg;

/// Hard iteration cap is `HOPP_REEVE_HARD_CAP_FACTOR * n * (d + 1)`.
pub const HOPP_REEVE_HARD_CAP_FACTOR: u64 = 10;

/// `sum_{i=2}^{min(n, d+1)} C(n, i)`, the number of candidate sets an
/// exact-arithmetic run can visit. `None` on `u128` overflow.
pub fn hopp_reeve_iteration_bound(n: usize, d: usize) -> Option<u128> {
    let n = n as u128;
    let top = n.min(d as u128 + 1);
    let mut binom: u128 = n; // C(n, 1)
    let mut total: u128 = 0;
    for i in 2..=top {
        binom = binom.checked_mul(n - i + 1)? / i;
        total = total.checked_add(binom)?;
    }
    Some(total)
}

fn iteration_cap(n: usize, d: usize) -> u64 {
    let hard = HOPP_REEVE_HARD_CAP_FACTOR
        .saturating_mul(n as u64)
        .saturating_mul(d as u64 + 1);
    match hopp_reeve_iteration_bound(n, d) {
        Some(b) if b < hard as u128 => b as u64,
        _ => hard,
    }
}

pub fn hopp_reeve_meb(points: &PointSet) -> Result<MebSolution> {
    let n = points.len();
    if n < 2 {
        return Err(MebError::TooFewPoints { required: 2, got: n });
    }
    let d = points.dim();
    let pts = points.slices();
    let scale = points.scale();
    let tol = points.tolerance();
    let eps2 = 1e-12 * (1.0 + scale) * (1.0 + scale);
    let cap = iteration_cap(n, d);

    let mut c = pts[0].to_vec();
    let (q0, _) = farthest(&pts, &c);
    let mut q: Vec<usize> = vec![q0];
    let mut in_q = vec![false; n];
    in_q[q0] = true;
    let mut contacts: u64 = 0;
    let mut rounds = 0usize;

    loop {
        rounds += 1;
        // Step 1: target = MEB center of Q; keep only constraining points.
        let qpts: Vec<&[f64]> = q.iter().map(|&i| pts[i]).collect();
        let target = solve_slices(&qpts, DEFAULT_SHUFFLE_SEED, tol);
        let kept: Vec<usize> = target.support.indices.iter().map(|&k| q[k]).collect();
        let multipliers = target.support.multipliers.clone();
        for &i in &q {
            in_q[i] = false;
        }
        q = kept;
        for &i in &q {
            in_q[i] = true;
        }
        let t = target.ball.center.coords().to_vec();
        let support = SupportSet {
            indices: q.clone(),
            multipliers,
        };
        if q.len() == d + 1 {
            return Ok(finish(&pts, t, support, rounds));
        }

        // Step 2: slide c toward t, all of Q stays on the surface.
        let v = linalg::sub(&t, &c);
        if linalg::norm2(&v) == 0.0 {
            return Ok(finish(&pts, t, support, rounds));
        }
        let qref = pts[q[0]];
        let cq2 = linalg::dist2(&c, qref);
        let mut hits: Vec<(usize, f64)> = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            if in_q[i] {
                continue;
            }
            // |c + s v - p|^2 - |c + s v - q|^2 = f0 + s * slope
            let f0 = linalg::dist2(&c, p) - cq2;
            let diff = linalg::sub(qref, p);
            let slope = 2.0 * linalg::dot(&v, &diff);
            if slope > 0.0 && f0 + slope > eps2 {
                let s = (-f0 / slope).clamp(0.0, 1.0);
                hits.push((i, s));
            }
        }
        let Some(s_min) = hits.iter().map(|h| h.1).reduce(f64::min) else {
            return Ok(finish(&pts, t, support, rounds));
        };
        linalg::axpy(s_min, &v, &mut c);
        for (i, s) in hits {
            // all simultaneous contacts join Q
            if s <= s_min + 1e-12 {
                q.push(i);
                in_q[i] = true;
            }
        }
        q.sort_unstable();
        contacts += 1;
        if contacts > cap {
            let radius = enclosing_radius(&pts, &c);
            return Err(MebError::IterationCap {
                cap,
                best: Ball {
                    center: Point::from_vec_unchecked(c),
                    radius,
                },
            });
        }
    }
}

fn finish(pts: &[&[f64]], center: Vec<f64>, support: SupportSet, rounds: usize) -> MebSolution {
    let radius = enclosing_radius(pts, &center);
    MebSolution::new(center, radius, support, rounds, Algorithm::HoppReeve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meb::exact_meb;

    fn set(rows: &[&[f64]]) -> PointSet {
        PointSet::from_rows(rows).unwrap()
    }

    #[test]
    fn iteration_bound_values() {
        // C(4,2) + C(4,3)
        assert_eq!(hopp_reeve_iteration_bound(4, 2), Some(10));
        assert_eq!(hopp_reeve_iteration_bound(2, 5), Some(1));
        // d + 1 > n: sum runs to n
        assert_eq!(hopp_reeve_iteration_bound(3, 9), Some(3 + 1));
        assert_eq!(hopp_reeve_iteration_bound(1, 3), Some(0));
        assert_eq!(hopp_reeve_iteration_bound(10_000, 200), None);
        assert_eq!(iteration_cap(4, 2), 10);
        assert_eq!(iteration_cap(30, 4), 1500);
        assert_eq!(iteration_cap(10_000, 200), 10 * 10_000 * 201);
    }

    #[test]
    fn antipodal_pair_terminates_on_target() {
        let s = hopp_reeve_meb(&set(&[&[-1.0, 0.0], &[1.0, 0.0]])).unwrap();
        assert!((s.radius() - 1.0).abs() < 1e-15);
        assert!(s.center().coords().iter().all(|c| c.abs() < 1e-15));
        // one contact round, then the target is reached
        assert_eq!(s.iterations, 2);
    }

    #[test]
    fn matches_exact_on_small_sets() {
        let cases: Vec<Vec<Vec<f64>>> = vec![
            vec![vec![1.0, 1.0], vec![-1.0, 1.0], vec![-1.0, -1.0], vec![1.0, -1.0]],
            vec![vec![0.0, 0.0], vec![4.0, 0.0], vec![1.0, 3.0], vec![2.0, 1.0], vec![3.0, -1.0]],
            vec![vec![0.0], vec![5.0], vec![2.0], vec![-1.0]],
        ];
        for rows in cases {
            let p = PointSet::from_rows(&rows).unwrap();
            let hr = hopp_reeve_meb(&p).unwrap();
            let ex = exact_meb(&p).unwrap();
            assert!((hr.radius() - ex.radius()).abs() <= 1e-9 * ex.radius());
        }
    }

    #[test]
    fn needs_two_points() {
        assert!(matches!(
            hopp_reeve_meb(&set(&[&[1.0, 2.0]])),
            Err(MebError::TooFewPoints { .. })
        ));
    }
}
