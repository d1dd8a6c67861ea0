//! Farthest-point double sweep: hop to the farthest point until the hop
//! length stops growing. Every reported value is a realised pair distance,
//! hence a lower bound on the diameter.

use rand::Rng;

use super::DiameterResult;
use crate::error::{MebError, Result};
use crate::geometry::PointSet;
use crate::meb::farthest;
use crate::rng::{derive_seed, rng_from_seed};

pub const SWEEP_RESTARTS: usize = 3;
const DEFAULT_SEED: u64 = 0xD1A_5EED;

pub fn diameter_doublesweep(points: &PointSet) -> Result<DiameterResult> {
    diameter_doublesweep_seeded(points, DEFAULT_SEED)
}

pub fn diameter_doublesweep_seeded(points: &PointSet, seed: u64) -> Result<DiameterResult> {
    let n = points.len();
    if n < 2 {
        return Err(MebError::TooFewPoints { required: 2, got: n });
    }
    let pts = points.slices();
    let mut examined: Vec<(usize, usize, f64)> = Vec::new();
    for restart in 0..SWEEP_RESTARTS {
        let mut cur = rng_from_seed(derive_seed(seed, restart as u64)).random_range(0..n);
        let mut hop = f64::NEG_INFINITY;
        loop {
            let (far, d2) = farthest(&pts, pts[cur]);
            let d = d2.sqrt();
            if d <= hop {
                break;
            }
            hop = d;
            examined.push((cur.min(far), cur.max(far), d));
            cur = far;
        }
    }
    let best = examined
        .iter()
        .copied()
        .fold((0, 1, f64::NEG_INFINITY), |acc, cur| {
            if cur.2 > acc.2 || (cur.2 == acc.2 && (cur.0, cur.1) < (acc.0, acc.1)) {
                cur
            } else {
                acc
            }
        });
    let tol = points.tolerance();
    let mut at_max: Vec<(usize, usize)> = examined
        .iter()
        .filter(|e| e.2 >= best.2 - tol)
        .map(|e| (e.0, e.1))
        .collect();
    at_max.sort_unstable();
    at_max.dedup();
    Ok(DiameterResult {
        value: best.2,
        pair: Some((best.0, best.1)),
        exact: false,
        pairs_at_max: at_max.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diameter::diameter_bruteforce;

    #[test]
    fn two_points_are_exact() {
        let p = PointSet::from_rows(&[[0.0, 0.0], [3.0, 4.0]]).unwrap();
        let r = diameter_doublesweep(&p).unwrap();
        assert_eq!(r.value, 5.0);
        assert!(!r.exact);
    }

    #[test]
    fn never_exceeds_brute_force() {
        let p = PointSet::from_rows(&[[0.0, 0.0], [1.0, 3.0], [4.0, 1.0], [2.0, 2.0], [-1.0, 1.5]]).unwrap();
        let b = diameter_bruteforce(&p).unwrap();
        for seed in 0..20 {
            assert!(diameter_doublesweep_seeded(&p, seed).unwrap().value <= b.value);
        }
    }
}
