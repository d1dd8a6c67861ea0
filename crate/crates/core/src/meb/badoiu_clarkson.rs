//! Farthest-point core-set iteration: `c_i = c_{i-1} + (p_i - c_{i-1}) / i`
//! with `p_i` the point farthest from `c_{i-1}`. After `i` steps the center
//! is within `r* / sqrt(i)` of the optimal one.

use rand::Rng;
use serde::Serialize;

use super::{farthest, Algorithm, MebSolution, SupportSet};
use crate::error::{MebError, Result};
use crate::geometry::{Point, PointSet};
use crate::rng::rng_from_seed;

/// How the first center `c_1` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartPoint {
    /// `c_1 = p_0`.
    #[default]
    First,
    Index(usize),
    /// Uniformly random input point drawn from this seed.
    Seeded(u64),
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreSetRun {
    /// Ball `(c_k, r_k)`; its support is the point attaining `r_k` with unit weight.
    pub solution: MebSolution,
    /// Start index followed by the farthest point picked at each step.
    pub core_indices: Vec<usize>,
    /// `c_1, ..., c_k`.
    pub centers: Vec<Point>,
}

pub fn badoiu_clarkson(points: &PointSet, k: usize, start: StartPoint) -> Result<CoreSetRun> {
    if k == 0 {
        return Err(MebError::param("k", "iteration count must be >= 1"));
    }
    let n = points.len();
    let j = match start {
        StartPoint::First => 0,
        StartPoint::Index(j) if j < n => j,
        StartPoint::Index(j) => {
            return Err(MebError::param("start", format!("index {j} out of range for {n} points")))
        }
        StartPoint::Seeded(seed) => rng_from_seed(seed).random_range(0..n),
    };
    let pts = points.slices();
    let mut c = pts[j].to_vec();
    let mut centers = Vec::with_capacity(k);
    let mut core = Vec::with_capacity(k);
    centers.push(Point::from_vec_unchecked(c.clone()));
    core.push(j);
    for i in 2..=k {
        let (far, _) = farthest(&pts, &c);
        let step = 1.0 / i as f64;
        for (ci, pi) in c.iter_mut().zip(pts[far]) {
            *ci += (pi - *ci) * step;
        }
        centers.push(Point::from_vec_unchecked(c.clone()));
        core.push(far);
    }
    let (far, d2) = farthest(&pts, &c);
    let support = SupportSet {
        indices: vec![far],
        multipliers: vec![1.0],
    };
    Ok(CoreSetRun {
        solution: MebSolution::new(c, d2.sqrt(), support, k, Algorithm::BadoiuClarkson),
        core_indices: core,
        centers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meb::exact_meb;

    fn set(rows: &[&[f64]]) -> PointSet {
        PointSet::from_rows(rows).unwrap()
    }

    #[test]
    fn hand_trace_two_points() {
        let p = set(&[&[-1.0, 0.0], &[1.0, 0.0]]);
        let run = badoiu_clarkson(&p, 2, StartPoint::First).unwrap();
        assert_eq!(run.centers[0].coords(), &[-1.0, 0.0]);
        assert_eq!(run.centers[1].coords(), &[0.0, 0.0]);
        assert_eq!(run.core_indices, vec![0, 1]);
        assert_eq!(run.solution.radius(), 1.0);
    }

    #[test]
    fn single_iteration_is_start_point() {
        let p = set(&[&[0.0, 0.0], &[3.0, 4.0], &[1.0, 0.0]]);
        let run = badoiu_clarkson(&p, 1, StartPoint::First).unwrap();
        assert_eq!(run.solution.center().coords(), &[0.0, 0.0]);
        assert_eq!(run.solution.radius(), 5.0);
        assert_eq!(run.centers.len(), 1);
    }

    #[test]
    fn square_certificate_after_100_steps() {
        let p = set(&[&[1.0, 1.0], &[-1.0, 1.0], &[-1.0, -1.0], &[1.0, -1.0]]);
        let exact = exact_meb(&p).unwrap();
        let run = badoiu_clarkson(&p, 100, StartPoint::First).unwrap();
        for (i, c) in run.centers.iter().enumerate() {
            let err = crate::geometry::distance(c, exact.center()).unwrap();
            assert!(err <= exact.radius() / ((i + 1) as f64).sqrt() + 1e-9);
        }
    }

    #[test]
    fn rejects_zero_iterations_and_bad_start() {
        let p = set(&[&[0.0], &[1.0]]);
        assert!(badoiu_clarkson(&p, 0, StartPoint::First).is_err());
        assert!(badoiu_clarkson(&p, 3, StartPoint::Index(5)).is_err());
        let a = badoiu_clarkson(&p, 3, StartPoint::Seeded(11)).unwrap();
        let b = badoiu_clarkson(&p, 3, StartPoint::Seeded(11)).unwrap();
        assert_eq!(a.core_indices, b.core_indices);
    }
}
