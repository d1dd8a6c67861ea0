use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::{Ball, PointSet};
use crate::linalg;

/// Max-norm residuals of the Kuhn-Tucker system for `(s, c) = (r^2, center)`
/// with multipliers `lambda`. All fields are nonnegative; zero everywhere
/// means an exact optimality certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KtResiduals {
    /// `|sum_i l_i - 1|`
    pub normalization: f64,
    /// `|sum_i l_i (p_i - c)|`
    pub stationarity: f64,
    /// `max_i |l_i (s - |p_i - c|^2)|`
    pub complementary_slackness: f64,
    /// `max(0, -min_i l_i)`
    pub dual_feasibility: f64,
    /// `max(0, max_i |p_i - c|^2 - s)`
    pub primal_feasibility: f64,
}

impl KtResiduals {
    pub fn max(&self) -> f64 {
        [
            self.normalization,
            self.stationarity,
            self.complementary_slackness,
            self.dual_feasibility,
            self.primal_feasibility,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

pub fn kt_residuals(points: &PointSet, ball: &Ball, lambda: &[f64]) -> Result<KtResiduals> {
    if lambda.len() != points.len() {
        return Err(MebError::LengthMismatch {
            expected: points.len(),
            got: lambda.len(),
        });
    }
    points.check_dim(&ball.center)?;
    let c = ball.center.coords();
    let s = ball.radius * ball.radius;
    let mut weighted = vec![0.0; c.len()];
    let mut slack: f64 = 0.0;
    let mut primal: f64 = 0.0;
    for (p, &l) in points.iter().zip(lambda) {
        let diff = linalg::sub(p.coords(), c);
        let d2 = linalg::norm2(&diff);
        linalg::axpy(l, &diff, &mut weighted);
        slack = slack.max((l * (s - d2)).abs());
        primal = primal.max(d2 - s);
    }
    let min_l = lambda.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(KtResiduals {
        normalization: (lambda.iter().sum::<f64>() - 1.0).abs(),
        stationarity: linalg::norm2(&weighted).sqrt(),
        complementary_slackness: slack,
        dual_feasibility: (-min_l).max(0.0),
        primal_feasibility: primal.max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::meb::{elzinga_hearn_dual, DualOptions};

    fn square() -> PointSet {
        PointSet::from_rows(&[[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [0.2, 0.1]]).unwrap()
    }

    #[test]
    fn solver_output_is_certified() {
        let p = square();
        let sol = elzinga_hearn_dual(&p, DualOptions::default()).unwrap();
        let res = kt_residuals(&p, &sol.solution.ball, &sol.lambda).unwrap();
        assert!(res.max() <= 1e-6, "{res:?}");
    }

    #[test]
    fn perturbed_center_breaks_stationarity() {
        let p = square();
        let sol = elzinga_hearn_dual(&p, DualOptions::default()).unwrap();
        let mut c = sol.solution.center().coords().to_vec();
        c[0] += 0.1;
        let ball = Ball::new(Point::new(c).unwrap(), sol.solution.radius()).unwrap();
        let res = kt_residuals(&p, &ball, &sol.lambda).unwrap();
        assert!(res.stationarity > 0.01 || res.primal_feasibility > 0.01);
    }

    #[test]
    fn zero_multipliers_violate_normalization() {
        let p = square();
        let ball = Ball::new(Point::origin(2), 2f64.sqrt()).unwrap();
        let res = kt_residuals(&p, &ball, &[0.0; 5]).unwrap();
        assert_eq!(res.normalization, 1.0);
        assert!(kt_residuals(&p, &ball, &[0.0; 4]).is_err());
    }
}
