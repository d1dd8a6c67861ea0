//! Concave QP dual of the MEB problem over the unit simplex:
//!
//! ```text
//! max  sum_i l_i p_i.p_i - l^T (A^T A) l    s.t.  l >= 0, sum_i l_i = 1
//! ```
//!
//! The center is recovered as `c = sum_i l_i p_i` and the squared radius as
//! `s = sum_i l_i |p_i - c|^2`. The solver is Frank-Wolfe with away steps and
//! exact line search; every few iterations the active set is polished by an
//! exact equality-constrained solve. The duality gap
//! `max_i |p_i - c|^2 - s` is both the stopping rule and the certificate.

use serde::Serialize;

use super::{Algorithm, MebSolution, SupportSet, MULTIPLIER_FLOOR};
use crate::error::{MebError, Result};
use crate::geometry::{circumball_raw, mean_of, PointSet};
use crate::linalg::{self, affine_min_norm};

#[derive(Debug, Clone, Copy)]
pub struct DualOptions {
    /// Relative duality-gap target, `gap <= tol * s`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for DualOptions {
    fn default() -> Self {
        DualOptions {
            tol: 1e-12,
            max_iter: 200_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualSolution {
    pub solution: MebSolution,
    /// Full multiplier vector, one entry per input point.
    pub lambda: Vec<f64>,
    /// Dual objective at `lambda`.
    pub dual_value: f64,
    /// `max_i |p_i - c|^2 - s` at termination.
    pub gap: f64,
}

/// `sum_i l_i |p_i|^2 - |sum_i l_i p_i|^2`.
pub fn dual_objective(points: &PointSet, lambda: &[f64]) -> Result<f64> {
    if lambda.len() != points.len() {
        return Err(MebError::LengthMismatch {
            expected: points.len(),
            got: lambda.len(),
        });
    }
    let mut c = vec![0.0; points.dim()];
    let mut quad = 0.0;
    for (p, &l) in points.iter().zip(lambda) {
        linalg::axpy(l, p.coords(), &mut c);
        quad += l * linalg::norm2(p.coords());
    }
    Ok(quad - linalg::norm2(&c))
}

struct State {
    lambda: Vec<f64>,
    c: Vec<f64>,
    /// |y_i - c|^2
    g: Vec<f64>,
}

impl State {
    fn new(ys: &[Vec<f64>], lambda: Vec<f64>) -> Self {
        let mut c = vec![0.0; ys[0].len()];
        for (y, &l) in ys.iter().zip(&lambda) {
            if l > 0.0 {
                linalg::axpy(l, y, &mut c);
            }
        }
        let g = ys.iter().map(|y| linalg::dist2(y, &c)).collect();
        State { lambda, c, g }
    }

    fn refresh_g(&mut self, ys: &[Vec<f64>]) {
        for (gi, y) in self.g.iter_mut().zip(ys) {
            *gi = linalg::dist2(y, &self.c);
        }
    }

    /// (dual value s, duality gap, index of farthest point)
    fn gap(&self) -> (f64, f64, usize) {
        let s: f64 = self.lambda.iter().zip(&self.g).map(|(l, g)| l * g).sum();
        let (j, r2) = self
            .g
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &g)| if g > acc.1 { (i, g) } else { acc });
        (s, (r2 - s).max(0.0), j)
    }
}

/// Exact solve on a small set of active points: the `d + 1` farthest active
/// points, dropping the one with the most negative weight until the
/// circumcenter is a convex combination of the rest.
fn polish(ys: &[Vec<f64>], st: &State, dim: usize) -> Option<Vec<f64>> {
    let mut active: Vec<usize> = (0..ys.len()).filter(|&i| st.lambda[i] > 0.0).collect();
    active.sort_by(|&a, &b| st.g[b].total_cmp(&st.g[a]).then(a.cmp(&b)));
    active.truncate(dim + 1);
    while !active.is_empty() {
        let pts: Vec<&[f64]> = active.iter().map(|&i| ys[i].as_slice()).collect();
        let (t, _) = circumball_raw(&pts).ok()?;
        let shifted: Vec<Vec<f64>> = pts.iter().map(|p| linalg::sub(p, &t)).collect();
        let refs: Vec<&[f64]> = shifted.iter().map(Vec::as_slice).collect();
        let w = affine_min_norm(&refs);
        let (worst, wmin) = w
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (k, &x)| if x < acc.1 { (k, x) } else { acc });
        if wmin >= 0.0 {
            let mut out = vec![0.0; ys.len()];
            for (&i, &wi) in active.iter().zip(&w) {
                out[i] = wi;
            }
            return Some(out);
        }
        active.remove(worst);
    }
    None
}

/// Away-step Frank-Wolfe on `ys` from `lambda` until the relative gap on
/// `ys` drops below `tol`.
fn frank_wolfe(ys: &[Vec<f64>], lambda: Vec<f64>, opts: &DualOptions, iterations: &mut usize) -> Result<State> {
    let dim = ys[0].len();
    let mut st = State::new(ys, lambda);
    let converged = |s: f64, gap: f64| gap <= 0.0 || gap <= opts.tol * s;
    let (mut s, mut gap, mut fw) = st.gap();
    let mut local = 0usize;

    while !converged(s, gap) {
        if *iterations >= opts.max_iter {
            return Err(MebError::NotConverged {
                iterations: *iterations,
                gap,
            });
        }
        *iterations += 1;
        local += 1;

        // away vertex: closest active point
        let (away, g_away) = st
            .lambda
            .iter()
            .zip(&st.g)
            .enumerate()
            .filter(|(_, (l, _))| **l > 0.0)
            .fold((usize::MAX, f64::INFINITY), |acc, (i, (_, &g))| if g < acc.1 { (i, g) } else { acc });
        let fw_gain = st.g[fw] - s;
        let away_gain = s - g_away;

        let (u, gain, gamma_max, is_fw) = if fw_gain >= away_gain || away == usize::MAX {
            (linalg::sub(&ys[fw], &st.c), fw_gain, 1.0, true)
        } else {
            let la = st.lambda[away];
            let gmax = if la >= 1.0 { f64::INFINITY } else { la / (1.0 - la) };
            (linalg::sub(&st.c, &ys[away]), away_gain, gmax, false)
        };
        let uu = linalg::norm2(&u);
        if uu == 0.0 || gain <= 0.0 {
            break;
        }
        let gamma = (gain / (2.0 * uu)).min(gamma_max);

        if is_fw {
            st.lambda.iter_mut().for_each(|l| *l *= 1.0 - gamma);
            st.lambda[fw] += gamma;
        } else {
            st.lambda.iter_mut().for_each(|l| *l *= 1.0 + gamma);
            st.lambda[away] -= gamma;
            if gamma >= gamma_max {
                st.lambda[away] = 0.0;
            }
        }
        for l in st.lambda.iter_mut() {
            if *l < 0.0 {
                *l = 0.0;
            }
        }
        if local % 64 == 0 {
            let total: f64 = st.lambda.iter().sum();
            st.lambda.iter_mut().for_each(|l| *l /= total);
            st = State::new(ys, std::mem::take(&mut st.lambda));
        } else {
            linalg::axpy(gamma, &u, &mut st.c);
            st.refresh_g(ys);
        }
        (s, gap, fw) = st.gap();

        if local % 8 == 0 || converged(s, gap) {
            if let Some(cand) = polish(ys, &st, dim) {
                let trial = State::new(ys, cand);
                let (s2, gap2, fw2) = trial.gap();
                if gap2 < gap {
                    st = trial;
                    (s, gap, fw) = (s2, gap2, fw2);
                }
            }
        }
    }
    Ok(st)
}

pub fn elzinga_hearn_dual(points: &PointSet, opts: DualOptions) -> Result<DualSolution> {
    if !(opts.tol > 0.0) {
        return Err(MebError::param("tol", "must be > 0"));
    }
    let n = points.len();
    let dim = points.dim();
    let raw = points.slices();
    // the dual objective is translation invariant on the simplex; work
    // around the mean to avoid cancellation in |p|^2 - |c|^2
    let mean = mean_of(&raw);
    let ys: Vec<Vec<f64>> = raw.iter().map(|p| linalg::sub(p, &mean)).collect();

    // Solve on a working set, then add the farthest outside point and
    // warm-start. Points left out keep a zero multiplier.
    let (start, _) = super::farthest(&raw, raw[0]);
    let mut work = vec![start];
    let mut in_work = vec![false; n];
    in_work[start] = true;
    let mut lambda_w = vec![1.0];
    let mut iterations = 0;
    let (lambda, gap) = loop {
        let ys_w: Vec<Vec<f64>> = work.iter().map(|&i| ys[i].clone()).collect();
        let st = frank_wolfe(&ys_w, lambda_w, &opts, &mut iterations)?;
        let mut lambda = vec![0.0; n];
        for (&i, &l) in work.iter().zip(&st.lambda) {
            lambda[i] = l;
        }
        let full = State::new(&ys, lambda);
        let (s, gap, far) = full.gap();
        if gap <= 0.0 || gap <= opts.tol * s || in_work[far] {
            break (full.lambda, gap);
        }
        work.push(far);
        in_work[far] = true;
        lambda_w = st.lambda;
        lambda_w.push(0.0);
    };
    // recover c = sum l_i p_i and s = sum l_i |p_i - c|^2 in input coordinates
    let mut center = vec![0.0; dim];
    for (p, &l) in raw.iter().zip(&lambda) {
        linalg::axpy(l, p, &mut center);
    }
    let s_rec: f64 = raw
        .iter()
        .zip(&lambda)
        .map(|(p, &l)| l * linalg::dist2(p, &center))
        .sum();
    let dual_value = dual_objective(points, &lambda)?;

    let mut idx: Vec<usize> = (0..n).filter(|&i| lambda[i] >= MULTIPLIER_FLOOR).collect();
    idx.sort_unstable();
    let total: f64 = idx.iter().map(|&i| lambda[i]).sum();
    let support = SupportSet {
        multipliers: idx.iter().map(|&i| lambda[i] / total).collect(),
        indices: idx,
    };
    Ok(DualSolution {
        solution: MebSolution::new(center, s_rec.sqrt(), support, iterations, Algorithm::ElzingaHearnDual),
        lambda,
        dual_value,
        gap,
    })
}
