//! Seeded random instances and fixed fixtures.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::{Point, PointSet};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceKind {
    UniformBall,
    SphereSurface,
    Gaussian,
    /// `k` unit balls with centers `separation` apart along the first axis.
    Clustered { k: usize, separation: f64 },
    /// Covered by `k1` balls of radius `eps`.
    Clusterable { k1: usize, eps: f64 },
    /// Contains `k2` points pairwise at least `delta` apart.
    Far { k2: usize, delta: f64 },
}

impl InstanceKind {
    pub const NAMES: [&'static str; 6] = [
        "uniform-ball",
        "sphere-surface",
        "gaussian",
        "clustered",
        "clusterable",
        "far",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InstanceKind::UniformBall => Self::NAMES[0],
            InstanceKind::SphereSurface => Self::NAMES[1],
            InstanceKind::Gaussian => Self::NAMES[2],
            InstanceKind::Clustered { .. } => Self::NAMES[3],
            InstanceKind::Clusterable { .. } => Self::NAMES[4],
            InstanceKind::Far { .. } => Self::NAMES[5],
        }
    }
}

/// What the generator guarantees about its output.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    None,
    /// Every point lies within the stated radius of one of these.
    Centers(Vec<Point>),
    /// Pairwise far indices.
    Indices(Vec<usize>),
}

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub points: PointSet,
    pub certificate: Certificate,
}

fn gaussian_vec(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    (0..d).map(|_| rng.sample(StandardNormal)).collect()
}

fn on_sphere(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v = gaussian_vec(rng, d);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn in_ball(rng: &mut ChaCha8Rng, d: usize, radius: f64) -> Vec<f64> {
    let u: f64 = rng.random();
    let r = radius * u.powf(1.0 / d as f64);
    on_sphere(rng, d).into_iter().map(|x| x * r).collect()
}

fn shifted(center: &[f64], offset: Vec<f64>) -> Vec<f64> {
    center.iter().zip(offset).map(|(c, o)| c + o).collect()
}

fn positive(name: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(MebError::param(name, format!("must be finite and > 0, got {x}")))
    }
}

/// Deterministic for a fixed `seed`.
pub fn gen_instance(kind: InstanceKind, n: usize, d: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(MebError::EmptyInput("instance"));
    }
    if d == 0 {
        return Err(MebError::ZeroDimension);
    }
    let mut rng = rng_from_seed(seed);
    let mut certificate = Certificate::None;
    let rows: Vec<Vec<f64>> = match kind {
        InstanceKind::UniformBall => (0..n).map(|_| in_ball(&mut rng, d, 1.0)).collect(),
        InstanceKind::SphereSurface => (0..n).map(|_| on_sphere(&mut rng, d)).collect(),
        InstanceKind::Gaussian => (0..n).map(|_| gaussian_vec(&mut rng, d)).collect(),
        InstanceKind::Clustered { k, separation } => {
            if k == 0 {
                return Err(MebError::param("k", "must be >= 1"));
            }
            positive("separation", separation)?;
            (0..n)
                .map(|i| {
                    let mut c = vec![0.0; d];
                    c[0] = separation * (i % k) as f64;
                    shifted(&c, in_ball(&mut rng, d, 1.0))
                })
                .collect()
        }
        InstanceKind::Clusterable { k1, eps } => {
            if k1 == 0 {
                return Err(MebError::param("k1", "must be >= 1"));
            }
            positive("eps", eps)?;
            let spread = 4.0 * eps * k1 as f64;
            let centers: Vec<Vec<f64>> = (0..k1).map(|_| in_ball(&mut rng, d, spread)).collect();
            // shrink slightly so rounding never pushes a point past eps
            let r = eps * (1.0 - 1e-9);
            let rows = (0..n)
                .map(|i| shifted(&centers[i % k1], in_ball(&mut rng, d, r)))
                .collect();
            certificate = Certificate::Centers(centers.into_iter().map(Point::from_vec_unchecked).collect());
            rows
        }
        InstanceKind::Far { k2, delta } => {
            if k2 == 0 || k2 > n {
                return Err(MebError::param("k2", format!("must lie in 1..={n}, got {k2}")));
            }
            positive("delta", delta)?;
            let step = delta * (1.0 + 1e-9);
            let mut rows: Vec<(bool, Vec<f64>)> = (0..k2)
                .map(|j| {
                    let mut p = vec![0.0; d];
                    p[0] = step * j as f64;
                    (true, p)
                })
                .collect();
            let mut mid = vec![0.0; d];
            mid[0] = step * (k2 - 1) as f64 / 2.0;
            let spread = delta * k2 as f64;
            rows.extend((k2..n).map(|_| (false, shifted(&mid, in_ball(&mut rng, d, spread)))));
            rows.shuffle(&mut rng);
            certificate = Certificate::Indices(
                rows.iter().enumerate().filter(|(_, r)| r.0).map(|(i, _)| i).collect(),
            );
            rows.into_iter().map(|r| r.1).collect()
        }
    };
    Ok(Instance {
        points: PointSet::from_rows(&rows)?,
        certificate,
    })
}

/// Vertices of a regular simplex in `R^d` with edge length `side`.
pub fn regular_simplex(d: usize, side: f64) -> Result<PointSet> {
    if d == 0 {
        return Err(MebError::ZeroDimension);
    }
    positive("side", side)?;
    // e_1..e_d and (a,..,a) are pairwise sqrt(2) apart
    let a = (1.0 - ((d + 1) as f64).sqrt()) / d as f64;
    let s = side / 2f64.sqrt();
    let mut rows: Vec<Vec<f64>> = (0..d)
        .map(|i| {
            let mut e = vec![0.0; d];
            e[i] = s;
            e
        })
        .collect();
    rows.push(vec![a * s; d]);
    PointSet::from_rows(&rows)
}
