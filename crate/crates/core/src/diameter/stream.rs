//! One-pass diameter estimators with constant memory.
//!
//! * [`TwoApproxSketch`]: distance to the first point seen; `E <= diam <= 2E`.
//! * [`DirectionalSketch`]: running min/max projections on `m` directions
//!   spread over `[0, pi)`, with `m` the least integer satisfying
//!   `cos(pi / 2m) >= 1 / (1 + eps)`; `E <= diam <= (1 + eps) E`.

use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::Point;
use crate::linalg;

#[derive(Debug, Clone, Default, Serialize)]
pub struct TwoApproxSketch {
    anchor: Option<Point>,
    max_dist: f64,
    seen: usize,
}

impl TwoApproxSketch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, p: &Point) -> Result<()> {
        match &self.anchor {
            None => self.anchor = Some(p.clone()),
            Some(a) => {
                if a.dim() != p.dim() {
                    return Err(MebError::DimensionMismatch {
                        expected: a.dim(),
                        got: p.dim(),
                    });
                }
                self.max_dist = self.max_dist.max(linalg::dist2(a.coords(), p.coords()).sqrt());
            }
        }
        self.seen += 1;
        Ok(())
    }

    pub fn estimate(&self) -> Result<f64> {
        if self.seen == 0 {
            return Err(MebError::EmptyInput("stream"));
        }
        Ok(self.max_dist)
    }

    pub fn anchor(&self) -> Option<&Point> {
        self.anchor.as_ref()
    }

    pub fn seen(&self) -> usize {
        self.seen
    }
}

/// Least `m` with `cos(pi / (2m)) >= 1 / (1 + eps)`.
pub fn directions_for_eps(eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(MebError::param("eps", format!("must lie in (0, 1], got {eps}")));
    }
    let target = 1.0 / (1.0 + eps);
    let mut m = 1usize;
    while (std::f64::consts::PI / (2.0 * m as f64)).cos() < target {
        m += 1;
    }
    Ok(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectionalSketch {
    eps: f64,
    directions: Vec<[f64; 2]>,
    /// (min, max) projection per direction
    extents: Vec<(f64, f64)>,
    seen: usize,
}

impl DirectionalSketch {
    pub fn new(eps: f64) -> Result<Self> {
        let m = directions_for_eps(eps)?;
        let directions = (0..m)
            .map(|k| {
                let t = std::f64::consts::PI * k as f64 / m as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        Ok(DirectionalSketch {
            eps,
            directions,
            extents: vec![(f64::INFINITY, f64::NEG_INFINITY); m],
            seen: 0,
        })
    }

    pub fn push(&mut self, p: &Point) -> Result<()> {
        if p.dim() != 2 {
            return Err(MebError::DimensionMismatch {
                expected: 2,
                got: p.dim(),
            });
        }
        for (u, ext) in self.directions.iter().zip(self.extents.iter_mut()) {
            let t = u[0] * p[0] + u[1] * p[1];
            ext.0 = ext.0.min(t);
            ext.1 = ext.1.max(t);
        }
        self.seen += 1;
        Ok(())
    }

    /// Largest directional width.
    pub fn estimate(&self) -> Result<f64> {
        if self.seen == 0 {
            return Err(MebError::EmptyInput("stream"));
        }
        Ok(self.extents.iter().map(|(lo, hi)| hi - lo).fold(0.0, f64::max))
    }

    /// Merges a sketch built with the same `eps` over another stream.
    pub fn merge(&mut self, other: &DirectionalSketch) -> Result<()> {
        if other.directions.len() != self.directions.len() {
            return Err(MebError::LengthMismatch {
                expected: self.directions.len(),
                got: other.directions.len(),
            });
        }
        for (a, b) in self.extents.iter_mut().zip(&other.extents) {
            a.0 = a.0.min(b.0);
            a.1 = a.1.max(b.1);
        }
        self.seen += other.seen;
        Ok(())
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn directions(&self) -> &[[f64; 2]] {
        &self.directions
    }

    pub fn extents(&self) -> &[(f64, f64)] {
        &self.extents
    }

    pub fn seen(&self) -> usize {
        self.seen
    }
}

/// Either streaming estimator behind one interface.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum StreamSketch {
    TwoApprox(TwoApproxSketch),
    Directional2D(DirectionalSketch),
}

impl StreamSketch {
    pub fn push(&mut self, p: &Point) -> Result<()> {
        match self {
            StreamSketch::TwoApprox(s) => s.push(p),
            StreamSketch::Directional2D(s) => s.push(p),
        }
    }

    pub fn estimate(&self) -> Result<f64> {
        match self {
            StreamSketch::TwoApprox(s) => s.estimate(),
            StreamSketch::Directional2D(s) => s.estimate(),
        }
    }

    /// Upper multiplier `k` of the contract `E <= diam <= k E`.
    pub fn upper_factor(&self) -> f64 {
        match self {
            StreamSketch::TwoApprox(_) => 2.0,
            StreamSketch::Directional2D(s) => 1.0 + s.eps,
        }
    }
}

pub fn stream_2approx<'a>(stream: impl IntoIterator<Item = &'a Point>) -> Result<(f64, TwoApproxSketch)> {
    let mut sketch = TwoApproxSketch::new();
    for p in stream {
        sketch.push(p)?;
    }
    Ok((sketch.estimate()?, sketch))
}

pub fn stream_eps_2d<'a>(stream: impl IntoIterator<Item = &'a Point>, eps: f64) -> Result<(f64, DirectionalSketch)> {
    let mut sketch = DirectionalSketch::new(eps)?;
    for p in stream {
        sketch.push(p)?;
    }
    Ok((sketch.estimate()?, sketch))
}
