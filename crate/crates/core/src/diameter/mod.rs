//! Exact and approximate diameter of a point set, including one-pass
//! streaming estimators.
//!
//! The diameter of a set equals the diameter of its convex hull, which is
//! what makes the hull-based planar method exact. In the plane the diameter
//! is realised by at most `n` pairs, an invariant the tests check. Any
//! comparison-based exact method needs `Omega(n log n)` time.

mod brute;
mod calipers;
mod stream;
mod sweep;

pub use brute::diameter_bruteforce;
pub use calipers::{convex_hull_2d, diameter_calipers_2d};
pub use stream::{
    directions_for_eps, stream_2approx, stream_eps_2d, DirectionalSketch, StreamSketch, TwoApproxSketch,
};
pub use sweep::{diameter_doublesweep, diameter_doublesweep_seeded, SWEEP_RESTARTS};

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterResult {
    pub value: f64,
    /// Realising pair `(i, j)` with `i < j`.
    pub pair: Option<(usize, usize)>,
    pub exact: bool,
    /// Number of pairs at `value` within tolerance (among the pairs examined).
    pub pairs_at_max: usize,
}
