//! Minimum enclosing ball toolkit.
//!
//! Exact and approximate MEB solvers with dual certificates, minimum
//! k-enclosing balls, sampled cluster testers, Helly-type convexity routines,
//! enclosing-radius bounds and diameter algorithms, including one-pass
//! streaming estimators.
//!
//! ```
//! use meb_kit_core::{exact_meb, PointSet};
//!
//! let square = PointSet::from_rows(&[[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]).unwrap();
//! let meb = exact_meb(&square).unwrap();
//! assert!((meb.radius() - 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod combinatorics;
pub mod convexity;
pub mod diameter;
pub mod error;
pub mod geometry;
pub mod instances;
mod linalg;
pub mod meb;
pub mod mkeb;
pub mod rng;
pub mod tester;

pub use convexity::{
    barycentric_circumradius, caratheodory_reduce, dist_to_hull, fractional_helly_beta, helly_check_boxes,
    jung_bound, nodim_caratheodory, project_to_hull, radon_partition, AABox, ConvexCombination,
};
pub use diameter::{
    diameter_bruteforce, diameter_calipers_2d, diameter_doublesweep, stream_2approx, stream_eps_2d, DiameterResult,
};
pub use error::{MebError, Result};
pub use geometry::{
    barycenter, circumball, distance, fits_in_translate, tolerance, Ball, ConvexBody, Point, PointSet,
};
pub use instances::{gen_instance, regular_simplex, Certificate, Instance, InstanceKind};
pub use meb::{
    badoiu_clarkson, elzinga_hearn_dual, exact_meb, hopp_reeve_meb, kt_residuals, Algorithm, DualOptions,
    MebSolution, StartPoint, SupportSet,
};
pub use mkeb::{exact_mkeb, outlier_meb_sample, outlier_sample_size, MkebSolution};
pub use tester::{k_g_tester, one_s_tester, promise_label, scattered_points, Label, Outcome, PromiseLabel, TestVerdict};
