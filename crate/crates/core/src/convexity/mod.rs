//! Constructive Helly-type routines and enclosing-radius bounds.

mod bounds;
mod caratheodory;
mod helly;
mod nodim;
pub mod projection;
mod radon;

pub use bounds::{barycentric_circumradius, fractional_helly_beta, jung_bound, jung_coefficient, JungBound, BARYCENTRIC_MAX_POINTS};
pub use caratheodory::{caratheodory_reduce, ConvexCombination};
pub use helly::{helly_check_boxes, AABox, HellyReport};
pub use nodim::{nodim_caratheodory, NoDimCaratheodory};
pub use projection::{dist_to_hull, project_to_hull, HullProjection};
pub use radon::{radon_partition, RadonPartition};
