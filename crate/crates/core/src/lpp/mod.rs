//! Geometries, fillings, passage times and the generating series of
//! fillings with bounded passage time.

mod bijections;
mod filling;
mod geometry;
mod series;

pub use bijections::{
    bz_forward, bz_inverse, oscillating_tableau, p2l_forward, p2l_from_matrix, p2l_inverse, p2l_matrix, Direction,
    OscillatingTableau,
};
pub use filling::Filling;
pub use geometry::{Geometry, GeometryKind};
pub use series::{generating_series, DEFAULT_NODE_BUDGET};
