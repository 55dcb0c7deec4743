//! Points, lines and PGL(3) over a finite field.

mod group;
mod matrix;
mod perspectivity;
mod point;

pub use group::{group_closure, orbit, AutGroup, DEFAULT_GROUP_CAP};
pub use matrix::{maps_between_triangles, Mat3, ProjMatrix};
pub use perspectivity::{is_perspectivity, perspectivities_with_center, Perspectivities};
pub use point::{collinear, line_through, meet, ProjLine, ProjPoint};
pub(crate) use point::dot;
