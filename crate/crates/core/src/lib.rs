//! Bipartiteness testing for intersection graphs of segments, disks and balls.
//!
//! Every decision comes with a witness that can be checked independently: a
//! proper two-coloring or an odd cycle of pairwise-intersecting objects. All
//! predicates use exact rational arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod balls;
pub mod degeneracy;
pub mod driver;
pub mod generic;
pub mod geom;
pub mod oracle;
pub mod parity_forest;
pub mod scalar;
pub mod sweep;
mod treap;
pub mod verdict;

pub use balls::{balls_bipartiteness, bipartite_disk_edge_audit, degree_cap, BallsError, DiskAudit, NeighborSearch};
pub use degeneracy::{degeneracy_scan, perturb_endpoints, DegeneracyReport, Violation};
pub use driver::{decide_balls, decide_segments};
pub use generic::{generic_bipartiteness, spanning_forest, GridFactory, NaiveFactory};
pub use geom::{
    balls_intersect, crossing_point, orientation, segments_intersect, y_at, Ball, GeomError, Mode,
    Orientation, Point2, Rect, Segment, Shape,
};
pub use oracle::{bfs_bipartiteness, IntersectionGraph};
pub use parity_forest::{NodeId, Parity, ParityForest};
pub use scalar::Scalar;
pub use sweep::{sweep_bipartiteness, SegmentSweep, SweepError, SweepOptions};
pub use verdict::{Color, Provenance, Report, Verdict, WitnessError};
