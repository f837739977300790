//! Exact plane geometry: predicates, hulls, line arrangements, visibility
//! orders and arrows on convex boundaries.

pub mod algebraic;
pub mod arrangement;
pub mod boundary;
pub mod hull;
pub mod point;
pub mod visibility;

pub use arrangement::{build_arrangement, Arrangement, CellKind, Line};
pub use boundary::{arrow_color, quiver_arrow, Arrow, ArrowColor, Boundary};
pub use hull::{
    all_collinear, boundary_order, convex_hull, hull_vertices, point_in_hull, position_class,
    ConvexHull, PositionClass,
};
pub use point::{
    cross, in_open_segment, on_segment, orient, point_segment_dist2, segment_dist2,
    segments_relation, Point, PointSet, Segment, SegmentRelation,
};
pub use visibility::{visibility_classes, visibility_permutation, CircularOrder};
