pub mod drawing;
pub mod families;
pub mod graph;
pub mod hn;

pub use drawing::{
    check_plane, edges_compatible, fixed_set, is_plane_drawing, Drawing, PlaneCheck,
};
pub use families::{complete, cycle, family, fan, path, star, star_forest, wheel, Family};
pub use graph::{is_3_connected, is_planar, Graph};
pub use hn::{make_hn, triangulation, HnGraph, TriangulationKind};
