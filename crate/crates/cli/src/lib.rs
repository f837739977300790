//! Library side of the `untangle` command: file formats, point generators,
//! experiments and self-checks.

pub mod experiments;
pub mod formats;
pub mod shapes;
pub mod verify;
