pub mod collinear;
pub mod extend;
pub mod oracle;
pub mod rim;
pub mod stars;

pub use collinear::{collinear_reduce, naive_collinear_untangler, CollinearReduction};
pub use extend::extend_single_free;
pub use oracle::{fix_oracle, redraw_keeping_two, redraw_with_free, FixInterval, OracleOptions};
pub use rim::rim_heuristic;
pub use stars::stars_cluster_untangler;
