//! Exact linear algebra over the rationals.

mod cluster;
mod matrix;
mod walks;

pub use cluster::random_cluster_z;
pub use matrix::{det_exact, forest_weight_sum, laplacian, laplacian_ones, RationalMatrix};
pub use walks::{closed_walk_counts, tree_walk_moments, WalkMoments, MAX_WALK_LENGTH};
