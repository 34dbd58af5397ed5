//! Experiments around the conjectured negative correlation of edges in a
//! uniform random forest, the 2-cover inequality it implies, and forest
//! growth in graphs of large girth.

mod correlation;
mod covers;
mod misc;
pub mod suites;
mod tower;

pub use correlation::{
    check_correlation_equivalences, check_negative_correlation, CorrelationEquivalence, CorrelationReport,
    ForestTallies, CORRELATION_MAX_EDGES,
};
pub use covers::{check_special_cover_identity, check_two_cover_inequality, CoverCheck, SpecialCoverCheck};
pub use misc::{forest_ratio, shattering_check, short_cycle_penalty, ForestRatio, ShatteringReport, SHATTERING_MAX_EDGES};
pub use tower::{
    girth_tower_experiment, p_t_recursion, tree_radius, weakly_induced_floor, TowerLevel, TowerTrace,
};
