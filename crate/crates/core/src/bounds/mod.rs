//! Closed-form upper bounds on forests and connected spanning subgraphs,
//! and the Kesten–McKay integrals they are built from.

mod entropy;
mod km;
mod regular;
mod report;
mod simple;
mod suite;

pub use entropy::{binom_partial_sum, binom_tail_bound, entropy};
pub use km::{j_d, km_density, km_integrate, support_radius, KMQuadrature};
pub use regular::{
    four_regular_rate, four_regular_rates, improved_forest_bound, ks_bound, log_spectral_term,
    optimize_four_regular, optimize_improved_bound, ImprovedBound, IMPROVED_DEGREES,
};
pub use report::BoundReport;
pub use simple::{
    average_connected_bound, average_degree_forest_bound, janson_connected_bound, product_degree_bound, trivial_bound,
};
pub use suite::{bound_suite, forest_table, ForestTableRow, Quantity, SuiteEntry, SuiteReport};
