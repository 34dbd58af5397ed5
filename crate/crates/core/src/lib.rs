//! Exact counting of forests, connected spanning subgraphs, acyclic
//! orientations and spanning trees of multigraphs, together with the
//! closed-form upper bounds these counts are compared against.
//!
//! * [`graph`]: multigraphs, deletion/contraction, 2-lifts, generators.
//! * [`count`]: brute-force oracles and scalable exact counters.
//! * [`algebra`]: exact Laplacian determinants, tree walk moments and the
//!   random-cluster partition function.
//! * [`bounds`]: entropy and spectral bounds, Kesten–McKay quadrature and the
//!   `(α, c)` optimisation behind the regular-graph forest bounds.
//! * [`lab`]: experiments on negative correlation, 2-covers and large girth.

pub mod algebra;
pub mod bounds;
pub mod budget;
pub mod count;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod lab;
pub mod par;

pub use budget::Budget;
pub use count::BigCount;
pub use error::{Error, Result};
pub use graph::MultiGraph;
