//! Forest counts of 2-covers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::count::{count_forests, Backend, BigCount};
use crate::error::{Error, Result};
use crate::graph::{expand_lift, special_double_cover, MultiGraph, SignedLift};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverCheck {
    pub signs: String,
    /// `F(G)²`, the forest count of `G ∪ G`.
    pub base_squared: BigCount,
    /// `F(H)` for the lift `H`.
    pub lifted: BigCount,
    pub holds: bool,
}

/// Compares `F(G ∪ G) = F(G)²` with `F(H)` for the 2-lift `H`.
pub fn check_two_cover_inequality(lift: &SignedLift, backend: Backend, budget: &Budget) -> Result<CoverCheck> {
    let f = count_forests(lift.base(), backend, budget)?;
    let h = expand_lift(lift);
    let lifted = count_forests(&h, backend, budget)?;
    let base_squared = &f * &f;
    Ok(CoverCheck { signs: lift.sign_string(), holds: base_squared <= lifted, base_squared, lifted })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecialCoverCheck {
    pub edge: usize,
    /// Forests of `G − e`.
    pub f1: BigCount,
    /// Forests of `G − e` that stay forests after adding `e`, i.e. forests of `G / e`.
    pub f2: BigCount,
    pub lifted: BigCount,
    /// `F(H) = 3 f1² + 2 f1 f2 − f2²`.
    pub identity_holds: bool,
    /// `F(G)² = (f1 + f2)² ≤ F(H)`.
    pub inequality_holds: bool,
}

/// Checks the forest count of the cover that crosses only edge `i`.
pub fn check_special_cover_identity(g: &MultiGraph, i: usize, backend: Backend, budget: &Budget) -> Result<SpecialCoverCheck> {
    if g.is_loop(i) {
        return Err(Error::domain(format!("edge {i} is a loop")));
    }
    let f1 = count_forests(&g.delete_edge(i)?, backend, budget)?;
    let f2 = count_forests(&g.contract_edge(i)?, backend, budget)?;
    let h = special_double_cover(g, i)?;
    let lifted = count_forests(&h, backend, budget)?;
    let (a, b) = (BigInt::from(f1.0.clone()), BigInt::from(f2.0.clone()));
    let formula = 3 * &a * &a + 2 * &a * &b - &b * &b;
    let whole = &a + &b;
    let lifted_int = BigInt::from(lifted.0.clone());
    Ok(SpecialCoverCheck {
        edge: i,
        identity_holds: formula == lifted_int,
        inequality_holds: &whole * &whole <= lifted_int,
        f1,
        f2,
        lifted,
    })
}
