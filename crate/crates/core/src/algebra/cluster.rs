use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::count::oracle::component_edge_histogram;
use crate::error::Result;
use crate::graph::MultiGraph;

/// `Z(G, q, w) = Σ_A q^{k(A)} w^{|A|}` over all edge subsets `A`.
pub fn random_cluster_z(g: &MultiGraph, q: &BigRational, w: &BigRational, budget: &Budget) -> Result<BigRational> {
    let table = component_edge_histogram(g, budget)?;
    let mut total = BigRational::zero();
    let mut qk = BigRational::one();
    for row in &table {
        let mut wa = BigRational::one();
        for &count in row {
            if count != 0 {
                total += &qk * &wa * BigRational::from_integer(BigInt::from(count));
            }
            wa *= w;
        }
        qk *= q;
    }
    Ok(total)
}
