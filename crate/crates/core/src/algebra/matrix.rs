use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Dense square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, data: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix rows must all have the same length as the row count"));
        }
        let data = rows.iter().flatten().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        Ok(RationalMatrix { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.n + j] = value;
    }

    fn add_at(&mut self, i: usize, j: usize, value: &BigRational) {
        self.data[i * self.n + j] += value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Adds `alpha` to every diagonal entry.
    pub fn shift_diagonal(&mut self, alpha: &BigRational) {
        for i in 0..self.n {
            self.add_at(i, i, alpha);
        }
    }

    /// The matrix with row and column `k` removed.
    pub fn reduced(&self, k: usize) -> RationalMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        let data = keep
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        RationalMatrix { n: keep.len(), data }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Weighted Laplacian: `L_ii` is the weight sum of non-loop edges at `i`,
/// `L_ij` minus the weight sum of edges between `i` and `j`. Loops are ignored.
pub fn laplacian(g: &MultiGraph, weights: &[BigRational]) -> Result<RationalMatrix> {
    if weights.len() != g.edge_count() {
        return Err(Error::domain(format!(
            "{} weights given for a graph with {} edges",
            weights.len(),
            g.edge_count()
        )));
    }
    let mut l = RationalMatrix::zeros(g.vertex_count());
    for (&(u, v), w) in g.edges().iter().zip(weights) {
        if u == v {
            continue;
        }
        l.add_at(u, u, w);
        l.add_at(v, v, w);
        let minus = -w;
        l.add_at(u, v, &minus);
        l.add_at(v, u, &minus);
    }
    Ok(l)
}

pub fn laplacian_ones(g: &MultiGraph) -> RationalMatrix {
    laplacian(g, &vec![BigRational::one(); g.edge_count()]).expect("weight count matches")
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators.
pub fn det_exact(m: &RationalMatrix) -> BigRational {
    let n = m.n;
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = &m.data[i * n..(i + 1) * n];
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = &sign * &a[n - 1][n - 1];
    BigRational::new(det, scale)
}

/// `det(L(G) + αI)`, the total weight `Σ_F α^{k(F)} ∏ |F_i|` over spanning
/// forests `F` with components `F_i`.
pub fn forest_weight_sum(g: &MultiGraph, alpha: &BigRational) -> Result<BigRational> {
    if !alpha.is_positive() {
        return Err(Error::domain("forest weight sum needs α > 0"));
    }
    let mut l = laplacian_ones(g);
    l.shift_diagonal(alpha);
    Ok(det_exact(&l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn small_laplacians() {
        let e = MultiGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(laplacian_ones(&e), RationalMatrix::from_i64_rows(&[vec![1, -1], vec![-1, 1]]).unwrap());
        let pair = MultiGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let l = laplacian(&pair, &[r(1), r(2)]).unwrap();
        assert_eq!(l, RationalMatrix::from_i64_rows(&[vec![3, -3], vec![-3, 3]]).unwrap());
        assert!(laplacian(&pair, &[r(1)]).is_err());
        let looped = MultiGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(laplacian_ones(&looped), laplacian_ones(&e));
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&RationalMatrix::identity(3)), r(1));
        let m = RationalMatrix::from_i64_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(det_exact(&m), r(3));
        let needs_pivot = RationalMatrix::from_i64_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).unwrap();
        assert_eq!(det_exact(&needs_pivot), r(-2));
        let mut half = RationalMatrix::identity(2);
        half.set(0, 0, BigRational::new(1.into(), 2.into()));
        half.set(1, 0, BigRational::new(1.into(), 3.into()));
        assert_eq!(det_exact(&half), BigRational::new(1.into(), 2.into()));
        let k4 = laplacian_ones(&named_graph("k4").unwrap());
        assert_eq!(det_exact(&k4.reduced(0)), r(16));
        assert_eq!(det_exact(&k4), r(0));
    }

    #[test]
    fn forest_weights() {
        assert_eq!(forest_weight_sum(&MultiGraph::new(3), &r(2)).unwrap(), r(8));
        let e = MultiGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(forest_weight_sum(&e, &r(1)).unwrap(), r(3));
        assert!(forest_weight_sum(&e, &r(0)).is_err());
    }
}
