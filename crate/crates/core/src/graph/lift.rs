use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{cycles_of_length, girth, Girth, MultiGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    /// Matching `(u,0)(v,0), (u,1)(v,1)`.
    Plus,
    /// Matching `(u,0)(v,1), (u,1)(v,0)`.
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A 2-lift of `base` encoded by one sign per base edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedLift {
    base: MultiGraph,
    signs: Vec<Sign>,
}

impl SignedLift {
    pub fn new(base: MultiGraph, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != base.edge_count() {
            return Err(Error::domain(format!(
                "{} signs given for {} edges",
                signs.len(),
                base.edge_count()
            )));
        }
        Ok(SignedLift { base, signs })
    }

    pub fn uniform(base: MultiGraph, sign: Sign) -> Self {
        let signs = vec![sign; base.edge_count()];
        SignedLift { base, signs }
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.symbol()).collect()
    }
}

/// Parses a string of `+` and `-` characters.
pub struct SignString(pub Vec<Sign>);

impl FromStr for SignString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::domain(format!("sign `{other}` is neither + nor -"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignString)
    }
}

impl fmt::Display for SignedLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

/// The 2-cover on `2n` vertices. Copy `i` of base vertex `u` is `u + i·n`;
/// base edge `e` lifts to edges `2e` and `2e + 1`.
///
/// A loop with sign `-` lifts to two parallel edges between the two copies of
/// its vertex, which is what the matching rule gives literally.
pub fn expand_lift(lift: &SignedLift) -> MultiGraph {
    let n = lift.base.vertex_count();
    let mut h = MultiGraph::new(2 * n);
    for (&(u, v), &s) in lift.base.edges().iter().zip(&lift.signs) {
        let pair = match s {
            Sign::Plus => [(u, v), (u + n, v + n)],
            Sign::Minus => [(u, v + n), (u + n, v)],
        };
        for (a, b) in pair {
            h.add_edge(a, b).expect("lifted endpoints are in range");
        }
    }
    h
}

/// `G ∪ G` with the two copies of edge `i` replaced by the crossing pair.
pub fn special_double_cover(g: &MultiGraph, i: usize) -> Result<MultiGraph> {
    let (u, v) = g.edge(i)?;
    if u == v {
        return Err(Error::domain(format!("edge {i} is a loop")));
    }
    let n = g.vertex_count();
    let rest = g.delete_edge(i)?;
    let mut h = rest.disjoint_union(&rest);
    h.add_edge(u, v + n)?;
    h.add_edge(u + n, v)?;
    Ok(h)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GirthTower {
    /// Level 0 is the input graph; level `k + 1` is a 2-lift of level `k`.
    pub graphs: Vec<MultiGraph>,
    pub girths: Vec<Girth>,
    /// Signs used to build each level from the previous one.
    pub signs: Vec<Vec<Sign>>,
    /// Set when a level could not reduce the number of shortest cycles
    /// within the sampling budget; the tower stops there.
    pub stalled: bool,
}

/// Number of random sign vectors tried per level.
const ATTEMPTS_PER_LEVEL: usize = 512;
const SHORT_CYCLE_LIMIT: usize = 2_000_000;

/// Builds a tower of random 2-lifts whose girth tends to grow.
///
/// Each level samples sign vectors and keeps the first one under which every
/// shortest cycle has an odd number of `-` signs, so no shortest cycle lifts
/// to a cycle of the same length. If no such vector turns up, the vector with
/// the fewest surviving shortest cycles is used, provided the lift has fewer
/// shortest cycles than the base. Stops early once `target_girth` is reached.
pub fn random_girth_tower(g0: &MultiGraph, levels: usize, target_girth: usize, seed: u64) -> Result<GirthTower> {
    if !g0.is_connected() {
        return Err(Error::domain("girth tower needs a connected base graph"));
    }
    let mut current_girth = girth(g0).girth;
    if current_girth == Girth::Infinite {
        return Err(Error::domain("girth tower needs a base graph with a cycle"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tower = GirthTower {
        graphs: vec![g0.clone()],
        girths: vec![current_girth],
        signs: Vec::new(),
        stalled: false,
    };
    for _ in 0..levels {
        let g = tower.graphs.last().expect("non-empty");
        let len = match current_girth {
            Girth::Finite(l) if l < target_girth => l,
            _ => break,
        };
        let shortest = cycles_of_length(g, len, SHORT_CYCLE_LIMIT)?;
        let m = g.edge_count();
        let mut best: Option<(usize, Vec<Sign>)> = None;
        for _ in 0..ATTEMPTS_PER_LEVEL {
            let signs: Vec<Sign> = (0..m)
                .map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus })
                .collect();
            let minus_mask = signs
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Sign::Minus)
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            let surviving = shortest
                .iter()
                .filter(|&&c| (c & minus_mask).count_ones() % 2 == 0)
                .count();
            if best.as_ref().is_none_or(|(b, _)| surviving < *b) {
                best = Some((surviving, signs));
            }
            if surviving == 0 {
                break;
            }
        }
        let (surviving, signs) = best.expect("at least one attempt");
        // Each surviving cycle lifts to two shortest cycles of the cover.
        if 2 * surviving >= shortest.len() {
            tower.stalled = true;
            break;
        }
        let lift = SignedLift::new(g.clone(), signs.clone())?;
        let h = expand_lift(&lift);
        current_girth = girth(&h).girth;
        tower.graphs.push(h);
        tower.girths.push(current_girth);
        tower.signs.push(signs);
    }
    Ok(tower)
}
