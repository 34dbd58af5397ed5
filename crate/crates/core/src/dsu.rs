//! Disjoint-set forests.

/// Union–find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.size.fill(1);
        self.sets = self.parent.len();
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// Union–find without path compression whose unions can be undone in LIFO order.
///
/// Used by the depth-first forest enumerators.
#[derive(Debug, Clone)]
pub struct RollbackSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
    sets: usize,
}

impl RollbackSets {
    pub fn new(n: usize) -> Self {
        RollbackSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            sets: n,
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins two sets and records the step. A no-op union is recorded too so
    /// that every call can be matched by one `rollback`.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        self.history.push(Some((ra, rb)));
        true
    }

    pub fn rollback(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.sets += 1;
        }
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn set_size(&self, x: usize) -> usize {
        self.size[self.find(x)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_rollback() {
        let mut s = RollbackSets::new(4);
        assert!(s.union(0, 1));
        assert!(s.union(2, 3));
        assert!(!s.union(1, 0));
        assert_eq!(s.set_count(), 2);
        s.rollback();
        s.rollback();
        assert_eq!(s.set_count(), 3);
        assert_ne!(s.find(2), s.find(3));
        assert_eq!(s.find(0), s.find(1));
    }

    #[test]
    fn path_halving_keeps_sizes() {
        let mut d = DisjointSets::new(5);
        d.union(0, 1);
        d.union(1, 2);
        d.union(3, 4);
        assert_eq!(d.set_size(2), 3);
        assert_eq!(d.set_count(), 2);
        d.reset();
        assert_eq!(d.set_count(), 5);
    }
}
