//! Union-find over dense vertex indices.

use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        // Root at the smaller index so representatives are stable.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Number of sets over the whole index range.
    pub fn component_count(&self) -> usize {
        self.components
    }
}

/// Number of connected components of the subgraph `(supported vertices, edges)`
/// restricted to `support`; edges must have both endpoints inside `support`.
pub fn component_count_on(support: &[usize], edges: impl Iterator<Item = (usize, usize)>) -> usize {
    if support.is_empty() {
        return 0;
    }
    let max = *support.iter().max().unwrap();
    let mut dsu = DisjointSets::new(max + 1);
    let mut merges = 0usize;
    for (u, v) in edges {
        if dsu.union(u, v) {
            merges += 1;
        }
    }
    support.len() - merges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_components() {
        let mut dsu = DisjointSets::new(4);
        assert_eq!(dsu.component_count(), 4);
        assert!(dsu.union(0, 1));
        assert!(!dsu.union(1, 0));
        assert_eq!(dsu.component_count(), 3);
        assert!(dsu.same(0, 1));
    }

    #[test]
    fn restricted_component_count() {
        // Path 0-1 plus isolated 3 within support {0,1,3}.
        assert_eq!(component_count_on(&[0, 1, 3], [(0, 1)].into_iter()), 2);
        assert_eq!(component_count_on(&[], core::iter::empty()), 0);
    }
}
