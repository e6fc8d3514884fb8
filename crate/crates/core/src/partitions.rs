//! Partitions and subpartitions of a vertex set: crossing tests, entering
//! counts, the uncrossing lattice operations, and exhaustive enumeration
//! for desk-scale oracles.

use alloc::vec::Vec;
use core::fmt;

use crate::ground::{Digraph, Dypergraph, Graph, Hypergraph};

/// Default cap on `|V|` for full partition enumeration (Bell(12) = 4,213,597).
pub const DEFAULT_PARTITION_CAP: usize = 12;
/// Default cap on `|V|` for subpartition enumeration (Bell(n+1) streams).
pub const DEFAULT_SUBPARTITION_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "enumeration over {} vertices exceeds cap {}", self.n, self.cap)
    }
}

/// A partition of `0..n` in canonical form: blocks sorted internally and
/// ordered by their smallest element, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes and validates: blocks must be disjoint, nonempty, and
    /// cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut blocks = blocks;
        let mut seen = alloc::vec![false; n];
        let mut covered = 0usize;
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return None;
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n || seen[v] {
                    return None;
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return None;
        }
        blocks.sort_by_key(|b| b[0]);
        Some(Self { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            n,
            blocks: (0..n).map(|v| alloc::vec![v]).collect(),
        }
    }

    pub fn whole(n: usize) -> Self {
        Self {
            n,
            blocks: alloc::vec![(0..n).collect()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("vertex in range")
    }

    pub fn as_subpartition(&self) -> Subpartition {
        Subpartition {
            n: self.n,
            blocks: self.blocks.clone(),
        }
    }
}

/// Disjoint nonempty blocks that need not cover `0..n`; possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subpartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Subpartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut blocks = blocks;
        let mut seen = alloc::vec![false; n];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return None;
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n || seen[v] {
                    return None;
                }
                seen[v] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Some(Self { n, blocks })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, blocks: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// True iff `x` intersects at least two blocks of the partition.
pub fn crosses(x: &[usize], p: &Partition) -> bool {
    let mut hit = None;
    for b in p.blocks() {
        if x.iter().any(|v| b.binary_search(v).is_ok()) {
            match hit {
                None => hit = Some(()),
                Some(()) => return true,
            }
        }
    }
    false
}

/// One element of a host structure, viewed for entering tests.
#[derive(Clone, Copy, Debug)]
pub enum ElementView<'a> {
    /// Undirected: a set of at least two vertices (an edge is a 2-set).
    Undirected(&'a [usize]),
    /// Directed: tails and a head.
    Directed { tails: &'a [usize], head: usize },
}

impl ElementView<'_> {
    /// Entering semantics: an undirected element enters a block iff it meets
    /// both the block and its complement; a directed element enters a block
    /// iff its head is inside and at least one tail is outside.
    pub fn enters_block(&self, block: &[usize]) -> bool {
        let inside = |v: &usize| block.binary_search(v).is_ok();
        match *self {
            ElementView::Undirected(xs) => {
                xs.iter().any(inside) && xs.iter().any(|v| !inside(v))
            }
            ElementView::Directed { tails, head } => {
                inside(&head) && tails.iter().any(|v| !inside(v))
            }
        }
    }

    pub fn enters_some(&self, blocks: &[Vec<usize>]) -> bool {
        blocks.iter().any(|b| self.enters_block(b))
    }
}

fn entering_count_views<'a>(
    elements: impl Iterator<Item = ElementView<'a>>,
    blocks: &[Vec<usize>],
) -> usize {
    elements.filter(|e| e.enters_some(blocks)).count()
}

/// `e_F(P)` for a graph edge index set: each edge counted once if it enters
/// at least one block.
pub fn entering_count_graph(g: &Graph, f: &[usize], blocks: &[Vec<usize>]) -> usize {
    let pairs: Vec<[usize; 2]> = f
        .iter()
        .map(|&e| {
            let (u, v) = g.edges()[e];
            if u < v {
                [u, v]
            } else {
                [v, u]
            }
        })
        .collect();
    entering_count_views(pairs.iter().map(|p| ElementView::Undirected(&p[..])), blocks)
}

pub fn entering_count_hypergraph(hg: &Hypergraph, f: &[usize], blocks: &[Vec<usize>]) -> usize {
    entering_count_views(
        f.iter().map(|&e| ElementView::Undirected(&hg.hyperedges()[e])),
        blocks,
    )
}

pub fn entering_count_digraph(d: &Digraph, f: &[usize], blocks: &[Vec<usize>]) -> usize {
    let arcs: Vec<[usize; 1]> = f.iter().map(|&a| [d.arcs()[a].0]).collect();
    entering_count_views(
        f.iter().zip(arcs.iter()).map(|(&a, tails)| ElementView::Directed {
            tails: &tails[..],
            head: d.arcs()[a].1,
        }),
        blocks,
    )
}

pub fn entering_count_dypergraph(d: &Dypergraph, f: &[usize], blocks: &[Vec<usize>]) -> usize {
    entering_count_views(
        f.iter().map(|&a| {
            let arc = &d.hyperarcs()[a];
            ElementView::Directed {
                tails: &arc.tails,
                head: arc.head,
            }
        }),
        blocks,
    )
}

/// The uncrossing closure of the blocks of two partitions: properly
/// intersecting pairs are replaced by their intersection and union, in
/// canonical (lexicographic) order, until the family is laminar. The
/// maximal elements form the join, the remaining elements the meet.
pub fn meet_join(p1: &Partition, p2: &Partition) -> MeetJoin {
    assert_eq!(p1.vertex_count(), p2.vertex_count());
    let mut family: Vec<Vec<usize>> = p1.blocks().to_vec();
    family.extend(p2.blocks().iter().cloned());
    loop {
        family.sort();
        let mut changed = false;
        'outer: for i in 0..family.len() {
            for j in i + 1..family.len() {
                let (inter, union) = intersect_union(&family[i], &family[j]);
                if !inter.is_empty()
                    && inter.len() < family[i].len()
                    && inter.len() < family[j].len()
                {
                    // Properly intersecting: replace the pair.
                    family[i] = inter;
                    family[j] = union;
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // Laminar multiset in which every vertex lies in exactly two sets; the
    // maximal sets form one partition, the rest the other. A set equal to
    // its only superset candidate (a duplicate) contributes one copy each.
    family.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let n = p1.vertex_count();
    let mut join_blocks: Vec<Vec<usize>> = Vec::new();
    let mut covered = alloc::vec![false; n];
    let mut meet_blocks: Vec<Vec<usize>> = Vec::new();
    for set in family.into_iter() {
        if set.iter().any(|&v| covered[v]) {
            meet_blocks.push(set);
        } else {
            for &v in &set {
                covered[v] = true;
            }
            join_blocks.push(set);
        }
    }
    MeetJoin {
        join: Partition::new(n, join_blocks).expect("closure yields a partition"),
        meet: Partition::new(n, meet_blocks).expect("closure yields a partition"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetJoin {
    pub join: Partition,
    pub meet: Partition,
}

fn intersect_union(a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut inter = Vec::new();
    let mut union = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                union.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                union.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                inter.push(a[i]);
                union.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    union.extend_from_slice(&a[i..]);
    union.extend_from_slice(&b[j..]);
    (inter, union)
}

/// Iterator over all partitions of `0..n` via restricted growth strings.
pub struct PartitionIter {
    n: usize,
    rgs: Vec<usize>,
    max_prefix: Vec<usize>,
    done: bool,
}

impl PartitionIter {
    fn raw(n: usize) -> Self {
        Self {
            n,
            rgs: alloc::vec![0; n],
            max_prefix: alloc::vec![0; n],
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        // Standard RGS successor: rightmost position that can be bumped.
        for i in (1..self.n).rev() {
            if self.rgs[i] <= self.max_prefix[i - 1] {
                self.rgs[i] += 1;
                let m = self.max_prefix[i - 1].max(self.rgs[i]);
                self.max_prefix[i] = m;
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.max_prefix[j] = m;
                }
                return;
            }
        }
        self.done = true;
    }

    fn current(&self) -> Partition {
        let k = self.max_prefix.last().map_or(0, |&m| m + 1);
        let mut blocks: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
        for (v, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition {
            n: self.n,
            blocks,
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Every partition of `0..n`, each exactly once, in restricted-growth order.
pub fn enumerate_partitions(n: usize, cap: usize) -> Result<PartitionIter, CapExceeded> {
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    Ok(PartitionIter::raw(n))
}

/// Every subpartition of `0..n` exactly once, including the empty one.
///
/// Subpartitions of `V` correspond to partitions of `V + {star}`: the block
/// containing the star collects the uncovered vertices.
pub fn enumerate_subpartitions(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Subpartition>, CapExceeded> {
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    let star = n;
    let it = PartitionIter::raw(n + 1).map(move |p| {
        let blocks: Vec<Vec<usize>> = p
            .blocks()
            .iter()
            .filter(|b| b.binary_search(&star).is_err())
            .cloned()
            .collect();
        Subpartition { n, blocks }
    });
    Ok(it)
}
