//! Host structures: graphs, hypergraphs, digraphs and dypergraphs over a
//! dense vertex index range `0..n`, plus the rooted packing outputs.
//!
//! All hosts are multistructures: repeated edges, hyperedges, arcs and
//! hyperarcs are allowed and every element carries a stable index. Packings
//! consume element indices, never endpoint pairs. Self-loops are rejected at
//! construction since they can never occur in a forest or branching.

use alloc::vec::Vec;
use core::fmt;

use crate::dsu::{component_count_on, DisjointSets};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundError {
    EmptyVertexSet,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { index: usize },
    HyperedgeTooSmall { index: usize },
    EmptyTails { index: usize },
    HeadInTails { index: usize },
}

impl fmt::Display for GroundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundError::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            GroundError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            GroundError::SelfLoop { index } => write!(f, "element {index} is a self-loop"),
            GroundError::HyperedgeTooSmall { index } => {
                write!(f, "hyperedge {index} has fewer than two vertices")
            }
            GroundError::EmptyTails { index } => write!(f, "hyperarc {index} has no tails"),
            GroundError::HeadInTails { index } => {
                write!(f, "hyperarc {index} contains its head among its tails")
            }
        }
    }
}

fn check_vertex(v: usize, n: usize) -> Result<(), GroundError> {
    if v >= n {
        Err(GroundError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// Undirected multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GroundError> {
        if n == 0 {
            return Err(GroundError::EmptyVertexSet);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GroundError::SelfLoop { index: i });
            }
        }
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Components of the spanning subgraph `(V, F)` as sorted vertex blocks.
    pub fn components_of(&self, edge_indices: &[usize]) -> Vec<Vec<usize>> {
        let mut dsu = DisjointSets::new(self.n);
        for &e in edge_indices {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = alloc::vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = dsu.find(v);
            if block_of[r] == usize::MAX {
                block_of[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of[r]].push(v);
        }
        blocks
    }

    /// Component count of `(V, F)`.
    pub fn component_count_of(&self, edge_indices: &[usize]) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for &e in edge_indices {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        dsu.component_count()
    }

    /// True iff the edge index set is acyclic.
    pub fn is_forest(&self, edge_indices: &[usize]) -> bool {
        let mut dsu = DisjointSets::new(self.n);
        edge_indices.iter().all(|&e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        })
    }
}

/// Hypergraph whose hyperedges each contain at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self, GroundError> {
        if n == 0 {
            return Err(GroundError::EmptyVertexSet);
        }
        let mut hyperedges = hyperedges;
        for (i, x) in hyperedges.iter_mut().enumerate() {
            x.sort_unstable();
            x.dedup();
            if x.len() < 2 {
                return Err(GroundError::HyperedgeTooSmall { index: i });
            }
            for &v in x.iter() {
                check_vertex(v, n)?;
            }
        }
        Ok(Self { n, hyperedges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// True iff every hyperedge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.hyperedges.iter().all(|x| x.len() == 2)
    }

    /// The graph with one edge per 2-element hyperedge, same indices.
    pub fn as_graph(&self) -> Option<Graph> {
        if !self.is_graph() {
            return None;
        }
        let edges = self.hyperedges.iter().map(|x| (x[0], x[1])).collect();
        Some(Graph { n: self.n, edges })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let hyperedges = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                if u < v {
                    alloc::vec![u, v]
                } else {
                    alloc::vec![v, u]
                }
            })
            .collect();
        Self {
            n: g.vertex_count(),
            hyperedges,
        }
    }
}

/// Directed multigraph; arcs are `(tail, head)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GroundError> {
        if n == 0 {
            return Err(GroundError::EmptyVertexSet);
        }
        for (i, &(t, h)) in arcs.iter().enumerate() {
            check_vertex(t, n)?;
            check_vertex(h, n)?;
            if t == h {
                return Err(GroundError::SelfLoop { index: i });
            }
        }
        Ok(Self { n, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// A hyperarc: exactly one head and at least one tail, head not a tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperarc {
    pub tails: Vec<usize>,
    pub head: usize,
}

/// Directed hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dypergraph {
    n: usize,
    hyperarcs: Vec<Hyperarc>,
}

impl Dypergraph {
    pub fn new(n: usize, hyperarcs: Vec<Hyperarc>) -> Result<Self, GroundError> {
        if n == 0 {
            return Err(GroundError::EmptyVertexSet);
        }
        let mut hyperarcs = hyperarcs;
        for (i, a) in hyperarcs.iter_mut().enumerate() {
            a.tails.sort_unstable();
            a.tails.dedup();
            if a.tails.is_empty() {
                return Err(GroundError::EmptyTails { index: i });
            }
            check_vertex(a.head, n)?;
            for &t in &a.tails {
                check_vertex(t, n)?;
            }
            if a.tails.binary_search(&a.head).is_ok() {
                return Err(GroundError::HeadInTails { index: i });
            }
        }
        Ok(Self { n, hyperarcs })
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        let hyperarcs = d
            .arcs()
            .iter()
            .map(|&(t, h)| Hyperarc {
                tails: alloc::vec![t],
                head: h,
            })
            .collect();
        Self {
            n: d.vertex_count(),
            hyperarcs,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn hyperarcs(&self) -> &[Hyperarc] {
        &self.hyperarcs
    }

    /// In-degree of the vertex set `x` in the whole hyperarc set: the number
    /// of hyperarcs with head inside `x` and at least one tail outside.
    pub fn in_degree(&self, in_x: impl Fn(usize) -> bool) -> usize {
        self.hyperarcs
            .iter()
            .filter(|a| in_x(a.head) && a.tails.iter().any(|&t| !in_x(t)))
            .count()
    }
}

/// Components of the subgraph induced by `support` with the given edge
/// index set, as sorted vertex blocks in order of their smallest vertex.
/// Edges must have both endpoints inside `support`.
pub fn components_within(g: &Graph, support: &[usize], edge_indices: &[usize]) -> Vec<Vec<usize>> {
    let mut dsu = DisjointSets::new(g.vertex_count());
    for &e in edge_indices {
        let (u, v) = g.edges()[e];
        dsu.union(u, v);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = alloc::vec![usize::MAX; g.vertex_count()];
    for &v in support {
        let r = dsu.find(v);
        if block_of[r] == usize::MAX {
            block_of[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of[r]].push(v);
    }
    blocks
}

/// One member of a forest packing: an explicit vertex support, the edge
/// index set, and one root per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    /// Sorted vertex support; components are counted within this set.
    pub support: Vec<usize>,
    /// Edge indices into the host graph; both endpoints lie in `support`.
    pub edges: Vec<usize>,
    /// Sorted roots, exactly one per component of `(support, edges)`.
    pub roots: Vec<usize>,
}

impl RootedForest {
    /// Component count of the member within its own support.
    pub fn component_count(&self, host: &Graph) -> usize {
        component_count_on(
            &self.support,
            self.edges.iter().map(|&e| host.edges()[e]),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForestPacking {
    pub members: Vec<RootedForest>,
}

/// One member of a hyperforest packing with its orientation witness: for
/// each hyperedge the trimmed `(tail, head)` pair, certifying that the
/// member is a rooted hyperforest on its core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperforestMember {
    pub hyperedges: Vec<usize>,
    pub roots: Vec<usize>,
    /// `witness[i]` is the `(tail, head)` pair chosen for `hyperedges[i]`.
    pub witness: Vec<(usize, usize)>,
}

impl HyperforestMember {
    /// Core of the member under its stored witness: heads plus roots.
    pub fn core(&self) -> Vec<usize> {
        let mut core: Vec<usize> = self.witness.iter().map(|&(_, h)| h).collect();
        core.extend_from_slice(&self.roots);
        core.sort_unstable();
        core.dedup();
        core
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedHyperforestPacking {
    pub members: Vec<HyperforestMember>,
}
