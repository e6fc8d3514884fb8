//! Matroids over `0..ground_size` given by rank oracles — graphic and
//! truncated — plus the matroid partition (union) algorithm with a dual
//! certificate and a brute-force union rank for cross-checks.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::dsu::DisjointSets;
use crate::ground::Graph;

/// A matroid over the ground set `0..ground_size()` given by its rank
/// function on arbitrary subsets (passed sorted ascending).
pub trait Matroid {
    fn ground_size(&self) -> usize;
    fn rank(&self, subset: &[usize]) -> usize;

    fn is_independent(&self, subset: &[usize]) -> bool {
        self.rank(subset) == subset.len()
    }
}

/// The graphic matroid of a graph: a set of edge indices is independent iff
/// it is a forest; `r(F) = |V| - c(V, F)`.
#[derive(Clone, Debug)]
pub struct GraphicMatroid<'a> {
    graph: &'a Graph,
}

impl<'a> GraphicMatroid<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Self { graph }
    }
}

impl Matroid for GraphicMatroid<'_> {
    fn ground_size(&self) -> usize {
        self.graph.edges().len()
    }

    fn rank(&self, subset: &[usize]) -> usize {
        let mut dsu = DisjointSets::new(self.graph.vertex_count());
        let mut rank = 0;
        for &e in subset {
            let (u, v) = self.graph.edges()[e];
            if dsu.union(u, v) {
                rank += 1;
            }
        }
        rank
    }
}

/// The truncation of a matroid to rank at most `limit`.
#[derive(Clone, Debug)]
pub struct Truncated<M> {
    inner: M,
    limit: usize,
}

impl<M: Matroid> Truncated<M> {
    pub fn new(inner: M, limit: usize) -> Self {
        Self { inner, limit }
    }
}

impl<M: Matroid> Matroid for Truncated<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn rank(&self, subset: &[usize]) -> usize {
        self.inner.rank(subset).min(self.limit)
    }
}

/// A rank oracle answered something inconsistent with the matroid axioms
/// during an augmentation (e.g. an "independent" set shrank in rank).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub matroid: usize,
    pub element: usize,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank oracle {} violated the matroid axioms at element {}",
            self.matroid, self.element
        )
    }
}

/// Result of the matroid partition algorithm on a target set `Z`: a
/// maximum-size packing of elements of `Z` into the given matroids, plus a
/// dual certificate attaining the min in the union rank formula.
#[derive(Clone, Debug)]
pub struct PartitionResult {
    /// `assignment[x] = Some(i)` iff element `x` was placed into matroid `i`.
    pub assignment: Vec<Option<usize>>,
    /// The independent sets, one per matroid, sorted ascending.
    pub parts: Vec<Vec<usize>>,
    /// A set `X ⊆ Z` with `|Z - X| + sum_i r_i(X) = total_assigned()`.
    pub certificate: Vec<usize>,
}

impl PartitionResult {
    pub fn total_assigned(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

/// Per-run rank cache: ranks keyed by (matroid index, sorted subset).
struct RankCache {
    map: BTreeMap<(usize, Vec<usize>), usize>,
}

impl RankCache {
    fn new() -> Self {
        Self {
            map: BTreeMap::new(),
        }
    }

    fn rank(&mut self, matroids: &[&dyn Matroid], i: usize, subset: &[usize]) -> usize {
        if let Some(&r) = self.map.get(&(i, subset.to_vec())) {
            return r;
        }
        let r = matroids[i].rank(subset);
        self.map.insert((i, subset.to_vec()), r);
        r
    }

    fn is_independent(&mut self, matroids: &[&dyn Matroid], i: usize, subset: &[usize]) -> bool {
        self.rank(matroids, i, subset) == subset.len()
    }
}

struct ExchangeSearch {
    /// `pred[y]` is the previous element on the breadth-first path to `y`.
    pred: Vec<Option<usize>>,
    visited: Vec<bool>,
    /// Element and matroid index of a direct insertion, if one was found.
    target: Option<(usize, usize)>,
}

/// Breadth-first search in the exchange graph from unassigned `start`.
/// An arc `x -> y` exists when `y` sits in some matroid `i`, `I_i + x` is
/// dependent, and `I_i + x - y` is independent. The search stops at the
/// first element `x` that some matroid accepts directly.
fn exchange_bfs(
    matroids: &[&dyn Matroid],
    parts: &[Vec<usize>],
    start: usize,
    m: usize,
    cache: &mut RankCache,
) -> ExchangeSearch {
    let mut pred: Vec<Option<usize>> = alloc::vec![None; m];
    let mut visited = alloc::vec![false; m];
    visited[start] = true;
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut target = None;

    'bfs: while let Some(x) = queue.pop_front() {
        for i in 0..matroids.len() {
            let mut with_x = parts[i].clone();
            // Skip the matroid currently holding x.
            let Err(pos) = with_x.binary_search(&x) else {
                continue;
            };
            with_x.insert(pos, x);
            if cache.is_independent(matroids, i, &with_x) {
                target = Some((x, i));
                break 'bfs;
            }
            // I_i + x is dependent; every y of its unique circuit other than
            // x satisfies "I_i + x - y independent".
            for yi in 0..with_x.len() {
                let y = with_x[yi];
                if y == x || visited[y] {
                    continue;
                }
                let mut without_y = with_x.clone();
                without_y.remove(yi);
                if cache.is_independent(matroids, i, &without_y) {
                    visited[y] = true;
                    pred[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
    }

    ExchangeSearch {
        pred,
        visited,
        target,
    }
}

/// Edmonds' matroid partition algorithm on the target set `Z`, by shortest
/// augmenting paths in the exchange graph. Deterministic: elements and
/// exchange arcs are scanned in increasing index order, so the output
/// depends only on the input.
pub fn matroid_partition(
    matroids: &[&dyn Matroid],
    targets: &[usize],
) -> Result<PartitionResult, AxiomViolation> {
    let k = matroids.len();
    assert!(k > 0, "at least one matroid required");
    let m = matroids[0].ground_size();
    for mat in matroids {
        assert_eq!(mat.ground_size(), m, "matroids share a ground set");
    }
    let mut in_target = alloc::vec![false; m];
    for &z in targets {
        assert!(z < m, "target within ground set");
        in_target[z] = true;
    }
    let mut cache = RankCache::new();
    let mut assignment: Vec<Option<usize>> = alloc::vec![None; m];
    let mut parts: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];

    for start in 0..m {
        if !in_target[start] {
            continue;
        }
        let search = exchange_bfs(matroids, &parts, start, m, &mut cache);
        let Some((terminal, matroid)) = search.target else {
            continue;
        };
        // Walk the path terminal -> ... -> start backwards, shifting each
        // element into the matroid its successor vacates. Breadth-first
        // search gives a shortest path, so the exchanges compose validly.
        let mut x = terminal;
        let mut dest = matroid;
        loop {
            let prev_owner = assignment[x];
            assignment[x] = Some(dest);
            let pos = parts[dest].binary_search(&x).unwrap_err();
            parts[dest].insert(pos, x);
            if let Some(owner) = prev_owner {
                let pos = parts[owner].binary_search(&x).unwrap();
                parts[owner].remove(pos);
            }
            match search.pred[x] {
                Some(p) => {
                    dest = prev_owner.expect("interior path elements are assigned");
                    x = p;
                }
                None => break,
            }
        }
        // A lying oracle surfaces here: the shifted parts must stay
        // independent under honest matroid axioms.
        for (i, part) in parts.iter().enumerate() {
            if !cache.is_independent(matroids, i, part) {
                return Err(AxiomViolation {
                    matroid: i,
                    element: start,
                });
            }
        }
    }

    // Dual certificate: the union over all still-unassigned targets of the
    // element sets their (necessarily failing) searches reach. Within it,
    // every element is spanned by each matroid's part, and every target
    // outside it is assigned, so the min-max formula holds with equality.
    let mut in_certificate = alloc::vec![false; m];
    for x in 0..m {
        if !in_target[x] || assignment[x].is_some() || in_certificate[x] {
            continue;
        }
        let search = exchange_bfs(matroids, &parts, x, m, &mut cache);
        if search.target.is_some() {
            return Err(AxiomViolation {
                matroid: 0,
                element: x,
            });
        }
        for (y, &seen) in search.visited.iter().enumerate() {
            if seen {
                in_certificate[y] = true;
            }
        }
    }
    let certificate: Vec<usize> = (0..m).filter(|&x| in_certificate[x]).collect();

    let result = PartitionResult {
        assignment,
        parts,
        certificate,
    };
    debug_assert_eq!(
        targets.len() - result.certificate.len()
            + (0..k)
                .map(|i| cache.rank(matroids, i, &result.certificate))
                .sum::<usize>(),
        result.total_assigned(),
        "dual certificate equality"
    );
    Ok(result)
}

/// The union (sum) rank of `Z` by the min formula, scanning all `X ⊆ Z`:
/// `min_X |Z - X| + sum_i r_i(X)`. Only usable for small `|Z|`.
pub fn sum_rank_bruteforce(matroids: &[&dyn Matroid], targets: &[usize]) -> usize {
    let z = targets.len();
    assert!(z <= 12, "brute-force union rank is desk-scale only");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << z) {
        let x: Vec<usize> = (0..z)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| targets[i])
            .collect();
        let value = (z - x.len())
            + matroids
                .iter()
                .map(|mat| mat.rank(&x))
                .sum::<usize>();
        best = best.min(value);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_certificate(matroids: &[&dyn Matroid], targets: &[usize], result: &PartitionResult) {
        let dual: usize = targets.len() - result.certificate.len()
            + matroids
                .iter()
                .map(|mat| mat.rank(&result.certificate))
                .sum::<usize>();
        assert_eq!(dual, result.total_assigned());
        for (i, part) in result.parts.iter().enumerate() {
            assert!(matroids[i].is_independent(part));
        }
    }

    fn all_targets(m: usize) -> Vec<usize> {
        (0..m).collect()
    }

    #[test]
    fn two_trees_in_k4() {
        // K4 has 6 edges and decomposes into 2 spanning trees.
        let g = Graph::new(
            4,
            alloc::vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let m1 = GraphicMatroid::new(&g);
        let m2 = GraphicMatroid::new(&g);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1, &m2];
        let z = all_targets(6);
        let res = matroid_partition(&mats, &z).unwrap();
        assert_eq!(res.total_assigned(), 6);
        assert_eq!(res.parts[0].len(), 3);
        assert_eq!(res.parts[1].len(), 3);
        check_certificate(&mats, &z, &res);
    }

    #[test]
    fn triangle_two_copies_rank_three() {
        let g = Graph::new(3, alloc::vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let m1 = GraphicMatroid::new(&g);
        let m2 = GraphicMatroid::new(&g);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1, &m2];
        let z = all_targets(3);
        let res = matroid_partition(&mats, &z).unwrap();
        assert_eq!(res.total_assigned(), 3);
        assert_eq!(sum_rank_bruteforce(&mats, &z), 3);
        check_certificate(&mats, &z, &res);
    }

    #[test]
    fn single_matroid_certificate_is_whole_cycle() {
        let g = Graph::new(3, alloc::vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let m1 = GraphicMatroid::new(&g);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1];
        let z = all_targets(3);
        let res = matroid_partition(&mats, &z).unwrap();
        assert_eq!(res.total_assigned(), 2);
        check_certificate(&mats, &z, &res);
        assert_eq!(res.certificate, alloc::vec![0, 1, 2]);
    }

    #[test]
    fn empty_target_set() {
        let g = Graph::new(3, alloc::vec![(0, 1), (1, 2)]).unwrap();
        let m1 = GraphicMatroid::new(&g);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1];
        let res = matroid_partition(&mats, &[]).unwrap();
        assert_eq!(res.total_assigned(), 0);
        assert!(res.certificate.is_empty());
        assert_eq!(sum_rank_bruteforce(&mats, &[]), 0);
    }

    #[test]
    fn restricted_target_subset() {
        let g = Graph::new(3, alloc::vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let m1 = GraphicMatroid::new(&g);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1];
        let z = alloc::vec![0, 1];
        let res = matroid_partition(&mats, &z).unwrap();
        assert_eq!(res.total_assigned(), 2);
        assert!(res.assignment[2].is_none());
        check_certificate(&mats, &z, &res);
    }

    #[test]
    fn truncation_limits_parts() {
        let g = Graph::new(4, alloc::vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let m1 = Truncated::new(GraphicMatroid::new(&g), 2);
        let m2 = Truncated::new(GraphicMatroid::new(&g), 2);
        let mats: Vec<&dyn Matroid> = alloc::vec![&m1, &m2];
        let z = all_targets(4);
        let res = matroid_partition(&mats, &z).unwrap();
        assert_eq!(res.total_assigned(), 4);
        assert!(res.parts.iter().all(|p| p.len() == 2));
        check_certificate(&mats, &z, &res);
    }

    #[test]
    fn matches_bruteforce_on_small_graphs() {
        let cases = alloc::vec![
            Graph::new(3, alloc::vec![(0, 1), (1, 2), (0, 2)]).unwrap(),
            Graph::new(4, alloc::vec![(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::new(
                5,
                alloc::vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (1, 3)],
            )
            .unwrap(),
        ];
        for g in &cases {
            let m1 = GraphicMatroid::new(g);
            let m2 = GraphicMatroid::new(g);
            let mats: Vec<&dyn Matroid> = alloc::vec![&m1, &m2];
            let z = all_targets(g.edges().len());
            let res = matroid_partition(&mats, &z).unwrap();
            assert_eq!(res.total_assigned(), sum_rank_bruteforce(&mats, &z));
            check_certificate(&mats, &z, &res);
        }
    }
}
