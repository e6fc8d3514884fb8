//! Constructive packing of rooted forests: spanning packings with prescribed
//! component counts via matroid union, regular packings via even
//! distribution plus an exchange/promotion loop, and root-budget packings
//! via augmentation of the component-count vector; with exact feasibility
//! checkers and a brute-force oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::flow::assign_with_bounds;
use crate::ground::{Graph, RootedForest, RootedForestPacking};
use crate::matroids::{matroid_partition, GraphicMatroid, Matroid, Truncated};
use crate::partitions::{
    enumerate_partitions, entering_count_graph, CapExceeded, Partition, DEFAULT_PARTITION_CAP,
};
use crate::spec::{ell_capped_sum, PackingSpec, SpecViolation};

/// A partition on which a counting condition fails: `available < required`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub partition: Partition,
    /// The violated inequality, e.g. `"ell_p(K) + e_E(P) >= k|P|"`.
    pub condition: &'static str,
    pub required: usize,
    pub available: usize,
}

impl fmt::Display for PartitionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition `{}` fails on a {}-block partition: {} < {}",
            self.condition,
            self.partition.len(),
            self.available,
            self.required
        )
    }
}

/// Why a forest-packing instance is infeasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForestInfeasibility {
    /// The problem statement itself is malformed or violates the standing
    /// size hypotheses.
    Spec(SpecViolation),
    /// Some prescribed component count exceeds `|V|`.
    MemberTooLarge { member: usize },
    /// The coverage budget fails: `h|V|` is below the required total.
    TotalTooLarge,
    /// A partition on which the counting condition fails.
    Witness(PartitionWitness),
}

impl fmt::Display for ForestInfeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestInfeasibility::Spec(v) => write!(f, "{v}"),
            ForestInfeasibility::MemberTooLarge { member } => {
                write!(f, "prescribed component count of member {member} exceeds |V|")
            }
            ForestInfeasibility::TotalTooLarge => {
                write!(f, "coverage budget h|V| is below the required root total")
            }
            ForestInfeasibility::Witness(w) => write!(f, "{w}"),
        }
    }
}

/// Outcome of an exhaustive condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    Violated(ForestInfeasibility),
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }
}

const SPANNING_CONDITION: &str = "ell_p(K) + e_E(P) >= k|P|";
const REGULAR_CONDITION: &str = "ell_p(K) + e_E(P) >= h|P|";
const BOUNDED_SLACK_CONDITION: &str = "ell'(0) - ell(K) + ell_p(K) + e_E(P) >= h|P|";
const BOUNDED_UPPER_CONDITION: &str = "ell'_p(K) + e_E(P) >= h|P|";

fn size_precondition(n: usize, ell: &[usize]) -> Option<ForestInfeasibility> {
    for (i, &l) in ell.iter().enumerate() {
        if l == 0 {
            return Some(ForestInfeasibility::Spec(SpecViolation::Malformed));
        }
        if l > n {
            return Some(ForestInfeasibility::MemberTooLarge { member: i + 1 });
        }
    }
    None
}

/// Checks `ell_p(K) + e_E(P) >= k|P|` over every partition of `V` by
/// enumeration (plus the size precondition `|V| >= ell(i)`).
pub fn check_condition_25(
    g: &Graph,
    ell: &[usize],
    cap: usize,
) -> Result<CheckOutcome, CapExceeded> {
    let k = ell.len();
    if let Some(v) = size_precondition(g.vertex_count(), ell) {
        return Ok(CheckOutcome::Violated(v));
    }
    let all_edges: Vec<usize> = (0..g.edge_count()).collect();
    for p in enumerate_partitions(g.vertex_count(), cap)? {
        let available = ell_capped_sum(ell, p.len()) + entering_count_graph(g, &all_edges, p.blocks());
        let required = k * p.len();
        if available < required {
            return Ok(CheckOutcome::Violated(ForestInfeasibility::Witness(
                PartitionWitness {
                    partition: p,
                    condition: SPANNING_CONDITION,
                    required,
                    available,
                },
            )));
        }
    }
    Ok(CheckOutcome::Holds)
}

/// Checks the same condition polynomially through the matroid union rank:
/// feasible iff the sum of the truncated graphic matroids has rank
/// `k|V| - ell(K)` on the whole edge set.
pub fn check_condition_25_matroid(g: &Graph, ell: &[usize]) -> bool {
    if size_precondition(g.vertex_count(), ell).is_some() {
        return false;
    }
    let n = g.vertex_count();
    let inner: Vec<Truncated<GraphicMatroid>> = ell
        .iter()
        .map(|&l| Truncated::new(GraphicMatroid::new(g), n - l))
        .collect();
    let mats: Vec<&dyn Matroid> = inner.iter().map(|m| m as &dyn Matroid).collect();
    let targets: Vec<usize> = (0..g.edge_count()).collect();
    let result = matroid_partition(&mats, &targets).expect("graphic matroids obey the axioms");
    let need: usize = ell.iter().map(|&l| n - l).sum();
    result.total_assigned() >= need
}

/// Packs `k` edge-disjoint spanning forests with exactly `ell(i)` connected
/// components each, or reports a violating partition derived from the
/// matroid duality certificate. Roots are the minimum-index vertex per
/// component.
pub fn pack_spanning_forests(
    g: &Graph,
    ell: &[usize],
) -> Result<RootedForestPacking, ForestInfeasibility> {
    let n = g.vertex_count();
    if let Some(v) = size_precondition(n, ell) {
        return Err(v);
    }
    let inner: Vec<Truncated<GraphicMatroid>> = ell
        .iter()
        .map(|&l| Truncated::new(GraphicMatroid::new(g), n - l))
        .collect();
    let mats: Vec<&dyn Matroid> = inner.iter().map(|m| m as &dyn Matroid).collect();
    let targets: Vec<usize> = (0..g.edge_count()).collect();
    let result = matroid_partition(&mats, &targets).expect("graphic matroids obey the axioms");
    let need: usize = ell.iter().map(|&l| n - l).sum();

    if result.total_assigned() < need {
        // The certificate X turns into the violating partition P(X): the
        // components of (V, X).
        let partition = Partition::new(n, g.components_of(&result.certificate))
            .expect("components partition V");
        let k = ell.len();
        let all_edges: Vec<usize> = (0..g.edge_count()).collect();
        let available =
            ell_capped_sum(ell, partition.len()) + entering_count_graph(g, &all_edges, partition.blocks());
        let required = k * partition.len();
        debug_assert!(available < required, "certificate translates to a violation");
        return Err(ForestInfeasibility::Witness(PartitionWitness {
            partition,
            condition: SPANNING_CONDITION,
            required,
            available,
        }));
    }

    let support: Vec<usize> = (0..n).collect();
    let members = result
        .parts
        .iter()
        .zip(ell.iter())
        .map(|(edges, &l)| {
            debug_assert_eq!(edges.len(), n - l, "truncation forces exact sizes");
            let roots = g.components_of(edges).iter().map(|b| b[0]).collect();
            RootedForest {
                support: support.clone(),
                edges: edges.clone(),
                roots,
            }
        })
        .collect();
    Ok(RootedForestPacking { members })
}

/// Checks the regular-packing conditions: `|V| >= ell(i)`, `h|V| >= ell(K)`
/// and `ell_p(K) + e_E(P) >= h|P|` for every partition, by enumeration.
pub fn check_conditions_27(
    g: &Graph,
    h: usize,
    ell: &[usize],
    cap: usize,
) -> Result<CheckOutcome, CapExceeded> {
    let n = g.vertex_count();
    if let Some(v) = size_precondition(n, ell) {
        return Ok(CheckOutcome::Violated(v));
    }
    if h * n < ell.iter().sum::<usize>() {
        return Ok(CheckOutcome::Violated(ForestInfeasibility::TotalTooLarge));
    }
    let all_edges: Vec<usize> = (0..g.edge_count()).collect();
    for p in enumerate_partitions(n, cap)? {
        let available = ell_capped_sum(ell, p.len()) + entering_count_graph(g, &all_edges, p.blocks());
        let required = h * p.len();
        if available < required {
            return Ok(CheckOutcome::Violated(ForestInfeasibility::Witness(
                PartitionWitness {
                    partition: p,
                    condition: REGULAR_CONDITION,
                    required,
                    available,
                },
            )));
        }
    }
    Ok(CheckOutcome::Holds)
}

/// Per-component data extracted from a forest member during splitting.
struct Component {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

/// Components of the spanning subgraph `(V, edges)` with their edges,
/// in block order.
fn forest_components(g: &Graph, edges: &[usize]) -> Vec<Component> {
    let blocks = g.components_of(edges);
    let n = g.vertex_count();
    let mut block_of = alloc::vec![usize::MAX; n];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = bi;
        }
    }
    let mut comps: Vec<Component> = blocks
        .into_iter()
        .map(|vertices| Component {
            vertices,
            edges: Vec::new(),
        })
        .collect();
    for &e in edges {
        let (u, _) = g.edges()[e];
        comps[block_of[u]].edges.push(e);
    }
    comps
}

/// Packs `k` edge-disjoint forests, member `i` carrying an explicit vertex
/// support with exactly `ell(i)` components, such that every vertex lies in
/// exactly `h` supports. Roots are the minimum-index vertex per component.
pub fn pack_regular_forests(
    g: &Graph,
    h: usize,
    ell: &[usize],
) -> Result<RootedForestPacking, ForestInfeasibility> {
    let n = g.vertex_count();
    let k = ell.len();
    if h == 0 || k == 0 {
        return Err(ForestInfeasibility::Spec(SpecViolation::Malformed));
    }
    if let Some(v) = size_precondition(n, ell) {
        return Err(v);
    }
    if h * n < ell.iter().sum::<usize>() {
        return Err(ForestInfeasibility::TotalTooLarge);
    }
    if k < h {
        // The whole-set partition violates the counting condition.
        let partition = Partition::whole(n);
        return Err(ForestInfeasibility::Witness(PartitionWitness {
            partition,
            condition: REGULAR_CONDITION,
            required: h,
            available: k,
        }));
    }
    if k == h {
        return pack_spanning_forests(g, ell);
    }

    // Sort the component counts descending, remembering original places.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(ell[i]));
    let ells: Vec<usize> = order.iter().map(|&i| ell[i]).collect();

    // Largest i' with (h - i')·ells(i') >= sum of the remaining counts,
    // reading ells(0) = |V|; i' = 0 works by the budget condition.
    let suffix_sum = |from: usize| ells[from..].iter().sum::<usize>();
    let mut i_prime = 0usize;
    for cand in 1..h {
        if (h - cand) * ells[cand - 1] >= suffix_sum(cand) {
            i_prime = cand;
        } else {
            break;
        }
    }

    // Even distribution of the remaining counts over h - i' spanning forests.
    let s = suffix_sum(i_prime);
    let slots = h - i_prime;
    let star = s.div_ceil(slots);
    debug_assert!(star >= 2, "remaining counts exceed the slot count");
    let high = s - (star - 1) * slots; // this many slots get `star`
    let mut even: Vec<usize> = ells[..i_prime].to_vec();
    for j in 0..slots {
        even.push(if j < high { star } else { star - 1 });
    }

    let spanning = match pack_spanning_forests(g, &even) {
        Ok(p) => p,
        Err(ForestInfeasibility::Witness(w)) => {
            // The same partition violates the regular-packing condition for
            // the original counts.
            let all_edges: Vec<usize> = (0..g.edge_count()).collect();
            let available = ell_capped_sum(ell, w.partition.len())
                + entering_count_graph(g, &all_edges, w.partition.blocks());
            let required = h * w.partition.len();
            debug_assert!(available < required, "witness transfers to the full counts");
            return Err(ForestInfeasibility::Witness(PartitionWitness {
                partition: w.partition,
                condition: REGULAR_CONDITION,
                required,
                available,
            }));
        }
        Err(other) => return Err(other),
    };

    // Exchange/promotion loop. Fixed forests already match their target
    // counts; active ones are balanced toward the next target by moving
    // single edges into the currently largest forest.
    let mut fixed: Vec<Vec<usize>> = Vec::new();
    let mut active: Vec<Vec<usize>> = Vec::new();
    for (j, m) in spanning.members.into_iter().enumerate() {
        if j < i_prime {
            fixed.push(m.edges);
        } else {
            active.push(m.edges);
        }
    }
    let mut promoted = i_prime;

    loop {
        // A spanning forest with e edges has |V| - e components.
        let min_pos = (0..active.len())
            .max_by_key(|&j| (active[j].len(), core::cmp::Reverse(j)))
            .expect("active set nonempty while promotions remain");
        let c_min = n - active[min_pos].len();
        let target = ells[promoted];
        debug_assert!(c_min >= target, "component floor preserved");
        if c_min == target {
            let f = active.remove(min_pos);
            fixed.push(f);
            promoted += 1;
            continue;
        }
        // Look for an edge of another active forest that connects two
        // components of the minimum forest; lowest forest then lowest edge.
        let blocks = g.components_of(&active[min_pos]);
        let mut block_of = alloc::vec![usize::MAX; n];
        for (bi, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = bi;
            }
        }
        let found = (0..active.len())
            .filter(|&j| j != min_pos)
            .find_map(|j| {
                active[j]
                    .iter()
                    .position(|&e| {
                        let (u, v) = g.edges()[e];
                        block_of[u] != block_of[v]
                    })
                    .map(|pos| (j, pos))
            });
        match found {
            Some((j, pos)) => {
                let e = active[j].remove(pos);
                let ins = active[min_pos].binary_search(&e).unwrap_err();
                active[min_pos].insert(ins, e);
            }
            None => break,
        }
    }

    // Splitting: no active component crosses the minimum forest's partition
    // any more, so ordering components by (forest, containing block) puts
    // intersecting ones far apart and consecutive windows are disjoint.
    let min_pos = (0..active.len())
        .max_by_key(|&j| (active[j].len(), core::cmp::Reverse(j)))
        .expect("active set nonempty");
    let min_blocks = g.components_of(&active[min_pos]);
    let mut min_block_of = alloc::vec![usize::MAX; n];
    for (bi, b) in min_blocks.iter().enumerate() {
        for &v in b {
            min_block_of[v] = bi;
        }
    }
    let mut pool: Vec<Component> = Vec::new();
    for edges in &active {
        let mut comps = forest_components(g, edges);
        debug_assert!(comps
            .iter()
            .all(|c| c.vertices.iter().all(|&v| min_block_of[v] == min_block_of[c.vertices[0]])));
        // Within a forest, order components by the containing block of the
        // minimum forest, so intersecting components across forests end up
        // a full block count apart in the pool.
        comps.sort_by_key(|c| min_block_of[c.vertices[0]]);
        pool.extend(comps);
    }
    debug_assert_eq!(
        pool.len(),
        ells[promoted..].iter().sum::<usize>(),
        "component budget balances"
    );
    // `pool` is already in (forest, block) order; windows only need cutting.
    let mut members_sorted: Vec<RootedForest> = Vec::with_capacity(k);
    let support_all: Vec<usize> = (0..n).collect();
    for (j, edges) in fixed.iter().enumerate() {
        debug_assert_eq!(n - edges.len(), ells[j]);
        let roots = g.components_of(edges).iter().map(|b| b[0]).collect();
        members_sorted.push(RootedForest {
            support: support_all.clone(),
            edges: edges.clone(),
            roots,
        });
    }
    let mut cursor = 0usize;
    for &want in &ells[promoted..] {
        let window = &pool[cursor..cursor + want];
        cursor += want;
        let mut support: Vec<usize> = window.iter().flat_map(|c| c.vertices.clone()).collect();
        let mut edges: Vec<usize> = window.iter().flat_map(|c| c.edges.clone()).collect();
        let roots: Vec<usize> = window.iter().map(|c| c.vertices[0]).collect();
        let before = support.len();
        support.sort_unstable();
        support.dedup();
        debug_assert_eq!(before, support.len(), "window components are disjoint");
        edges.sort_unstable();
        let mut roots = roots;
        roots.sort_unstable();
        members_sorted.push(RootedForest {
            support,
            edges,
            roots,
        });
    }

    // Undo the descending sort.
    let mut members: Vec<Option<RootedForest>> = alloc::vec![None; k];
    for (j, m) in members_sorted.into_iter().enumerate() {
        members[order[j]] = Some(m);
    }
    Ok(RootedForestPacking {
        members: members.into_iter().map(Option::unwrap).collect(),
    })
}

/// Checks the root-budget conditions: the spec hypotheses, `h|V| >= ell(0)`,
/// and the two partition conditions, by enumeration.
pub fn check_conditions_28(
    g: &Graph,
    spec: &PackingSpec,
    cap: usize,
) -> Result<CheckOutcome, CapExceeded> {
    let n = g.vertex_count();
    if let Some(v) = spec.validate(n).into_iter().next() {
        return Ok(CheckOutcome::Violated(ForestInfeasibility::Spec(v)));
    }
    if spec.h * n < spec.lower[0] {
        return Ok(CheckOutcome::Violated(ForestInfeasibility::TotalTooLarge));
    }
    let slack = spec.upper[0] - spec.lower_sum();
    let all_edges: Vec<usize> = (0..g.edge_count()).collect();
    for p in enumerate_partitions(n, cap)? {
        let e = entering_count_graph(g, &all_edges, p.blocks());
        let required = spec.h * p.len();
        let available = slack + ell_capped_sum(spec.lower_members(), p.len()) + e;
        if available < required {
            return Ok(CheckOutcome::Violated(ForestInfeasibility::Witness(
                PartitionWitness {
                    partition: p,
                    condition: BOUNDED_SLACK_CONDITION,
                    required,
                    available,
                },
            )));
        }
        let available = ell_capped_sum(spec.upper_members(), p.len()) + e;
        if available < required {
            return Ok(CheckOutcome::Violated(ForestInfeasibility::Witness(
                PartitionWitness {
                    partition: p,
                    condition: BOUNDED_UPPER_CONDITION,
                    required,
                    available,
                },
            )));
        }
    }
    Ok(CheckOutcome::Holds)
}

/// The `h` copies of the edgeless spanning forest split into isolated-vertex
/// members of the prescribed sizes, in (copy, vertex) order.
fn isolated_vertex_packing(n: usize, sizes: &[usize]) -> RootedForestPacking {
    let total: usize = sizes.iter().sum();
    debug_assert!(total % n == 0, "sizes consume whole copies of V");
    let mut members = Vec::with_capacity(sizes.len());
    let mut cursor = 0usize;
    for &want in sizes {
        let mut support: Vec<usize> = (cursor..cursor + want).map(|t| t % n).collect();
        cursor += want;
        support.sort_unstable();
        debug_assert!(support.windows(2).all(|w| w[0] < w[1]), "window stays within one lap");
        members.push(RootedForest {
            roots: support.clone(),
            support,
            edges: Vec::new(),
        });
    }
    RootedForestPacking { members }
}

/// Packs `k` edge-disjoint rooted forests meeting the per-member and total
/// root-count bounds of `spec`, with every vertex in exactly `h` supports.
///
/// When the total upper bound is at least `h|V|` the answer is an
/// isolated-vertex packing; otherwise the per-member counts are augmented
/// until their sum reaches the total upper bound and the regular packer
/// finishes the job.
pub fn pack_regular_forests_bounded(
    g: &Graph,
    spec: &PackingSpec,
) -> Result<RootedForestPacking, ForestInfeasibility> {
    let n = g.vertex_count();
    if let Some(v) = spec.validate(n).into_iter().next() {
        return Err(ForestInfeasibility::Spec(v));
    }
    let h = spec.h;
    if h * n < spec.lower[0] {
        return Err(ForestInfeasibility::TotalTooLarge);
    }
    if n <= DEFAULT_PARTITION_CAP {
        match check_conditions_28(g, spec, DEFAULT_PARTITION_CAP).expect("cap checked") {
            CheckOutcome::Holds => {}
            CheckOutcome::Violated(v) => return Err(v),
        }
    }

    if spec.upper[0] >= h * n {
        // Water-fill the member counts up to a total of exactly h|V|.
        let mut star: Vec<usize> = spec.lower_members().to_vec();
        let mut total: usize = star.iter().sum();
        for i in 0..spec.k {
            let room = (spec.upper[i + 1] - star[i]).min(h * n - total);
            star[i] += room;
            total += room;
            if total == h * n {
                break;
            }
        }
        debug_assert_eq!(total, h * n, "upper chain guarantees reachability");
        return Ok(isolated_vertex_packing(n, &star));
    }

    // Augment the member counts until their sum reaches the total upper
    // bound, keeping the slack condition invariant.
    let mut star: Vec<usize> = spec.lower_members().to_vec();
    let goal = spec.upper[0];
    while star.iter().sum::<usize>() < goal {
        let star_sum: usize = star.iter().sum();
        // Largest p with strict slack at every p' <= p.
        let mut p_star = 0usize;
        for p in 1..n {
            if goal - star_sum + ell_capped_sum(&star, p) > ell_capped_sum(spec.upper_members(), p)
            {
                p_star = p;
            } else {
                break;
            }
        }
        let j = (0..spec.k)
            .find(|&j| star[j] <= p_star && p_star < spec.upper[j + 1])
            .expect("an index to raise exists while the sum is short");
        star[j] += 1;
    }

    let packed = pack_regular_forests(g, h, &star)?;
    debug_assert!(star
        .iter()
        .zip(spec.lower_members().iter().zip(spec.upper_members()))
        .all(|(&s, (&lo, &hi))| lo <= s && s <= hi));
    Ok(packed)
}

/// Diagnostics from verifying a rooted-forest packing against a spec.
pub fn verify_regular_packing(
    g: &Graph,
    packing: &RootedForestPacking,
    spec: &PackingSpec,
) -> Vec<&'static str> {
    let n = g.vertex_count();
    let mut problems = Vec::new();
    if packing.members.len() != spec.k {
        problems.push("member count differs from k");
        return problems;
    }
    let mut seen_edges = alloc::vec![false; g.edge_count()];
    let mut coverage = alloc::vec![0usize; n];
    let mut total_roots = 0usize;
    for (i, m) in packing.members.iter().enumerate() {
        let mut ok_shape = m.support.windows(2).all(|w| w[0] < w[1])
            && m.support.iter().all(|&v| v < n)
            && m.roots.windows(2).all(|w| w[0] < w[1]);
        for &e in &m.edges {
            if e >= g.edge_count() || seen_edges[e] {
                problems.push("members are not edge-disjoint");
                return problems;
            }
            seen_edges[e] = true;
            let (u, v) = g.edges()[e];
            if m.support.binary_search(&u).is_err() || m.support.binary_search(&v).is_err() {
                ok_shape = false;
            }
        }
        if !ok_shape {
            problems.push("member support or root list malformed");
            continue;
        }
        if !g.is_forest(&m.edges) {
            problems.push("member contains a cycle");
            continue;
        }
        for &v in &m.support {
            coverage[v] += 1;
        }
        // Exactly one root per component.
        let blocks = crate::ground::components_within(g, &m.support, &m.edges);
        let c = blocks.len();
        if m.roots.len() != c
            || !blocks
                .iter()
                .all(|b| b.iter().filter(|v| m.roots.binary_search(v).is_ok()).count() == 1)
        {
            problems.push("roots are not one per component");
        }
        if !(spec.lower[i + 1] <= c && c <= spec.upper[i + 1]) {
            problems.push("per-member root bounds violated");
        }
        total_roots += m.roots.len();
    }
    if !(spec.lower[0] <= total_roots && total_roots <= spec.upper[0]) {
        problems.push("total root bounds violated");
    }
    if coverage.iter().any(|&c| c != spec.h) {
        problems.push("vertex coverage is not exactly h");
    }
    problems
}

/// Exhaustive oracle: searches all edge assignments (member or unused) with
/// forest pruning, then completes vertex supports to exact `h`-coverage with
/// a degree-constrained assignment. Desk scale only.
pub fn brute_force_regular_packing(g: &Graph, spec: &PackingSpec) -> Option<RootedForestPacking> {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(m <= 10 && spec.h * n <= 20, "oracle is desk-scale only");
    if !spec.validate(n).is_empty() {
        return None;
    }
    let mut assign: Vec<Option<usize>> = alloc::vec![None; m];

    fn leaf(
        g: &Graph,
        spec: &PackingSpec,
        assign: &[Option<usize>],
    ) -> Option<RootedForestPacking> {
        let n = g.vertex_count();
        let k = spec.k;
        let mut edges: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
        for (e, &a) in assign.iter().enumerate() {
            if let Some(j) = a {
                edges[j].push(e);
            }
        }
        let mut touched: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
        let mut trees = alloc::vec![0usize; k];
        for j in 0..k {
            let mut t: Vec<usize> = edges[j]
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edges()[e];
                    [u, v]
                })
                .collect();
            t.sort_unstable();
            t.dedup();
            trees[j] = crate::dsu::component_count_on(
                &t,
                edges[j].iter().map(|&e| g.edges()[e]),
            );
            if trees[j] > spec.upper[j + 1] {
                return None;
            }
            touched[j] = t;
        }
        // Every vertex still needs h minus its current coverage extra
        // supports, as isolated components of members not already holding it.
        let mut demand = alloc::vec![0usize; n];
        let mut allowed: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for v in 0..n {
            let d = (0..k).filter(|&j| touched[j].binary_search(&v).is_ok()).count();
            if d > spec.h {
                return None;
            }
            demand[v] = spec.h - d;
            allowed[v] = (0..k)
                .filter(|&j| touched[j].binary_search(&v).is_err())
                .collect();
        }
        let total_components: usize =
            trees.iter().sum::<usize>() + demand.iter().sum::<usize>();
        if !(spec.lower[0] <= total_components && total_components <= spec.upper[0]) {
            return None;
        }
        let lows: Vec<usize> = (0..k)
            .map(|j| spec.lower[j + 1].saturating_sub(trees[j]))
            .collect();
        let highs: Vec<usize> = (0..k).map(|j| spec.upper[j + 1] - trees[j]).collect();
        let extras = assign_with_bounds(&demand, &allowed, &lows, &highs)?;
        let mut members = Vec::with_capacity(k);
        for j in 0..k {
            let mut support = touched[j].clone();
            support.extend_from_slice(&extras[j]);
            support.sort_unstable();
            let mut roots: Vec<usize> = crate::ground::components_within(g, &touched[j], &edges[j])
                .iter()
                .map(|b| b[0])
                .collect();
            roots.extend_from_slice(&extras[j]);
            roots.sort_unstable();
            members.push(RootedForest {
                support,
                edges: edges[j].clone(),
                roots,
            });
        }
        Some(RootedForestPacking { members })
    }

    fn go(
        g: &Graph,
        spec: &PackingSpec,
        assign: &mut Vec<Option<usize>>,
        e: usize,
    ) -> Option<RootedForestPacking> {
        if e == assign.len() {
            return leaf(g, spec, assign);
        }
        // Unused first, then each member, pruning non-forests.
        assign[e] = None;
        if let Some(found) = go(g, spec, assign, e + 1) {
            return Some(found);
        }
        for j in 0..spec.k {
            assign[e] = Some(j);
            let member: Vec<usize> = (0..=e).filter(|&x| assign[x] == Some(j)).collect();
            if g.is_forest(&member) {
                if let Some(found) = go(g, spec, assign, e + 1) {
                    return Some(found);
                }
            }
        }
        assign[e] = None;
        None
    }

    go(g, spec, &mut assign, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(
            4,
            alloc::vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn condition_25_examples() {
        assert!(check_condition_25(&k4(), &[1, 1], 12).unwrap().holds());
        let single = Graph::new(2, alloc::vec![(0, 1)]).unwrap();
        match check_condition_25(&single, &[1, 1], 12).unwrap() {
            CheckOutcome::Violated(ForestInfeasibility::Witness(w)) => {
                assert_eq!(w.partition, Partition::singletons(2));
                assert_eq!((w.available, w.required), (3, 4));
            }
            other => panic!("expected witness, got {other:?}"),
        }
        // k = 1, ell = |V|: the empty forest works for any graph.
        let path = Graph::new(3, alloc::vec![(0, 1), (1, 2)]).unwrap();
        assert!(check_condition_25(&path, &[3], 12).unwrap().holds());
    }

    #[test]
    fn condition_25_matroid_examples() {
        assert!(check_condition_25_matroid(&k4(), &[1, 1]));
        let p3 = Graph::new(3, alloc::vec![(0, 1), (1, 2)]).unwrap();
        assert!(!check_condition_25_matroid(&p3, &[1, 1]));
        assert!(check_condition_25_matroid(&k4(), &[2, 1]));
    }

    #[test]
    fn spanning_pack_k4() {
        let g = k4();
        let packing = pack_spanning_forests(&g, &[1, 1]).unwrap();
        let spec = PackingSpec::spanning_components(&[1, 1]);
        assert!(verify_regular_packing(&g, &packing, &spec).is_empty());
    }

    #[test]
    fn spanning_pack_trivial_and_infeasible() {
        let iso = Graph::new(2, alloc::vec![]).unwrap();
        let packing = pack_spanning_forests(&iso, &[2]).unwrap();
        assert!(packing.members[0].edges.is_empty());
        assert_eq!(packing.members[0].roots, alloc::vec![0, 1]);

        let p3 = Graph::new(3, alloc::vec![(0, 1), (1, 2)]).unwrap();
        match pack_spanning_forests(&p3, &[1, 1]) {
            Err(ForestInfeasibility::Witness(w)) => assert!(w.available < w.required),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn regular_pack_examples() {
        // K4, h=1, k=2, ell=(2,2): supports partition V.
        let g = k4();
        let packing = pack_regular_forests(&g, 1, &[2, 2]).unwrap();
        let spec = PackingSpec::new(1, 2, alloc::vec![4, 2, 2], alloc::vec![4, 2, 2]);
        assert!(verify_regular_packing(&g, &packing, &spec).is_empty());

        // Triangle, h=1, k=3, ell=(1,1,1): three single-vertex trees.
        let tri = Graph::new(3, alloc::vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let packing = pack_regular_forests(&tri, 1, &[1, 1, 1]).unwrap();
        let spec = PackingSpec::new(1, 3, alloc::vec![3, 1, 1, 1], alloc::vec![3, 1, 1, 1]);
        assert!(verify_regular_packing(&tri, &packing, &spec).is_empty());
        assert!(brute_force_regular_packing(&tri, &spec).is_some());
    }

    #[test]
    fn regular_pack_h_equals_k_reduces_to_spanning() {
        let g = k4();
        let a = pack_regular_forests(&g, 2, &[1, 1]).unwrap();
        let b = pack_spanning_forests(&g, &[1, 1]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bounded_pack_examples() {
        let g = k4();
        // Degenerate bounds: same as the spanning packing.
        let spec = PackingSpec::new(2, 2, alloc::vec![2, 1, 1], alloc::vec![2, 1, 1]);
        let packing = pack_regular_forests_bounded(&g, &spec).unwrap();
        assert!(verify_regular_packing(&g, &packing, &spec).is_empty());

        // Three isolated vertices, three single-vertex trees.
        let iso = Graph::new(3, alloc::vec![]).unwrap();
        let spec = PackingSpec::new(1, 3, alloc::vec![3, 1, 1, 1], alloc::vec![3, 1, 1, 1]);
        let packing = pack_regular_forests_bounded(&iso, &spec).unwrap();
        assert!(verify_regular_packing(&iso, &packing, &spec).is_empty());

        // Loose bounds on K4.
        let spec = PackingSpec::new(2, 3, alloc::vec![3, 1, 1, 1], alloc::vec![4, 2, 2, 2]);
        let packing = pack_regular_forests_bounded(&g, &spec).unwrap();
        assert!(verify_regular_packing(&g, &packing, &spec).is_empty());
        let total: usize = packing.members.iter().map(|m| m.roots.len()).sum();
        assert!((3..=4).contains(&total));
        assert!(brute_force_regular_packing(&g, &spec).is_some());
    }

    #[test]
    fn oracle_examples() {
        let g = k4();
        let spec = PackingSpec::spanning_components(&[1, 1]);
        let found = brute_force_regular_packing(&g, &spec).unwrap();
        assert!(verify_regular_packing(&g, &found, &spec).is_empty());

        let single = Graph::new(2, alloc::vec![(0, 1)]).unwrap();
        let spec = PackingSpec::spanning_components(&[1, 1]);
        assert!(brute_force_regular_packing(&single, &spec).is_none());

        let dot = Graph::new(1, alloc::vec![]).unwrap();
        let spec = PackingSpec::new(1, 1, alloc::vec![1, 1], alloc::vec![1, 1]);
        let found = brute_force_regular_packing(&dot, &spec).unwrap();
        assert!(verify_regular_packing(&dot, &found, &spec).is_empty());
    }

    #[test]
    fn mutation_is_caught_by_verifier() {
        let g = k4();
        let spec = PackingSpec::spanning_components(&[1, 1]);
        let mut packing = pack_spanning_forests(&g, &[1, 1]).unwrap();
        packing.members[0].roots.clear();
        assert!(!verify_regular_packing(&g, &packing, &spec).is_empty());
    }
}
