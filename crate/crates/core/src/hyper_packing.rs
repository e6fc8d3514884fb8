//! Hypergraph layer: feasibility conditions over partitions, trimming of
//! hyperedges down to graph edges while preserving the conditions, the full
//! pack-and-lift pipeline, and witness-based verification of hyperforest
//! packings.

use alloc::vec::Vec;
use core::fmt;

use crate::forest_packing::{
    pack_regular_forests_bounded, CheckOutcome, ForestInfeasibility, PartitionWitness,
};
use crate::ground::{Graph, HyperforestMember, Hypergraph, RootedHyperforestPacking};
use crate::partitions::{
    enumerate_partitions, entering_count_hypergraph, CapExceeded, Partition,
};
use crate::spec::{ell_capped_sum, PackingSpec};

const SLACK_CONDITION: &str = "ell'(0) - ell(K) + ell_p(K) + e_H(P) >= h|P|";
const UPPER_CONDITION: &str = "ell'_p(K) + e_H(P) >= h|P|";

/// How each hyperedge was reduced to a graph edge, plus the removal steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrimWitness {
    /// For each hyperedge index, the two vertices kept.
    pub kept: Vec<(usize, usize)>,
    /// The `(hyperedge, removed vertex)` steps in application order.
    pub removals: Vec<(usize, usize)>,
}

impl TrimWitness {
    /// Replays the removals on the original hypergraph and checks that the
    /// result is exactly the kept pairs.
    pub fn replays_on(&self, hg: &Hypergraph) -> bool {
        let mut sets: Vec<Vec<usize>> = hg.hyperedges().to_vec();
        for &(e, v) in &self.removals {
            if e >= sets.len() {
                return false;
            }
            match sets[e].binary_search(&v) {
                Ok(pos) if sets[e].len() > 2 => {
                    sets[e].remove(pos);
                }
                _ => return false,
            }
        }
        sets.len() == self.kept.len()
            && sets
                .iter()
                .zip(&self.kept)
                .all(|(s, &(u, v))| s.len() == 2 && s[0] == u.min(v) && s[1] == u.max(v))
    }
}

/// A trimming step was impossible even though the conditions held, which
/// would contradict the trimming argument; surfaced as its own error so
/// tests can probe for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrimError {
    Infeasible(ForestInfeasibility),
    CapExceeded(CapExceeded),
    InternalContradiction { hyperedge: usize },
}

impl fmt::Display for TrimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrimError::Infeasible(v) => write!(f, "{v}"),
            TrimError::CapExceeded(c) => write!(f, "{c}"),
            TrimError::InternalContradiction { hyperedge } => {
                write!(f, "no vertex of hyperedge {hyperedge} is removable despite valid conditions")
            }
        }
    }
}

/// Checks the budget condition `h|V| >= ell(0)` and the two partition
/// conditions of the hyperforest packing theorem by enumeration.
pub fn check_conditions_33(
    hg: &Hypergraph,
    spec: &PackingSpec,
    cap: usize,
) -> Result<CheckOutcome, CapExceeded> {
    let n = hg.vertex_count();
    if let Some(v) = spec.validate(n).into_iter().next() {
        return Ok(CheckOutcome::Violated(ForestInfeasibility::Spec(v)));
    }
    if spec.h * n < spec.lower[0] {
        return Ok(CheckOutcome::Violated(ForestInfeasibility::TotalTooLarge));
    }
    let all: Vec<usize> = (0..hg.hyperedge_count()).collect();
    let slack = spec.upper[0] - spec.lower_sum();
    for p in enumerate_partitions(n, cap)? {
        let e = entering_count_hypergraph(hg, &all, p.blocks());
        let required = spec.h * p.len();
        let available = slack + ell_capped_sum(spec.lower_members(), p.len()) + e;
        if available < required {
            return Ok(CheckOutcome::Violated(ForestInfeasibility::Witness(
                PartitionWitness {
                    partition: p,
                    condition: SLACK_CONDITION,
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
                    condition: UPPER_CONDITION,
                    required,
                    available,
                },
            )));
        }
    }
    Ok(CheckOutcome::Holds)
}

/// True iff an undirected element with the given sorted vertex set enters
/// some block of a partition.
fn enters_some(xs: &[usize], p: &Partition) -> bool {
    p.blocks().iter().any(|b| {
        let inside = |v: &usize| b.binary_search(v).is_ok();
        xs.iter().any(inside) && xs.iter().any(|v| !inside(v))
    })
}

/// Per-partition bookkeeping for the trimming loop: the enumerated
/// partitions of `V` with the current entering count of the whole
/// hyperedge family.
struct ConditionTable {
    partitions: Vec<Partition>,
    entering: Vec<usize>,
    required: Vec<usize>,
    slack_base: Vec<usize>,
    upper_base: Vec<usize>,
}

impl ConditionTable {
    fn build(
        sets: &[Vec<usize>],
        n: usize,
        spec: &PackingSpec,
        cap: usize,
    ) -> Result<Self, CapExceeded> {
        let partitions: Vec<Partition> = enumerate_partitions(n, cap)?.collect();
        let slack = spec.upper[0] - spec.lower_sum();
        let mut entering = Vec::with_capacity(partitions.len());
        let mut required = Vec::with_capacity(partitions.len());
        let mut slack_base = Vec::with_capacity(partitions.len());
        let mut upper_base = Vec::with_capacity(partitions.len());
        for p in &partitions {
            entering.push(sets.iter().filter(|x| enters_some(x, p)).count());
            required.push(spec.h * p.len());
            slack_base.push(slack + ell_capped_sum(spec.lower_members(), p.len()));
            upper_base.push(ell_capped_sum(spec.upper_members(), p.len()));
        }
        Ok(Self {
            partitions,
            entering,
            required,
            slack_base,
            upper_base,
        })
    }

    /// Whether both conditions stay valid after replacing hyperedge `old`
    /// with `new` (all other hyperedges untouched).
    fn valid_after_swap(&self, old: &[usize], new: &[usize]) -> bool {
        self.partitions.iter().enumerate().all(|(i, p)| {
            let before = enters_some(old, p) as usize;
            let after = enters_some(new, p) as usize;
            let e = self.entering[i] + after - before;
            self.slack_base[i] + e >= self.required[i] && self.upper_base[i] + e >= self.required[i]
        })
    }

    fn apply_swap(&mut self, old: &[usize], new: &[usize], idx: usize) {
        let _ = idx;
        for (i, p) in self.partitions.iter().enumerate() {
            let before = enters_some(old, p) as usize;
            let after = enters_some(new, p) as usize;
            self.entering[i] = self.entering[i] + after - before;
        }
    }
}

/// Trims every hyperedge down to two vertices, one vertex removal at a
/// time, keeping both partition conditions valid throughout. Scans
/// hyperedges and candidate vertices in index order and accepts the first
/// removal that preserves the conditions.
pub fn trim_to_graph(
    hg: &Hypergraph,
    spec: &PackingSpec,
    cap: usize,
) -> Result<(Graph, TrimWitness), TrimError> {
    match check_conditions_33(hg, spec, cap).map_err(TrimError::CapExceeded)? {
        CheckOutcome::Holds => {}
        CheckOutcome::Violated(v) => return Err(TrimError::Infeasible(v)),
    }
    let n = hg.vertex_count();
    let mut sets: Vec<Vec<usize>> = hg.hyperedges().to_vec();
    let mut table =
        ConditionTable::build(&sets, n, spec, cap).map_err(TrimError::CapExceeded)?;
    let mut removals: Vec<(usize, usize)> = Vec::new();

    while let Some(e) = sets.iter().position(|x| x.len() > 2) {
        let mut accepted = None;
        // Any oversized hyperedge will do for progress; preferring the
        // lowest index keeps runs reproducible.
        'search: for (ei, x) in sets.iter().enumerate() {
            if x.len() <= 2 {
                continue;
            }
            for (vi, &v) in x.iter().enumerate() {
                let mut shrunk = x.clone();
                shrunk.remove(vi);
                if table.valid_after_swap(x, &shrunk) {
                    accepted = Some((ei, v, shrunk));
                    break 'search;
                }
            }
        }
        let Some((ei, v, shrunk)) = accepted else {
            return Err(TrimError::InternalContradiction { hyperedge: e });
        };
        table.apply_swap(&sets[ei], &shrunk, ei);
        sets[ei] = shrunk;
        removals.push((ei, v));
    }

    let kept: Vec<(usize, usize)> = sets.iter().map(|x| (x[0], x[1])).collect();
    let graph = Graph::new(n, kept.clone()).expect("trimmed pairs are valid edges");
    Ok((graph, TrimWitness { kept, removals }))
}

/// Orients a rooted forest member away from its roots and lifts each graph
/// edge back to its source hyperedge, producing the orientation witness.
fn orient_member(
    g: &Graph,
    support: &[usize],
    edges: &[usize],
    roots: &[usize],
) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    // Adjacency over the member's edges.
    let mut adj: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); n];
    for &e in edges {
        let (u, v) = g.edges()[e];
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut head_of = alloc::vec![usize::MAX; edges.len()];
    let mut tail_of = alloc::vec![usize::MAX; edges.len()];
    let mut pos_of = alloc::vec![usize::MAX; g.edge_count()];
    for (i, &e) in edges.iter().enumerate() {
        pos_of[e] = i;
    }
    let mut seen = alloc::vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for &r in roots {
        seen[r] = true;
        queue.push(r);
    }
    let mut qi = 0;
    while qi < queue.len() {
        let u = queue[qi];
        qi += 1;
        for &(v, e) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                head_of[pos_of[e]] = v;
                tail_of[pos_of[e]] = u;
                queue.push(v);
            }
        }
    }
    debug_assert!(support.iter().all(|&v| seen[v]), "roots reach the support");
    edges
        .iter()
        .enumerate()
        .map(|(i, _)| (tail_of[i], head_of[i]))
        .collect()
}

/// Packs `k` hyperedge-disjoint rooted hyperforests meeting the root-count
/// bounds, with every vertex in exactly `h` cores: trims the hypergraph to
/// a graph, packs rooted forests there, and lifts the result with an
/// explicit orientation witness per member.
pub fn pack_hyperforests(
    hg: &Hypergraph,
    spec: &PackingSpec,
    cap: usize,
) -> Result<RootedHyperforestPacking, TrimError> {
    let (graph, _witness) = trim_to_graph(hg, spec, cap)?;
    let packing = pack_regular_forests_bounded(&graph, spec).map_err(TrimError::Infeasible)?;
    let members = packing
        .members
        .iter()
        .map(|m| {
            let pairs = orient_member(&graph, &m.support, &m.edges, &m.roots);
            HyperforestMember {
                hyperedges: m.edges.clone(),
                roots: m.roots.clone(),
                witness: pairs,
            }
        })
        .collect();
    Ok(RootedHyperforestPacking { members })
}

/// Verifies a hyperforest packing against its host and spec: hyperedge
/// disjointness, witness replay into a valid rooted branching per member,
/// root-count bounds, and exact `h`-coverage of the cores.
pub fn verify_hyperforest_packing(
    hg: &Hypergraph,
    packing: &RootedHyperforestPacking,
    spec: &PackingSpec,
) -> Vec<&'static str> {
    let n = hg.vertex_count();
    let mut problems = Vec::new();
    if packing.members.len() != spec.k {
        problems.push("member count differs from k");
        return problems;
    }
    let mut used = alloc::vec![false; hg.hyperedge_count()];
    let mut coverage = alloc::vec![0usize; n];
    let mut total_roots = 0usize;
    for (i, m) in packing.members.iter().enumerate() {
        if m.witness.len() != m.hyperedges.len() {
            problems.push("witness length differs from hyperedge count");
            continue;
        }
        let mut ok = true;
        for (&e, &(t, h)) in m.hyperedges.iter().zip(&m.witness) {
            if e >= hg.hyperedge_count() || used[e] {
                problems.push("members are not hyperedge-disjoint");
                return problems;
            }
            used[e] = true;
            let x = &hg.hyperedges()[e];
            if t == h || x.binary_search(&t).is_err() || x.binary_search(&h).is_err() {
                ok = false;
            }
        }
        if !ok {
            problems.push("witness pair not inside its hyperedge");
            continue;
        }
        if !valid_branching(n, &m.witness, &m.roots) {
            problems.push("witness does not replay to a rooted branching");
            continue;
        }
        for v in m.core() {
            coverage[v] += 1;
        }
        let c = m.roots.len();
        if !(spec.lower[i + 1] <= c && c <= spec.upper[i + 1]) {
            problems.push("per-member root bounds violated");
        }
        total_roots += c;
    }
    if !(spec.lower[0] <= total_roots && total_roots <= spec.upper[0]) {
        problems.push("total root bounds violated");
    }
    if coverage.iter().any(|&c| c != spec.h) {
        problems.push("core coverage is not exactly h");
    }
    problems
}

/// True iff the trimmed arcs form an S-branching on `heads ∪ roots`: heads
/// pairwise distinct and disjoint from the roots, every tail inside the
/// core, and no directed cycle.
pub(crate) fn valid_branching(n: usize, arcs: &[(usize, usize)], roots: &[usize]) -> bool {
    let mut is_root = alloc::vec![false; n];
    for &r in roots {
        if r >= n || is_root[r] {
            return false;
        }
        is_root[r] = true;
    }
    let mut parent = alloc::vec![usize::MAX; n];
    let mut is_head = alloc::vec![false; n];
    for &(t, h) in arcs {
        if t >= n || h >= n || is_head[h] || is_root[h] {
            return false;
        }
        is_head[h] = true;
        parent[h] = t;
    }
    // Tails must lie in the core (a head or a root).
    if arcs.iter().any(|&(t, _)| !is_head[t] && !is_root[t]) {
        return false;
    }
    // Acyclic: walking parents from any head must terminate at a root.
    for &(_, h) in arcs {
        let mut v = h;
        let mut steps = 0;
        while is_head[v] {
            v = parent[v];
            steps += 1;
            if steps > arcs.len() {
                return false;
            }
        }
    }
    true
}

/// Brute-force orientation witness for a single member: exhaustively picks
/// a head and a trimmed tail per hyperedge. Desk scale only.
pub fn find_hyperforest_witness(
    n: usize,
    hyperedges: &[&[usize]],
    roots: &[usize],
) -> Option<Vec<(usize, usize)>> {
    assert!(n <= 12 && hyperedges.len() <= 8, "witness search is desk-scale only");
    fn go(
        n: usize,
        hyperedges: &[&[usize]],
        roots: &[usize],
        chosen: &mut Vec<(usize, usize)>,
        used_head: &mut [bool],
    ) -> bool {
        let i = chosen.len();
        if i == hyperedges.len() {
            return valid_branching(n, chosen, roots);
        }
        let x = hyperedges[i];
        for &h in x {
            if used_head[h] || roots.binary_search(&h).is_ok() {
                continue;
            }
            for &t in x {
                if t == h {
                    continue;
                }
                used_head[h] = true;
                chosen.push((t, h));
                if go(n, hyperedges, roots, chosen, used_head) {
                    return true;
                }
                chosen.pop();
                used_head[h] = false;
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let mut used_head = alloc::vec![false; n];
    if go(n, hyperedges, roots, &mut chosen, &mut used_head) {
        Some(chosen)
    } else {
        None
    }
}

/// Exhaustive hyperforest-packing oracle: assigns hyperedges to members or
/// "unused", searches orientation witnesses per member, and completes the
/// root sets to exact `h`-coverage of the cores. Desk scale only.
pub fn brute_force_hyperforest_packing(
    hg: &Hypergraph,
    spec: &PackingSpec,
) -> Option<RootedHyperforestPacking> {
    let n = hg.vertex_count();
    let m = hg.hyperedge_count();
    assert!(n <= 5 && m <= 5, "oracle is desk-scale only");
    if !spec.validate(n).is_empty() {
        return None;
    }
    let k = spec.k;
    let mut assign: Vec<Option<usize>> = alloc::vec![None; m];
    let mut stack: Vec<usize> = Vec::new();
    let _ = &mut stack;

    // All (head, tail) witness setups of one member, with the derived base
    // core pieces: heads and forced roots (tails outside the heads).
    fn member_setups(
        hg: &Hypergraph,
        edges: &[usize],
    ) -> Vec<(Vec<(usize, usize)>, Vec<usize>, Vec<usize>)> {
        let n = hg.vertex_count();
        let mut out = Vec::new();
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        let mut used_head = alloc::vec![false; n];
        fn go(
            hg: &Hypergraph,
            edges: &[usize],
            chosen: &mut Vec<(usize, usize)>,
            used_head: &mut [bool],
            out: &mut Vec<(Vec<(usize, usize)>, Vec<usize>, Vec<usize>)>,
        ) {
            let i = chosen.len();
            if i == edges.len() {
                let mut heads: Vec<usize> = chosen.iter().map(|&(_, h)| h).collect();
                heads.sort_unstable();
                let mut forced: Vec<usize> = chosen
                    .iter()
                    .map(|&(t, _)| t)
                    .filter(|t| heads.binary_search(t).is_err())
                    .collect();
                forced.sort_unstable();
                forced.dedup();
                if valid_branching(hg.vertex_count(), chosen, &forced) {
                    out.push((chosen.clone(), heads, forced));
                }
                return;
            }
            let x = &hg.hyperedges()[edges[i]];
            for &h in x {
                if used_head[h] {
                    continue;
                }
                for &t in x {
                    if t == h {
                        continue;
                    }
                    used_head[h] = true;
                    chosen.push((t, h));
                    go(hg, edges, chosen, used_head, out);
                    chosen.pop();
                    used_head[h] = false;
                }
            }
        }
        go(hg, edges, &mut chosen, &mut used_head, &mut out);
        out
    }

    fn complete(
        hg: &Hypergraph,
        spec: &PackingSpec,
        members: &[(Vec<usize>, Vec<(usize, usize)>, Vec<usize>, Vec<usize>)],
    ) -> Option<RootedHyperforestPacking> {
        let n = hg.vertex_count();
        let k = spec.k;
        // Base core per member: heads plus forced roots.
        let mut base: Vec<Vec<usize>> = Vec::with_capacity(k);
        for (_, _, heads, forced) in members {
            let mut b = heads.clone();
            b.extend_from_slice(forced);
            b.sort_unstable();
            b.dedup();
            if b.len() != heads.len() + forced.len() {
                return None;
            }
            base.push(b);
        }
        let mut demand = alloc::vec![0usize; n];
        let mut allowed: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for v in 0..n {
            let d = (0..k).filter(|&j| base[j].binary_search(&v).is_ok()).count();
            if d > spec.h {
                return None;
            }
            demand[v] = spec.h - d;
            allowed[v] = (0..k)
                .filter(|&j| base[j].binary_search(&v).is_err())
                .collect();
        }
        let total_roots_base: usize = members.iter().map(|(_, _, _, f)| f.len()).sum();
        let total = total_roots_base + demand.iter().sum::<usize>();
        if !(spec.lower[0] <= total && total <= spec.upper[0]) {
            return None;
        }
        let lows: Vec<usize> = (0..k)
            .map(|j| spec.lower[j + 1].saturating_sub(members[j].3.len()))
            .collect();
        let highs: Vec<usize> = (0..k)
            .map(|j| spec.upper[j + 1].checked_sub(members[j].3.len()))
            .collect::<Option<Vec<_>>>()?;
        let extras = crate::flow::assign_with_bounds(&demand, &allowed, &lows, &highs)?;
        let out: Vec<HyperforestMember> = members
            .iter()
            .enumerate()
            .map(|(j, (edges, witness, _, forced))| {
                let mut roots = forced.clone();
                roots.extend_from_slice(&extras[j]);
                roots.sort_unstable();
                HyperforestMember {
                    hyperedges: edges.clone(),
                    roots,
                    witness: witness.clone(),
                }
            })
            .collect();
        Some(RootedHyperforestPacking { members: out })
    }

    fn search(
        hg: &Hypergraph,
        spec: &PackingSpec,
        assign: &mut Vec<Option<usize>>,
        e: usize,
    ) -> Option<RootedHyperforestPacking> {
        let m = hg.hyperedge_count();
        if e == m {
            let k = spec.k;
            let mut per: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
            for (i, &a) in assign.iter().enumerate() {
                if let Some(j) = a {
                    per[j].push(i);
                }
            }
            // Cartesian product over each member's witness setups.
            let setups: Vec<_> = per.iter().map(|edges| member_setups(hg, edges)).collect();
            if setups.iter().any(Vec::is_empty) {
                return None;
            }
            let mut pick = alloc::vec![0usize; k];
            loop {
                let members: Vec<_> = (0..k)
                    .map(|j| {
                        let (w, heads, forced) = &setups[j][pick[j]];
                        (per[j].clone(), w.clone(), heads.clone(), forced.clone())
                    })
                    .collect();
                if let Some(found) = complete(hg, spec, &members) {
                    return Some(found);
                }
                // Advance the mixed-radix counter.
                let mut pos = 0;
                loop {
                    if pos == k {
                        return None;
                    }
                    pick[pos] += 1;
                    if pick[pos] < setups[pos].len() {
                        break;
                    }
                    pick[pos] = 0;
                    pos += 1;
                }
            }
        }
        assign[e] = None;
        if let Some(found) = search(hg, spec, assign, e + 1) {
            return Some(found);
        }
        for j in 0..spec.k {
            assign[e] = Some(j);
            if let Some(found) = search(hg, spec, assign, e + 1) {
                return Some(found);
            }
        }
        assign[e] = None;
        None
    }

    let _ = k;
    search(hg, spec, &mut assign, 0)
}
