//! Directed packings at desk scale: subpartition-condition evaluators for
//! root-bounded hyperbranching packings, a checker and exhaustive realizer
//! for the bipartite degree/neighborhood theorem, an exhaustive
//! hyperbranching packer, the full bounded pipeline, a verifier, and the
//! NP-hardness reduction from PARTITION.

use alloc::vec::Vec;
use core::fmt;

use crate::ground::{Digraph, Dypergraph};
use crate::hyper_packing::valid_branching;
use crate::partitions::{
    enumerate_subpartitions, entering_count_dypergraph, CapExceeded, Subpartition,
};
use crate::spec::{ell_capped_sum, PackingSpec, SpecViolation};

/// Subpartition enumeration walks Bell(|V|+1) cells; nine vertices keep a
/// full scan near two million subpartitions.
pub const DIRECTED_SUBPARTITION_CAP: usize = 9;

const SLACK_CONDITION: &str = "ell'(0) - ell(K) + ell_p(K) + e_A(P) >= h|P|";
const UPPER_CONDITION: &str = "ell'_p(K) + e_A(P) >= h|P|";

/// A violated subpartition condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubpartitionWitness {
    pub subpartition: Subpartition,
    pub condition: &'static str,
    pub required: usize,
    pub available: usize,
}

impl fmt::Display for SubpartitionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "subpartition {:?} violates {}: {} < {}",
            self.subpartition.blocks(),
            self.condition,
            self.available,
            self.required
        )
    }
}

/// Why a directed packing request is infeasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectedInfeasibility {
    Spec(SpecViolation),
    /// `h|V| < ell(0)`: fewer core slots than required roots.
    TotalTooLarge,
    Witness(SubpartitionWitness),
}

impl fmt::Display for DirectedInfeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectedInfeasibility::Spec(v) => write!(f, "{v:?}"),
            DirectedInfeasibility::TotalTooLarge => {
                write!(f, "h|V| is smaller than the required total root count")
            }
            DirectedInfeasibility::Witness(w) => write!(f, "{w}"),
        }
    }
}

/// Outcome of a directed condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectedOutcome {
    Holds,
    Violated(DirectedInfeasibility),
}

impl DirectedOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, DirectedOutcome::Holds)
    }
}

/// Checks `h|V| >= ell(0)` and the two root-bound conditions over every
/// subpartition of `V` by enumeration.
pub fn check_subpartition_conditions(
    d: &Dypergraph,
    spec: &PackingSpec,
    cap: usize,
) -> Result<DirectedOutcome, CapExceeded> {
    let n = d.vertex_count();
    if let Some(v) = spec.validate(n).into_iter().next() {
        return Ok(DirectedOutcome::Violated(DirectedInfeasibility::Spec(v)));
    }
    if spec.h * n < spec.lower[0] {
        return Ok(DirectedOutcome::Violated(DirectedInfeasibility::TotalTooLarge));
    }
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    let slack = spec.upper[0] - spec.lower_sum();
    for p in enumerate_subpartitions(n, cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        let required = spec.h * p.len();
        let available = slack + ell_capped_sum(spec.lower_members(), p.len()) + e;
        if available < required {
            return Ok(DirectedOutcome::Violated(DirectedInfeasibility::Witness(
                SubpartitionWitness {
                    subpartition: p,
                    condition: SLACK_CONDITION,
                    required,
                    available,
                },
            )));
        }
        let available = ell_capped_sum(spec.upper_members(), p.len()) + e;
        if available < required {
            return Ok(DirectedOutcome::Violated(DirectedInfeasibility::Witness(
                SubpartitionWitness {
                    subpartition: p,
                    condition: UPPER_CONDITION,
                    required,
                    available,
                },
            )));
        }
    }
    Ok(DirectedOutcome::Holds)
}

/// Degree-constrained bipartite realization instance: find a simple
/// bipartite graph on `S + T` with `|Γ(Y)| >= p(Y)` for every `Y ⊆ T`,
/// degrees between `f` and `g`, and `alpha <= |E| <= beta`, where
/// `p(Y) = h - d⁻(Y)` is read off the dypergraph on demand.
#[derive(Clone, Debug)]
pub struct BipartiteRealizationInstance {
    pub dyper: Dypergraph,
    pub h: usize,
    /// Per-`S`-vertex degree bounds, length `k`.
    pub f_s: Vec<usize>,
    pub g_s: Vec<usize>,
    /// Per-`T`-vertex degree bounds, length `|V|`.
    pub f_t: Vec<usize>,
    pub g_t: Vec<usize>,
    pub alpha: usize,
    pub beta: usize,
}

impl BipartiteRealizationInstance {
    /// The instantiation used by the bounded pipeline: `f = 0`, `g = h` on
    /// `T`; root bounds as degree bounds on `S`; totals as edge bounds.
    pub fn from_spec(d: &Dypergraph, spec: &PackingSpec) -> Self {
        let n = d.vertex_count();
        Self {
            dyper: d.clone(),
            h: spec.h,
            f_s: spec.lower_members().to_vec(),
            g_s: spec.upper_members().to_vec(),
            f_t: alloc::vec![0; n],
            g_t: alloc::vec![spec.h; n],
            alpha: spec.lower[0],
            beta: spec.upper[0],
        }
    }

    pub fn s_size(&self) -> usize {
        self.f_s.len()
    }

    pub fn t_size(&self) -> usize {
        self.dyper.vertex_count()
    }

    /// `p(Y) = h - d⁻(Y)` for nonempty `Y`, `0` for the empty set. May be
    /// negative.
    pub fn p(&self, y: &[usize]) -> i64 {
        if y.is_empty() {
            return 0;
        }
        let in_y = |v: usize| y.binary_search(&v).is_ok();
        self.h as i64 - self.dyper.in_degree(in_y) as i64
    }
}

/// A violated instance of one of the four bipartite feasibility
/// inequalities, identified by the subset pair and subpartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfbgViolation {
    /// Indices into `S`.
    pub x: Vec<usize>,
    /// Indices into `T`.
    pub y: Vec<usize>,
    pub subpartition: Subpartition,
    pub inequality: &'static str,
}

const BFBG_INEQUALITIES: [&str; 4] = [
    "f(Y) + sum p(P) - |X||Y| - |X||P| <= g(S-X)",
    "f(X) + sum p(P) - |X||Y| - |X||P| <= g(T-Y)",
    "alpha + sum p(P) - |X||Y| - |X||P| <= g(S-X) + g(T-Y)",
    "f(X) + f(Y) + sum p(P) - |X||Y| - |X||P| <= beta",
];

fn mask_to_vec(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// Evaluates the four feasibility inequalities over all `X ⊆ S`, `Y ⊆ T`
/// and subpartitions of `T - Y`; returns the first violation found.
pub fn check_bfbg_conditions(
    inst: &BipartiteRealizationInstance,
) -> Result<Option<BfbgViolation>, CapExceeded> {
    let k = inst.s_size();
    let n = inst.t_size();
    if k + n > 10 {
        return Err(CapExceeded { n: k + n, cap: 10 });
    }
    let f_s_total: i64 = inst.f_s.iter().map(|&v| v as i64).sum::<i64>();
    let _ = f_s_total;
    let subpartitions: Vec<Subpartition> =
        enumerate_subpartitions(n, n)?.collect();
    for y_mask in 0usize..1 << n {
        let y = mask_to_vec(y_mask, n);
        let f_y: i64 = y.iter().map(|&v| inst.f_t[v] as i64).sum();
        let g_t_rest: i64 = (0..n)
            .filter(|v| y_mask >> v & 1 == 0)
            .map(|v| inst.g_t[v] as i64)
            .sum();
        for sp in subpartitions
            .iter()
            .filter(|sp| sp.blocks().iter().all(|b| b.iter().all(|v| y_mask >> v & 1 == 0)))
        {
            let sum_p: i64 = sp.blocks().iter().map(|b| inst.p(b)).sum();
            let np = sp.len() as i64;
            for x_mask in 0usize..1 << k {
                let xs = mask_to_vec(x_mask, k);
                let nx = xs.len() as i64;
                let f_x: i64 = xs.iter().map(|&i| inst.f_s[i] as i64).sum();
                let g_s_rest: i64 = (0..k)
                    .filter(|i| x_mask >> i & 1 == 0)
                    .map(|i| inst.g_s[i] as i64)
                    .sum();
                let common = sum_p - nx * y.len() as i64 - nx * np;
                let violated = [
                    f_y + common > g_s_rest,
                    f_x + common > g_t_rest,
                    inst.alpha as i64 + common > g_s_rest + g_t_rest,
                    f_x + f_y + common > inst.beta as i64,
                ];
                if let Some(i) = violated.iter().position(|&v| v) {
                    return Ok(Some(BfbgViolation {
                        x: xs,
                        y,
                        subpartition: sp.clone(),
                        inequality: BFBG_INEQUALITIES[i],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustively builds a simple bipartite graph meeting the instance's
/// neighborhood, degree and total bounds, as per-`S`-vertex sorted neighbor
/// lists; `None` iff the feasibility inequalities fail (asserted both ways
/// on every run).
pub fn realize_bipartite(
    inst: &BipartiteRealizationInstance,
) -> Result<Option<Vec<Vec<usize>>>, CapExceeded> {
    let k = inst.s_size();
    let n = inst.t_size();
    if k * n > 20 {
        return Err(CapExceeded { n: k * n, cap: 20 });
    }
    let check = check_bfbg_conditions(inst)?;
    let found = realize_search(inst);
    assert_eq!(
        found.is_some(),
        check.is_none(),
        "bipartite realization must exist exactly when the inequalities hold"
    );
    Ok(found)
}

fn realize_search(inst: &BipartiteRealizationInstance) -> Option<Vec<Vec<usize>>> {
    let k = inst.s_size();
    let n = inst.t_size();
    fn go(
        inst: &BipartiteRealizationInstance,
        i: usize,
        deg_t: &mut [usize],
        total: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        let k = inst.s_size();
        let n = inst.t_size();
        if i == k {
            if total < inst.alpha || deg_t.iter().zip(&inst.f_t).any(|(&d, &f)| d < f) {
                return None;
            }
            // Neighborhood condition: |Γ(Y)| >= p(Y) for every Y ⊆ T.
            for y_mask in 1usize..1 << n {
                let y = mask_to_vec(y_mask, n);
                let p = inst.p(&y);
                if p <= 0 {
                    continue;
                }
                let gamma = chosen
                    .iter()
                    .filter(|&&m| m & y_mask != 0)
                    .count() as i64;
                if gamma < p {
                    return None;
                }
            }
            let edges = chosen.iter().map(|&m| mask_to_vec(m, n)).collect();
            return Some(edges);
        }
        let remaining_max: usize = (i + 1..k).map(|j| inst.g_s[j]).sum();
        for mask in 0usize..1 << n {
            let d = mask.count_ones() as usize;
            if d < inst.f_s[i] || d > inst.g_s[i] || total + d > inst.beta {
                continue;
            }
            if total + d + remaining_max < inst.alpha {
                continue;
            }
            if (0..n).any(|v| mask >> v & 1 == 1 && deg_t[v] == inst.g_t[v]) {
                continue;
            }
            for v in 0..n {
                deg_t[v] += mask >> v & 1;
            }
            chosen.push(mask);
            if let Some(found) = go(inst, i + 1, deg_t, total + d, chosen) {
                return Some(found);
            }
            chosen.pop();
            for v in 0..n {
                deg_t[v] -= mask >> v & 1;
            }
        }
        None
    }
    let mut deg_t = alloc::vec![0usize; n];
    let mut chosen = Vec::with_capacity(k);
    let _ = k;
    go(inst, 0, &mut deg_t, 0, &mut chosen)
}

/// One hyperbranching of a packing: its hyperarc indices, its root set, and
/// the trimming witness pairing each hyperarc with its chosen tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbranchingMember {
    pub hyperarcs: Vec<usize>,
    pub roots: Vec<usize>,
    /// `(chosen tail, head)` per hyperarc, aligned with `hyperarcs`.
    pub witness: Vec<(usize, usize)>,
}

impl HyperbranchingMember {
    /// The core: trimmed heads together with the roots, sorted.
    pub fn core(&self) -> Vec<usize> {
        let mut core: Vec<usize> = self.witness.iter().map(|&(_, h)| h).collect();
        core.extend_from_slice(&self.roots);
        core.sort_unstable();
        core.dedup();
        core
    }
}

/// A hyperarc-disjoint family of rooted hyperbranchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbranchingPacking {
    pub members: Vec<HyperbranchingMember>,
}

/// The two root-in-degree conditions for an `h`-regular packing with the
/// prescribed root sets: every nonempty `X` is reached by enough root sets
/// and hyperarcs, and no vertex lies in more than `h` root sets.
pub fn root_indegree_conditions(d: &Dypergraph, roots: &[Vec<usize>], h: usize) -> bool {
    let n = d.vertex_count();
    for v in 0..n {
        let s_v = roots
            .iter()
            .filter(|s| s.binary_search(&v).is_ok())
            .count();
        if s_v > h {
            return false;
        }
    }
    for x_mask in 1usize..1 << n {
        let in_x = |v: usize| x_mask >> v & 1 == 1;
        let s_x = roots
            .iter()
            .filter(|s| s.iter().any(|&v| in_x(v)))
            .count();
        if s_x + d.in_degree(in_x) < h {
            return false;
        }
    }
    true
}

/// Finds a tail choice per hyperarc turning the member into a branching
/// rooted at `roots`; heads are fixed by the hyperarcs.
fn member_trimming(
    d: &Dypergraph,
    hyperarcs: &[usize],
    roots: &[usize],
) -> Option<Vec<(usize, usize)>> {
    let n = d.vertex_count();
    fn go(
        d: &Dypergraph,
        hyperarcs: &[usize],
        roots: &[usize],
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        let i = chosen.len();
        if i == hyperarcs.len() {
            return valid_branching(d.vertex_count(), chosen, roots);
        }
        let a = &d.hyperarcs()[hyperarcs[i]];
        for &t in &a.tails {
            chosen.push((t, a.head));
            if go(d, hyperarcs, roots, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let _ = n;
    let mut chosen = Vec::with_capacity(hyperarcs.len());
    if go(d, hyperarcs, roots, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Exhaustively packs one hyperbranching per prescribed root set so that
/// every vertex lies in exactly `h` cores; `None` iff the root-in-degree
/// conditions fail (asserted both ways on every run). Desk scale only.
pub fn pack_hyperbranchings_exhaustive(
    d: &Dypergraph,
    roots: &[Vec<usize>],
    h: usize,
) -> Option<HyperbranchingPacking> {
    let n = d.vertex_count();
    let m = d.hyperarcs().len();
    assert!(m <= 8 && n <= 6, "exhaustive packing is desk-scale only");
    assert!(h >= 1, "regularity must be positive");
    let found = pack_search(d, roots, h);
    assert_eq!(
        found.is_some(),
        root_indegree_conditions(d, roots, h),
        "packing must exist exactly when the root-in-degree conditions hold"
    );
    found
}

fn pack_search(d: &Dypergraph, roots: &[Vec<usize>], h: usize) -> Option<HyperbranchingPacking> {
    let n = d.vertex_count();
    let m = d.hyperarcs().len();
    let k = roots.len();
    let mut assign: Vec<Option<usize>> = alloc::vec![None; m];
    fn leaf(
        d: &Dypergraph,
        roots: &[Vec<usize>],
        h: usize,
        assign: &[Option<usize>],
    ) -> Option<HyperbranchingPacking> {
        let n = d.vertex_count();
        let k = roots.len();
        let mut per: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
        for (a, &owner) in assign.iter().enumerate() {
            if let Some(i) = owner {
                per[i].push(a);
            }
        }
        // Cores are fixed by the assignment: trimmed heads plus roots.
        let mut coverage = alloc::vec![0usize; n];
        for i in 0..k {
            let mut core: Vec<usize> = per[i].iter().map(|&a| d.hyperarcs()[a].head).collect();
            core.extend_from_slice(&roots[i]);
            core.sort_unstable();
            let len = core.len();
            core.dedup();
            if core.len() != len {
                // A duplicate head, or a head inside the root set.
                return None;
            }
            for v in core {
                coverage[v] += 1;
            }
        }
        if coverage.iter().any(|&c| c != h) {
            return None;
        }
        let mut members = Vec::with_capacity(k);
        for i in 0..k {
            let witness = member_trimming(d, &per[i], &roots[i])?;
            members.push(HyperbranchingMember {
                hyperarcs: per[i].clone(),
                roots: roots[i].clone(),
                witness,
            });
        }
        Some(HyperbranchingPacking { members })
    }
    fn go(
        d: &Dypergraph,
        roots: &[Vec<usize>],
        h: usize,
        assign: &mut Vec<Option<usize>>,
        a: usize,
    ) -> Option<HyperbranchingPacking> {
        if a == assign.len() {
            return leaf(d, roots, h, assign);
        }
        assign[a] = None;
        if let Some(found) = go(d, roots, h, assign, a + 1) {
            return Some(found);
        }
        for i in 0..roots.len() {
            assign[a] = Some(i);
            if let Some(found) = go(d, roots, h, assign, a + 1) {
                return Some(found);
            }
        }
        assign[a] = None;
        None
    }
    let _ = (n, k);
    go(d, roots, h, &mut assign, 0)
}

/// Why the bounded pipeline stopped short of a packing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectedError {
    Infeasible(DirectedInfeasibility),
    CapExceeded(CapExceeded),
}

impl fmt::Display for DirectedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectedError::Infeasible(v) => write!(f, "{v}"),
            DirectedError::CapExceeded(c) => write!(f, "{c}"),
        }
    }
}

/// The full bounded packing pipeline at desk scale: check the subpartition
/// conditions, realize the root-assignment bipartite graph, read off the
/// root sets, and pack hyperbranchings exhaustively. The equivalence
/// between the subpartition conditions and the bipartite inequalities is
/// asserted on every run.
pub fn pack_branchings_bounded_desk(
    d: &Dypergraph,
    spec: &PackingSpec,
) -> Result<HyperbranchingPacking, DirectedError> {
    let n = d.vertex_count();
    let m = d.hyperarcs().len();
    if n > 6 || m > 8 {
        return Err(DirectedError::CapExceeded(CapExceeded {
            n: n.max(m),
            cap: if n > 6 { 6 } else { 8 },
        }));
    }
    let outcome = check_subpartition_conditions(d, spec, DIRECTED_SUBPARTITION_CAP)
        .map_err(DirectedError::CapExceeded)?;
    let inst = BipartiteRealizationInstance::from_spec(d, spec);
    if let DirectedOutcome::Violated(v) = outcome {
        // Equivalence, infeasible direction: the bipartite inequalities
        // must also fail whenever a subpartition condition does.
        if !matches!(v, DirectedInfeasibility::Spec(_)) {
            let check = check_bfbg_conditions(&inst).map_err(DirectedError::CapExceeded)?;
            assert!(
                check.is_some(),
                "subpartition violation without a bipartite violation"
            );
        }
        return Err(DirectedError::Infeasible(v));
    }
    let neighbors = realize_bipartite(&inst)
        .map_err(DirectedError::CapExceeded)?
        .expect("conditions hold, so a realization exists");
    let packing = pack_hyperbranchings_exhaustive(d, &neighbors, spec.h)
        .expect("realized root sets satisfy the root-in-degree conditions");
    debug_assert!(verify_hyperbranching_packing(d, &packing, spec).is_empty());
    Ok(packing)
}

/// Verifies a hyperbranching packing against its host and spec: hyperarc
/// disjointness, witness replay into a valid branching per member, root
/// bounds, and exact `h`-coverage of the cores.
pub fn verify_hyperbranching_packing(
    d: &Dypergraph,
    packing: &HyperbranchingPacking,
    spec: &PackingSpec,
) -> Vec<&'static str> {
    let n = d.vertex_count();
    let mut problems = Vec::new();
    if packing.members.len() != spec.k {
        problems.push("member count differs from k");
        return problems;
    }
    let mut used = alloc::vec![false; d.hyperarcs().len()];
    let mut coverage = alloc::vec![0usize; n];
    let mut total_roots = 0usize;
    for (i, m) in packing.members.iter().enumerate() {
        if m.witness.len() != m.hyperarcs.len() {
            problems.push("witness length differs from hyperarc count");
            continue;
        }
        let mut ok = true;
        for (&a, &(t, head)) in m.hyperarcs.iter().zip(&m.witness) {
            if a >= d.hyperarcs().len() || used[a] {
                problems.push("members are not hyperarc-disjoint");
                return problems;
            }
            used[a] = true;
            let arc = &d.hyperarcs()[a];
            if head != arc.head || arc.tails.binary_search(&t).is_err() {
                ok = false;
            }
        }
        if !ok {
            problems.push("witness pair not a trimming of its hyperarc");
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

/// Exhaustive bounded-packing oracle: tries every tuple of root sets
/// within the spec's bounds and searches for a conforming packing. Desk
/// scale only; used to cross-check the pipeline.
pub fn brute_force_bounded_packing(
    d: &Dypergraph,
    spec: &PackingSpec,
) -> Option<HyperbranchingPacking> {
    let n = d.vertex_count();
    let m = d.hyperarcs().len();
    assert!(n <= 4 && m <= 5, "oracle is desk-scale only");
    if !spec.validate(n).is_empty() || spec.h * n < spec.lower[0] {
        return None;
    }
    let k = spec.k;
    let mut roots: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
    fn go(
        d: &Dypergraph,
        spec: &PackingSpec,
        roots: &mut Vec<Vec<usize>>,
        i: usize,
        total: usize,
    ) -> Option<HyperbranchingPacking> {
        let n = d.vertex_count();
        let k = spec.k;
        if i == k {
            if total < spec.lower[0] || total > spec.upper[0] {
                return None;
            }
            return pack_search(d, roots, spec.h);
        }
        for mask in 0usize..1 << n {
            let c = mask.count_ones() as usize;
            if c < spec.lower[i + 1] || c > spec.upper[i + 1] || total + c > spec.upper[0] {
                continue;
            }
            roots[i] = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if let Some(found) = go(d, spec, roots, i + 1, total + c) {
                return Some(found);
            }
        }
        roots[i].clear();
        None
    }
    go(d, spec, &mut roots, 0, 0)
}

/// The PARTITION instance mapped to root-bounded branching packing: each
/// weight becomes a vertex-disjoint directed path with that many arcs, and
/// the question becomes splitting the arcs into two 1-regular branchings of
/// `ell` arcs each.
#[derive(Clone, Debug)]
pub struct PartitionReduction {
    pub digraph: Digraph,
    pub h: usize,
    pub k: usize,
    /// Arcs per member, half the total weight.
    pub ell: usize,
    /// Odd totals cannot split evenly; the instance is emitted anyway,
    /// flagged as trivially negative.
    pub odd_total: bool,
}

/// Builds the reduction instance from positive weights.
pub fn reduce_partition_instance(weights: &[usize]) -> PartitionReduction {
    assert!(!weights.is_empty() && weights.iter().all(|&w| w > 0));
    let mut arcs = Vec::new();
    let mut next = 0usize;
    for &w in weights {
        for j in 0..w {
            arcs.push((next + j, next + j + 1));
        }
        next += w + 1;
    }
    let total: usize = weights.iter().sum();
    PartitionReduction {
        digraph: Digraph::new(next, arcs).expect("paths are valid arcs"),
        h: 1,
        k: 2,
        ell: total / 2,
        odd_total: total % 2 == 1,
    }
}
