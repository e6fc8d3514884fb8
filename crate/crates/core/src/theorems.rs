//! Registry of the named packing theorems: each identifier pins a host
//! kind and a spec shape, and dispatches to the matching condition checker.
//! Dedicated closed-form checkers for the specialized statements are also
//! provided so the general checkers can be cross-validated against them.

use alloc::vec::Vec;
use core::fmt;

use crate::directed::{
    check_subpartition_conditions, DirectedInfeasibility, DirectedOutcome,
};
use crate::forest_packing::{
    check_condition_25, check_conditions_27, check_conditions_28, CheckOutcome,
    ForestInfeasibility,
};
use crate::ground::{Digraph, Dypergraph, Graph, Hypergraph};
use crate::hyper_packing::check_conditions_33;
use crate::partitions::{
    enumerate_partitions, enumerate_subpartitions, entering_count_dypergraph,
    entering_count_hypergraph, CapExceeded,
};
use crate::spec::{ell_capped_sum, PackingSpec, SpecViolation};

/// The registered packing theorems, by their numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    /// Spanning arborescences in a digraph.
    T8,
    /// Spanning branchings in a digraph, `ell` roots each.
    T9,
    /// Spanning branchings in a digraph, `ell(i)` roots.
    T10,
    /// Spanning branchings in a digraph, bounded root counts.
    T11,
    /// Regular packing of arborescences in a digraph.
    T12,
    /// Regular packing of branchings in a digraph, `ell` roots each.
    T13,
    /// Regular packing of branchings in a digraph, `ell(i)` roots.
    T14,
    /// Regular packing of branchings in a digraph, bounded root counts.
    T15,
    /// Spanning hyperarborescences in a dypergraph.
    T16,
    /// Spanning hyperbranchings, `ell` roots each.
    T17,
    /// Spanning hyperbranchings, `ell(i)` roots.
    T18,
    /// Spanning hyperbranchings, bounded root counts.
    T19,
    /// Regular packing of hyperarborescences.
    T20,
    /// Regular packing of hyperbranchings, `ell` roots each.
    T21,
    /// Regular packing of hyperbranchings, `ell(i)` roots.
    T22,
    /// Regular packing of hyperbranchings, bounded root counts.
    T23,
    /// Spanning forests in a graph, `ell(i)` components.
    T25,
    /// Regular packing of forests, `ell(i)` components.
    T27,
    /// Regular packing of rooted forests, bounded root counts.
    T28,
    /// Spanning hypertrees in a hypergraph.
    T29,
    /// Spanning rooted hyperforests, `ell` roots each.
    T30,
    /// Spanning rooted hyperforests, `ell(i)` roots.
    T31,
    /// Regular packing of rooted hyperforests, `ell(i)` roots.
    T32,
    /// Regular packing of rooted hyperforests, bounded root counts.
    T33,
}

/// The host structure an instance must provide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostKind {
    Graph,
    Hypergraph,
    Digraph,
    Dypergraph,
}

/// The spec shape a theorem statement fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecShape {
    /// `h = k`, exact counts, all equal to one.
    SpanningSingleRoot,
    /// `h = k`, exact counts, all members equal.
    SpanningUniform,
    /// `h = k`, exact counts.
    SpanningExact,
    /// `h = k`, lower/upper bounds.
    SpanningBounded,
    /// exact counts, all equal to one.
    RegularSingleRoot,
    /// exact counts, all members equal.
    RegularUniform,
    /// exact counts.
    RegularExact,
    /// lower/upper bounds.
    RegularBounded,
}

impl TheoremId {
    pub const ALL: [TheoremId; 24] = [
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T16,
        TheoremId::T17,
        TheoremId::T18,
        TheoremId::T19,
        TheoremId::T20,
        TheoremId::T21,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::T25,
        TheoremId::T27,
        TheoremId::T28,
        TheoremId::T29,
        TheoremId::T30,
        TheoremId::T31,
        TheoremId::T32,
        TheoremId::T33,
    ];

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.label() == s)
    }

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::T12 => "T12",
            TheoremId::T13 => "T13",
            TheoremId::T14 => "T14",
            TheoremId::T15 => "T15",
            TheoremId::T16 => "T16",
            TheoremId::T17 => "T17",
            TheoremId::T18 => "T18",
            TheoremId::T19 => "T19",
            TheoremId::T20 => "T20",
            TheoremId::T21 => "T21",
            TheoremId::T22 => "T22",
            TheoremId::T23 => "T23",
            TheoremId::T25 => "T25",
            TheoremId::T27 => "T27",
            TheoremId::T28 => "T28",
            TheoremId::T29 => "T29",
            TheoremId::T30 => "T30",
            TheoremId::T31 => "T31",
            TheoremId::T32 => "T32",
            TheoremId::T33 => "T33",
        }
    }

    /// The most general host the statement is about; digraph theorems also
    /// accept dypergraph hosts whose hyperarcs are plain arcs.
    pub fn host_kind(self) -> HostKind {
        use TheoremId::*;
        match self {
            T8 | T9 | T10 | T11 | T12 | T13 | T14 | T15 => HostKind::Digraph,
            T16 | T17 | T18 | T19 | T20 | T21 | T22 | T23 => HostKind::Dypergraph,
            T25 | T27 | T28 => HostKind::Graph,
            T29 | T30 | T31 | T32 | T33 => HostKind::Hypergraph,
        }
    }

    pub fn spec_shape(self) -> SpecShape {
        use TheoremId::*;
        match self {
            T8 | T16 | T29 => SpecShape::SpanningSingleRoot,
            T9 | T17 | T30 => SpecShape::SpanningUniform,
            T10 | T18 | T25 | T31 => SpecShape::SpanningExact,
            T11 | T19 => SpecShape::SpanningBounded,
            T12 | T20 => SpecShape::RegularSingleRoot,
            T13 | T21 => SpecShape::RegularUniform,
            T14 | T22 | T27 | T32 => SpecShape::RegularExact,
            T15 | T23 | T28 | T33 => SpecShape::RegularBounded,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An instance host for theorem dispatch.
#[derive(Clone, Copy, Debug)]
pub enum Host<'a> {
    Graph(&'a Graph),
    Hypergraph(&'a Hypergraph),
    Digraph(&'a Digraph),
    Dypergraph(&'a Dypergraph),
}

/// Why a theorem check could not be carried out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremError {
    /// The instance host does not match the theorem's family.
    HostMismatch {
        theorem: TheoremId,
        expected: HostKind,
    },
    /// The spec does not have the shape the theorem statement fixes.
    ShapeMismatch {
        theorem: TheoremId,
        expected: SpecShape,
    },
    CapExceeded(CapExceeded),
}

impl fmt::Display for TheoremError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremError::HostMismatch { theorem, expected } => {
                write!(f, "{theorem} needs a {expected:?} instance")
            }
            TheoremError::ShapeMismatch { theorem, expected } => {
                write!(f, "{theorem} needs a spec of shape {expected:?}")
            }
            TheoremError::CapExceeded(c) => write!(f, "{c}"),
        }
    }
}

/// A checker verdict in a form shared by all theorem families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremOutcome {
    Holds,
    Violated(Violation),
}

impl TheoremOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, TheoremOutcome::Holds)
    }
}

/// A uniform violation report: either a malformed spec, the global budget
/// failure, or a concrete violating (sub)partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Spec(SpecViolation),
    TotalTooLarge,
    Counts {
        blocks: Vec<Vec<usize>>,
        /// Whether the blocks form a partition of all vertices (otherwise a
        /// subpartition).
        full_partition: bool,
        condition: &'static str,
        required: usize,
        available: usize,
    },
}

impl From<ForestInfeasibility> for Violation {
    fn from(v: ForestInfeasibility) -> Violation {
        match v {
            ForestInfeasibility::Spec(s) => Violation::Spec(s),
            ForestInfeasibility::MemberTooLarge { member } => {
                Violation::Spec(SpecViolation::MemberBound { member })
            }
            ForestInfeasibility::TotalTooLarge => Violation::TotalTooLarge,
            ForestInfeasibility::Witness(w) => Violation::Counts {
                blocks: w.partition.blocks().to_vec(),
                full_partition: true,
                condition: w.condition,
                required: w.required,
                available: w.available,
            },
        }
    }
}

impl From<DirectedInfeasibility> for Violation {
    fn from(v: DirectedInfeasibility) -> Violation {
        match v {
            DirectedInfeasibility::Spec(s) => Violation::Spec(s),
            DirectedInfeasibility::TotalTooLarge => Violation::TotalTooLarge,
            DirectedInfeasibility::Witness(w) => Violation::Counts {
                blocks: w.subpartition.blocks().to_vec(),
                full_partition: false,
                condition: w.condition,
                required: w.required,
                available: w.available,
            },
        }
    }
}

fn shape_matches(shape: SpecShape, spec: &PackingSpec) -> bool {
    let uniform = spec
        .lower_members()
        .windows(2)
        .all(|w| w[0] == w[1]);
    let single = spec.lower_members().iter().all(|&l| l == 1);
    match shape {
        SpecShape::SpanningSingleRoot => spec.h == spec.k && spec.is_exact() && single,
        SpecShape::SpanningUniform => spec.h == spec.k && spec.is_exact() && uniform,
        SpecShape::SpanningExact => spec.h == spec.k && spec.is_exact(),
        SpecShape::SpanningBounded => spec.h == spec.k,
        SpecShape::RegularSingleRoot => spec.is_exact() && single,
        SpecShape::RegularUniform => spec.is_exact() && uniform,
        SpecShape::RegularExact => spec.is_exact(),
        SpecShape::RegularBounded => true,
    }
}

/// Checks a theorem's feasibility condition on a host and spec. Digraph
/// theorems accept dypergraph hosts with plain arcs, and hypergraph
/// theorems accept graph hosts.
pub fn check_theorem(
    id: TheoremId,
    host: &Host<'_>,
    spec: &PackingSpec,
    cap: usize,
) -> Result<TheoremOutcome, TheoremError> {
    let shape = id.spec_shape();
    if !shape_matches(shape, spec) {
        return Err(TheoremError::ShapeMismatch {
            theorem: id,
            expected: shape,
        });
    }
    let mismatch = || TheoremError::HostMismatch {
        theorem: id,
        expected: id.host_kind(),
    };
    let cap_err = TheoremError::CapExceeded;
    match id.host_kind() {
        HostKind::Digraph | HostKind::Dypergraph => {
            let owned;
            let dyper: &Dypergraph = match host {
                Host::Digraph(d) => {
                    owned = Dypergraph::from_digraph(d);
                    &owned
                }
                Host::Dypergraph(d) => {
                    if id.host_kind() == HostKind::Digraph
                        && d.hyperarcs().iter().any(|a| a.tails.len() != 1)
                    {
                        return Err(mismatch());
                    }
                    d
                }
                _ => return Err(mismatch()),
            };
            let outcome =
                check_subpartition_conditions(dyper, spec, cap).map_err(cap_err)?;
            Ok(match outcome {
                DirectedOutcome::Holds => TheoremOutcome::Holds,
                DirectedOutcome::Violated(v) => TheoremOutcome::Violated(v.into()),
            })
        }
        HostKind::Graph => {
            let Host::Graph(g) = host else {
                return Err(mismatch());
            };
            let outcome = match id {
                TheoremId::T25 => {
                    check_condition_25(g, spec.lower_members(), cap).map_err(cap_err)?
                }
                TheoremId::T27 => {
                    check_conditions_27(g, spec.h, spec.lower_members(), cap)
                        .map_err(cap_err)?
                }
                TheoremId::T28 => check_conditions_28(g, spec, cap).map_err(cap_err)?,
                _ => unreachable!("graph family covers T25/T27/T28"),
            };
            Ok(match outcome {
                CheckOutcome::Holds => TheoremOutcome::Holds,
                CheckOutcome::Violated(v) => TheoremOutcome::Violated(v.into()),
            })
        }
        HostKind::Hypergraph => {
            let owned;
            let hg: &Hypergraph = match host {
                Host::Hypergraph(hg) => hg,
                Host::Graph(g) => {
                    owned = Hypergraph::from_graph(g);
                    &owned
                }
                _ => return Err(mismatch()),
            };
            let outcome = check_conditions_33(hg, spec, cap).map_err(cap_err)?;
            Ok(match outcome {
                CheckOutcome::Holds => TheoremOutcome::Holds,
                CheckOutcome::Violated(v) => TheoremOutcome::Violated(v.into()),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Dedicated closed-form checkers for the specialized statements. These exist
// to cross-validate the general checkers; each one transcribes its theorem's
// condition list directly.

/// Spanning arborescences: `e(P) >= k(|P| - 1)` over subpartitions.
pub fn thm8_conditions(d: &Dypergraph, k: usize, cap: usize) -> Result<bool, CapExceeded> {
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    for p in enumerate_subpartitions(d.vertex_count(), cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        if (e as i64) < k as i64 * (p.len() as i64 - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spanning branchings with `ell` roots each: `|V| >= ell` and
/// `e(P) >= k(|P| - ell)` over subpartitions.
pub fn thm9_conditions(
    d: &Dypergraph,
    k: usize,
    ell: usize,
    cap: usize,
) -> Result<bool, CapExceeded> {
    if d.vertex_count() < ell {
        return Ok(false);
    }
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    for p in enumerate_subpartitions(d.vertex_count(), cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        if (e as i64) < k as i64 * (p.len() as i64 - ell as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spanning branchings with `ell(i)` roots: `|V| >= ell(i)` and
/// `ell_p(K) + e(P) >= k|P|` over subpartitions.
pub fn thm10_conditions(d: &Dypergraph, ell: &[usize], cap: usize) -> Result<bool, CapExceeded> {
    let k = ell.len();
    if ell.iter().any(|&l| l > d.vertex_count()) {
        return Ok(false);
    }
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    for p in enumerate_subpartitions(d.vertex_count(), cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        if ell_capped_sum(ell, p.len()) + e < k * p.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regular branchings with `ell` roots each: `k >= h`, `h|V| >= k ell`, and
/// `e(P) + k ell >= h|P|` over subpartitions.
pub fn thm13_conditions(
    d: &Dypergraph,
    h: usize,
    k: usize,
    ell: usize,
    cap: usize,
) -> Result<bool, CapExceeded> {
    if k < h || h * d.vertex_count() < k * ell || d.vertex_count() < ell {
        return Ok(false);
    }
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    for p in enumerate_subpartitions(d.vertex_count(), cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        if e + k * ell < h * p.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regular branchings with `ell(i)` roots: `|V| >= ell(i)`, `h|V| >= ell(K)`,
/// and `ell_p(K) + e(P) >= h|P|` over subpartitions.
pub fn thm14_conditions(
    d: &Dypergraph,
    h: usize,
    ell: &[usize],
    cap: usize,
) -> Result<bool, CapExceeded> {
    let n = d.vertex_count();
    if ell.iter().any(|&l| l > n) || h * n < ell.iter().sum::<usize>() {
        return Ok(false);
    }
    let all: Vec<usize> = (0..d.hyperarcs().len()).collect();
    for p in enumerate_subpartitions(n, cap)? {
        let e = entering_count_dypergraph(d, &all, p.blocks());
        if ell_capped_sum(ell, p.len()) + e < h * p.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spanning hyperbranchings with `ell` roots each: same form as the digraph
/// statement, over a dypergraph.
pub fn thm17_conditions(
    d: &Dypergraph,
    k: usize,
    ell: usize,
    cap: usize,
) -> Result<bool, CapExceeded> {
    thm9_conditions(d, k, ell, cap)
}

/// Spanning hypertrees: `e(P) >= k(|P| - 1)` over partitions.
pub fn thm29_conditions(hg: &Hypergraph, k: usize, cap: usize) -> Result<bool, CapExceeded> {
    let all: Vec<usize> = (0..hg.hyperedge_count()).collect();
    for p in enumerate_partitions(hg.vertex_count(), cap)? {
        let e = entering_count_hypergraph(hg, &all, p.blocks());
        if (e as i64) < k as i64 * (p.len() as i64 - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spanning rooted hyperforests with `ell` roots each: `|V| >= ell` and
/// `e(P) >= k(|P| - ell)` over partitions.
pub fn thm30_conditions(
    hg: &Hypergraph,
    k: usize,
    ell: usize,
    cap: usize,
) -> Result<bool, CapExceeded> {
    if hg.vertex_count() < ell {
        return Ok(false);
    }
    let all: Vec<usize> = (0..hg.hyperedge_count()).collect();
    for p in enumerate_partitions(hg.vertex_count(), cap)? {
        let e = entering_count_hypergraph(hg, &all, p.blocks());
        if (e as i64) < k as i64 * (p.len() as i64 - ell as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Spanning rooted hyperforests with `ell(i)` roots: `|V| >= ell(i)` and
/// `ell_p(K) + e(P) >= k|P|` over partitions.
pub fn thm31_conditions(
    hg: &Hypergraph,
    ell: &[usize],
    cap: usize,
) -> Result<bool, CapExceeded> {
    let k = ell.len();
    if ell.iter().any(|&l| l > hg.vertex_count()) {
        return Ok(false);
    }
    let all: Vec<usize> = (0..hg.hyperedge_count()).collect();
    for p in enumerate_partitions(hg.vertex_count(), cap)? {
        let e = entering_count_hypergraph(hg, &all, p.blocks());
        if ell_capped_sum(ell, p.len()) + e < k * p.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
