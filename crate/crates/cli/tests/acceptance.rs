//! Acceptance suite: one test per criterion, each printed as its own
//! pass/fail line by the test harness. Every expected value is computed by
//! an independent oracle (exhaustive search or a closed formula), never
//! copied from the implementation under test.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use packing_core::directed::{
    brute_force_bounded_packing, check_subpartition_conditions, pack_branchings_bounded_desk,
    reduce_partition_instance, verify_hyperbranching_packing, DirectedError,
    DIRECTED_SUBPARTITION_CAP,
};
use packing_core::forest_packing::{
    brute_force_regular_packing, check_condition_25, check_condition_25_matroid,
    check_conditions_27, check_conditions_28, pack_regular_forests, pack_regular_forests_bounded,
    pack_spanning_forests, verify_regular_packing,
};
use packing_core::hyper_packing::{
    brute_force_hyperforest_packing, check_conditions_33, pack_hyperforests, trim_to_graph,
    verify_hyperforest_packing, TrimError,
};
use packing_core::matroids::{
    matroid_partition, sum_rank_bruteforce, GraphicMatroid, Matroid, Truncated,
};
use packing_core::partitions::{entering_count_hypergraph, meet_join, Partition};
use packing_core::theorems::{
    thm10_conditions, thm13_conditions, thm14_conditions, thm17_conditions, thm29_conditions,
    thm30_conditions, thm31_conditions, thm8_conditions, thm9_conditions,
};
use packing_core::{Dypergraph, Graph, Hyperarc, Hypergraph, PackingSpec};

const CAP: usize = 12;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_graph(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let m = if n < 2 { 0 } else { rng.gen_range(0..=m_max) };
    let edges = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    Graph::new(n, edges).unwrap()
}

fn random_hypergraph(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize) -> Hypergraph {
    let n = rng.gen_range(2..=n_max);
    let m = rng.gen_range(0..=m_max);
    let hyperedges = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=4.min(n));
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            verts.truncate(size);
            verts
        })
        .collect();
    Hypergraph::new(n, hyperedges).unwrap()
}

fn random_dypergraph(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize) -> Dypergraph {
    let n = rng.gen_range(1..=n_max);
    let m = if n < 2 { 0 } else { rng.gen_range(0..=m_max) };
    let hyperarcs = (0..m)
        .map(|_| {
            let head = rng.gen_range(0..n);
            let others: Vec<usize> = (0..n).filter(|&v| v != head).collect();
            let size = rng.gen_range(1..=others.len());
            let mut tails = others;
            tails.shuffle(rng);
            tails.truncate(size);
            Hyperarc { tails, head }
        })
        .collect();
    Dypergraph::new(n, hyperarcs).unwrap()
}

/// A random `(h, k, lower, upper)` spec passing `validate`, with per-member
/// bounds in `1..=n` and total bounds inside the member sums.
fn random_bounded_spec(rng: &mut ChaCha8Rng, n: usize, h_max: usize, k_max: usize) -> PackingSpec {
    let h = rng.gen_range(1..=h_max);
    let k = rng.gen_range(1..=k_max);
    let lo: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
    let hi: Vec<usize> = lo.iter().map(|&l| rng.gen_range(l..=n)).collect();
    let lo_sum: usize = lo.iter().sum();
    let hi_sum: usize = hi.iter().sum();
    let l0 = rng.gen_range(lo_sum..=hi_sum);
    let u0 = rng.gen_range(l0..=hi_sum);
    let mut lower = vec![l0];
    lower.extend(lo);
    let mut upper = vec![u0];
    upper.extend(hi);
    PackingSpec::new(h, k, lower, upper)
}

/// Exhaustive check for an edge-disjoint family of k spanning forests with
/// exactly `ell[i]` components each (components counted over all of V).
fn spanning_forests_bruteforce(g: &Graph, ell: &[usize]) -> bool {
    let k = ell.len();
    let m = g.edge_count();

    fn member_edges(assign: &[Option<usize>], j: usize) -> Vec<usize> {
        assign
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a == Some(j))
            .map(|(e, _)| e)
            .collect()
    }

    fn go(g: &Graph, ell: &[usize], assign: &mut Vec<Option<usize>>, e: usize) -> bool {
        let k = ell.len();
        let m = assign.len();
        // Component counts only decrease as edges are added, and each
        // further edge lowers at most one member's count by one.
        let mut deficit = 0usize;
        for j in 0..k {
            let count = g.component_count_of(&member_edges(assign, j));
            if count < ell[j] {
                return false;
            }
            deficit += count - ell[j];
        }
        if deficit > m - e {
            return false;
        }
        if e == m {
            return deficit == 0;
        }
        assign[e] = None;
        if go(g, ell, assign, e + 1) {
            return true;
        }
        for j in 0..k {
            assign[e] = Some(j);
            let mut edges = member_edges(assign, j);
            edges.push(e);
            edges.sort_unstable();
            edges.dedup();
            if g.is_forest(&edges) && go(g, ell, assign, e + 1) {
                return true;
            }
        }
        assign[e] = None;
        false
    }

    if k == 0 || ell.iter().any(|&l| l > g.vertex_count()) {
        return false;
    }
    go(g, ell, &mut vec![None; m], 0)
}

/// Criterion 1: on every multigraph with at most 4 vertices and 6 edges and
/// every component-count profile, the partition-style condition, the matroid
/// reformulation, the constructive packer, and an exhaustive search agree.
#[test]
fn criterion_01_spanning_forest_equivalence() {
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        // Edge multisets of size <= 6 as nondecreasing pair-index sequences.
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(multiset) = stack.pop() {
            if multiset.len() < 6 {
                let start = multiset.last().copied().unwrap_or(0);
                for p in start..pairs.len() {
                    let mut next = multiset.clone();
                    next.push(p);
                    stack.push(next);
                }
            }
            let edges: Vec<(usize, usize)> = multiset.iter().map(|&p| pairs[p]).collect();
            let g = Graph::new(n, edges).unwrap();
            let mut profiles: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..3 {
                profiles = profiles
                    .into_iter()
                    .flat_map(|p| {
                        (1..=n).map(move |l| {
                            let mut q = p.clone();
                            q.push(l);
                            q
                        })
                    })
                    .collect();
                for ell in &profiles {
                    let by_condition = check_condition_25(&g, ell, CAP).unwrap().holds();
                    let by_matroid = check_condition_25_matroid(&g, ell);
                    let by_oracle = spanning_forests_bruteforce(&g, ell);
                    let packed = pack_spanning_forests(&g, ell);
                    assert_eq!(by_condition, by_matroid, "n={n} g={g:?} ell={ell:?}");
                    assert_eq!(by_condition, by_oracle, "n={n} g={g:?} ell={ell:?}");
                    assert_eq!(by_condition, packed.is_ok(), "n={n} g={g:?} ell={ell:?}");
                    if let Ok(p) = packed {
                        let spec = PackingSpec::spanning_components(ell);
                        assert!(
                            verify_regular_packing(&g, &p, &spec).is_empty(),
                            "n={n} g={g:?} ell={ell:?}"
                        );
                    }
                }
            }
        }
    }
}

/// Criterion 2: the matroid partition algorithm matches the brute-force
/// union-rank formula on 500 random graphic/truncated instances.
#[test]
fn criterion_02_matroid_union_rank() {
    let mut rng = rng(0xED_F0);
    for round in 0..500 {
        let g = random_graph(&mut rng, 6, 10);
        let m = g.edge_count();
        let count = rng.gen_range(1..=3);
        let mats: Vec<Box<dyn Matroid>> = (0..count)
            .map(|_| -> Box<dyn Matroid> {
                if rng.gen_bool(0.5) {
                    Box::new(GraphicMatroid::new(&g))
                } else {
                    let limit = rng.gen_range(0..=g.vertex_count());
                    Box::new(Truncated::new(GraphicMatroid::new(&g), limit))
                }
            })
            .collect();
        let refs: Vec<&dyn Matroid> = mats.iter().map(|b| b.as_ref()).collect();
        let targets: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.7)).collect();
        let result = matroid_partition(&refs, &targets).unwrap();
        let expected = sum_rank_bruteforce(&refs, &targets);
        assert_eq!(result.total_assigned(), expected, "round {round}");
        // The dual certificate attains the min formula.
        let cert_value = (targets.len() - result.certificate.len())
            + refs
                .iter()
                .map(|mat| mat.rank(&result.certificate))
                .sum::<usize>();
        assert_eq!(cert_value, expected, "round {round} certificate");
    }
}

/// Criterion 3: the exact-root regular-forest conditions, the constructive
/// packer, and the exhaustive oracle agree on 300 random instances.
#[test]
fn criterion_03_regular_forest_equivalence() {
    let mut rng = rng(0x27_27);
    for round in 0..300 {
        let g = random_graph(&mut rng, 5, 8);
        let n = g.vertex_count();
        let k = rng.gen_range(1..=4);
        let h = rng.gen_range(1..=k);
        let ell: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let by_condition = check_conditions_27(&g, h, &ell, CAP).unwrap().holds();
        let packed = pack_regular_forests(&g, h, &ell);
        let spec = PackingSpec::exact_roots(h, &ell);
        let by_oracle = brute_force_regular_packing(&g, &spec).is_some();
        assert_eq!(by_condition, by_oracle, "round {round} g={g:?} h={h} ell={ell:?}");
        assert_eq!(by_condition, packed.is_ok(), "round {round} g={g:?} h={h} ell={ell:?}");
        if let Ok(p) = packed {
            assert!(
                verify_regular_packing(&g, &p, &spec).is_empty(),
                "round {round} g={g:?} h={h} ell={ell:?}"
            );
        }
    }
}

/// Criterion 4: the bounded-root conditions, the bounded packer, and the
/// exhaustive oracle agree on 200 random instances with random valid bounds.
#[test]
fn criterion_04_bounded_forest_equivalence() {
    let mut rng = rng(0x28_28);
    for round in 0..200 {
        let g = random_graph(&mut rng, 5, 8);
        let spec = random_bounded_spec(&mut rng, g.vertex_count(), 4, 4);
        let by_condition = check_conditions_28(&g, &spec, CAP).unwrap().holds();
        let packed = pack_regular_forests_bounded(&g, &spec);
        let by_oracle = brute_force_regular_packing(&g, &spec).is_some();
        assert_eq!(by_condition, by_oracle, "round {round} g={g:?} spec={spec:?}");
        assert_eq!(by_condition, packed.is_ok(), "round {round} g={g:?} spec={spec:?}");
        if let Ok(p) = packed {
            // verify_regular_packing includes the per-member and total
            // root-count bound checks.
            assert!(
                verify_regular_packing(&g, &p, &spec).is_empty(),
                "round {round} g={g:?} spec={spec:?}"
            );
        }
    }
}

/// Criterion 5: the hypergraph conditions, the trim-and-pack pipeline, and
/// the exhaustive oracle agree on 150 random hypergraph instances, and every
/// accepted trimming step preserves the conditions.
#[test]
fn criterion_05_hyperforest_pipeline() {
    let mut rng = rng(0x33_33);
    for round in 0..150 {
        let hg = random_hypergraph(&mut rng, 5, 5);
        let n = hg.vertex_count();
        let spec = random_bounded_spec(&mut rng, n, 3, 3);
        let by_condition = check_conditions_33(&hg, &spec, CAP).unwrap().holds();
        let by_oracle = brute_force_hyperforest_packing(&hg, &spec).is_some();
        assert_eq!(by_condition, by_oracle, "round {round} hg={hg:?} spec={spec:?}");
        match pack_hyperforests(&hg, &spec, CAP) {
            Ok(p) => {
                assert!(by_condition, "round {round}");
                assert!(
                    verify_hyperforest_packing(&hg, &p, &spec).is_empty(),
                    "round {round} hg={hg:?} spec={spec:?}"
                );
            }
            Err(TrimError::Infeasible(_)) => assert!(!by_condition, "round {round}"),
            Err(err) => panic!("round {round}: {err}"),
        }
        if by_condition {
            let (_, witness) = trim_to_graph(&hg, &spec, CAP).unwrap();
            assert!(witness.replays_on(&hg), "round {round}");
            let mut sets: Vec<Vec<usize>> = hg.hyperedges().to_vec();
            for &(e, v) in &witness.removals {
                let pos = sets[e].binary_search(&v).unwrap();
                sets[e].remove(pos);
                let intermediate = Hypergraph::new(n, sets.clone()).unwrap();
                assert!(
                    check_conditions_33(&intermediate, &spec, CAP).unwrap().holds(),
                    "round {round}: removal ({e},{v}) broke the conditions"
                );
            }
        }
    }
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    // Restricted-growth assignment: vertex v joins an existing block or
    // opens a new one.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let choice = rng.gen_range(0..=blocks.len());
        if choice == blocks.len() {
            blocks.push(vec![v]);
        } else {
            blocks[choice].push(v);
        }
    }
    Partition::new(n, blocks).unwrap()
}

/// Criterion 6: the four partition-lattice properties and the entering-count
/// submodularity inequality on 1000 random pairs, plus the exhaustive capped
/// min inequality.
#[test]
fn criterion_06_lattice_and_submodularity() {
    // Capped-min inequality, exhaustively for values <= 8:
    // a1 + a2 = a1' + a2' and min{a1,a2} >= a2' imply
    // min{l,a1} + min{l,a2} >= min{l,a1'} + min{l,a2'}.
    for a1 in 0..=8usize {
        for a2 in 0..=8usize {
            for a1p in 0..=8usize {
                for a2p in 0..=8usize {
                    if a1 + a2 != a1p + a2p || a1.min(a2) < a2p {
                        continue;
                    }
                    for l in 1..=8usize {
                        assert!(
                            l.min(a1) + l.min(a2) >= l.min(a1p) + l.min(a2p),
                            "a=({a1},{a2}) a'=({a1p},{a2p}) l={l}"
                        );
                    }
                }
            }
        }
    }

    let mut rng = rng(0x06_06);
    let mut failures: Vec<String> = Vec::new();
    for round in 0..1000 {
        let n = rng.gen_range(1..=8);
        let p1 = random_partition(&mut rng, n);
        let p2 = random_partition(&mut rng, n);
        let mj = meet_join(&p1, &p2);
        // Property: every meet block is an intersection of a block of each.
        for x in mj.meet.blocks() {
            let ok = p1.blocks().iter().any(|u1| {
                p2.blocks().iter().any(|u2| {
                    let mut inter: Vec<usize> =
                        u1.iter().copied().filter(|v| u2.contains(v)).collect();
                    inter.sort_unstable();
                    inter == *x
                })
            });
            if !ok {
                failures.push(format!(
                    "round {round}: meet block {x:?} of p1={:?} p2={:?} is not an \
                     intersection of blocks (meet={:?}, join={:?})",
                    p1.blocks(),
                    p2.blocks(),
                    mj.meet.blocks(),
                    mj.join.blocks()
                ));
            }
        }
        // Property: every original block lies inside some join block.
        for x in p1.blocks().iter().chain(p2.blocks()) {
            let ok = mj
                .join
                .blocks()
                .iter()
                .any(|y| x.iter().all(|v| y.contains(v)));
            if !ok {
                failures.push(format!("round {round}: block {x:?} not inside a join block"));
            }
        }
        // Property: |join| + |meet| = |p1| + |p2|.
        if mj.join.len() + mj.meet.len() != p1.len() + p2.len() {
            failures.push(format!(
                "round {round}: size identity fails for p1={:?} p2={:?}",
                p1.blocks(),
                p2.blocks()
            ));
        }
        // Property: |meet| >= max >= min >= |join|.
        let (mx, mn) = (p1.len().max(p2.len()), p1.len().min(p2.len()));
        if !(mj.meet.len() >= mx && mn >= mj.join.len()) {
            failures.push(format!(
                "round {round}: size chain fails for p1={:?} p2={:?}",
                p1.blocks(),
                p2.blocks()
            ));
        }
        // Submodularity of the entering count over a random hypergraph.
        if n >= 2 {
            let hg = random_hypergraph_on(&mut rng, n, 6);
            let all: Vec<usize> = (0..hg.hyperedge_count()).collect();
            let e = |p: &Partition| entering_count_hypergraph(&hg, &all, p.blocks());
            if e(&p1) + e(&p2) < e(&mj.meet) + e(&mj.join) {
                failures.push(format!(
                    "round {round}: submodularity fails for p1={:?} p2={:?} hg={hg:?}",
                    p1.blocks(),
                    p2.blocks()
                ));
            }
        }
    }
    let count = |needle: &str| failures.iter().filter(|f| f.contains(needle)).count();
    assert!(
        failures.is_empty(),
        "{} lattice property failures (meet-intersection: {}, join-cover: {}, \
         size identity: {}, size chain: {}, submodularity: {}); first: {}",
        failures.len(),
        count("meet block"),
        count("join block"),
        count("size identity"),
        count("size chain"),
        count("submodularity"),
        failures[0]
    );
}

fn random_hypergraph_on(rng: &mut ChaCha8Rng, n: usize, m_max: usize) -> Hypergraph {
    let m = rng.gen_range(0..=m_max);
    let hyperedges = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=4.min(n));
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            verts.truncate(size);
            verts
        })
        .collect();
    Hypergraph::new(n, hyperedges).unwrap()
}

/// Criterion 7: the directed subpartition conditions, the bipartite
/// realization pipeline, and the exhaustive packing search agree on 100
/// random dypergraph instances. The pipeline internally cross-asserts the
/// realization equivalence in both directions on every run.
#[test]
fn criterion_07_directed_pipeline() {
    let mut rng = rng(0x23_23);
    for round in 0..100 {
        let d = random_dypergraph(&mut rng, 4, 5);
        let n = d.vertex_count();
        let spec = random_bounded_spec(&mut rng, n, 2, 2);
        let by_condition = check_subpartition_conditions(&d, &spec, DIRECTED_SUBPARTITION_CAP)
            .unwrap()
            .holds();
        let by_oracle = brute_force_bounded_packing(&d, &spec).is_some();
        assert_eq!(by_condition, by_oracle, "round {round} d={d:?} spec={spec:?}");
        match pack_branchings_bounded_desk(&d, &spec) {
            Ok(p) => {
                assert!(by_condition, "round {round}");
                assert!(
                    verify_hyperbranching_packing(&d, &p, &spec).is_empty(),
                    "round {round} d={d:?} spec={spec:?}"
                );
            }
            Err(DirectedError::Infeasible(_)) => assert!(!by_condition, "round {round}"),
            Err(err) => panic!("round {round}: {err}"),
        }
    }
}

/// Criterion 8: the general bounded checkers, instantiated with equal bounds
/// and/or h = k, agree with the dedicated closed-form specializations on 100
/// shared random instances per family.
#[test]
fn criterion_08_specialization_chain() {
    let mut rng = rng(0x08_08);
    let cap = DIRECTED_SUBPARTITION_CAP;
    for round in 0..100 {
        // Directed family on a shared dypergraph.
        let d = random_dypergraph(&mut rng, 5, 6);
        let n = d.vertex_count();
        let k = rng.gen_range(1..=3);
        let h = rng.gen_range(1..=k);
        let l = rng.gen_range(1..=n);
        let ell: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let general = |spec: &PackingSpec| {
            check_subpartition_conditions(&d, spec, cap).unwrap().holds()
        };
        assert_eq!(
            thm8_conditions(&d, k, cap).unwrap(),
            general(&PackingSpec::spanning_components(&vec![1; k])),
            "round {round} thm8 d={d:?} k={k}"
        );
        assert_eq!(
            thm9_conditions(&d, k, l, cap).unwrap(),
            general(&PackingSpec::spanning_components(&vec![l; k])),
            "round {round} thm9 d={d:?} k={k} l={l}"
        );
        assert_eq!(
            thm10_conditions(&d, &ell, cap).unwrap(),
            general(&PackingSpec::spanning_components(&ell)),
            "round {round} thm10 d={d:?} ell={ell:?}"
        );
        assert_eq!(
            thm13_conditions(&d, h, k, l, cap).unwrap(),
            general(&PackingSpec::exact_roots(h, &vec![l; k])),
            "round {round} thm13 d={d:?} h={h} k={k} l={l}"
        );
        assert_eq!(
            thm14_conditions(&d, h, &ell, cap).unwrap(),
            general(&PackingSpec::exact_roots(h, &ell)),
            "round {round} thm14 d={d:?} h={h} ell={ell:?}"
        );
        assert_eq!(
            thm17_conditions(&d, k, l, cap).unwrap(),
            general(&PackingSpec::spanning_components(&vec![l; k])),
            "round {round} thm17 d={d:?} k={k} l={l}"
        );

        // Graph family on a shared graph.
        let g = random_graph(&mut rng, 5, 8);
        let gn = g.vertex_count();
        let gell: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=gn)).collect();
        let as_hyper = Hypergraph::from_graph(&g);
        let spanning = PackingSpec::spanning_components(&gell);
        let exact = PackingSpec::exact_roots(h, &gell);
        assert_eq!(
            check_condition_25(&g, &gell, CAP).unwrap().holds(),
            check_conditions_33(&as_hyper, &spanning, CAP).unwrap().holds(),
            "round {round} thm25 g={g:?} ell={gell:?}"
        );
        assert_eq!(
            check_conditions_27(&g, h, &gell, CAP).unwrap().holds(),
            check_conditions_28(&g, &exact, CAP).unwrap().holds(),
            "round {round} thm27 vs thm28 g={g:?} h={h} ell={gell:?}"
        );
        assert_eq!(
            check_conditions_27(&g, h, &gell, CAP).unwrap().holds(),
            check_conditions_33(&as_hyper, &exact, CAP).unwrap().holds(),
            "round {round} thm27 vs thm33 g={g:?} h={h} ell={gell:?}"
        );

        // Hypergraph family on a shared hypergraph.
        let hg = random_hypergraph(&mut rng, 5, 5);
        let hn = hg.vertex_count();
        let hl = rng.gen_range(1..=hn);
        let hell: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=hn)).collect();
        let general_h = |spec: &PackingSpec| {
            check_conditions_33(&hg, spec, CAP).unwrap().holds()
        };
        assert_eq!(
            thm29_conditions(&hg, k, CAP).unwrap(),
            general_h(&PackingSpec::spanning_components(&vec![1; k])),
            "round {round} thm29 hg={hg:?} k={k}"
        );
        assert_eq!(
            thm30_conditions(&hg, k, hl, CAP).unwrap(),
            general_h(&PackingSpec::spanning_components(&vec![hl; k])),
            "round {round} thm30 hg={hg:?} k={k} l={hl}"
        );
        assert_eq!(
            thm31_conditions(&hg, &hell, CAP).unwrap(),
            general_h(&PackingSpec::spanning_components(&hell)),
            "round {round} thm31 hg={hg:?} ell={hell:?}"
        );
    }
}

fn is_branching(n: usize, arcs: &[(usize, usize)], roots: &[usize]) -> bool {
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for &(t, h) in arcs {
        if parent[h].is_some() || roots.contains(&h) {
            return false;
        }
        parent[h] = Some(t);
    }
    // Every non-root head must reach a root without revisiting a vertex.
    for &(_, h) in arcs {
        let mut cur = h;
        let mut steps = 0;
        while let Some(p) = parent[cur] {
            cur = p;
            steps += 1;
            if steps > n {
                return false;
            }
        }
        if !roots.contains(&cur) {
            return false;
        }
    }
    true
}

/// Exhaustive search for a 1-regular packing of two branchings with exactly
/// `ell` arcs each in the reduced digraph.
fn reduced_instance_positive(r: &packing_core::directed::PartitionReduction) -> bool {
    if r.odd_total {
        return false;
    }
    let arcs = r.digraph.arcs();
    let m = arcs.len();
    let n = r.digraph.vertex_count();
    'outer: for mask in 0usize..1 << m {
        if mask.count_ones() as usize != r.ell {
            continue;
        }
        let mut support = [vec![false; n], vec![false; n]];
        let mut pairs: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
        for (i, &(t, h)) in arcs.iter().enumerate() {
            let side = (mask >> i) & 1;
            support[side][t] = true;
            support[side][h] = true;
            pairs[side].push((t, h));
        }
        if (0..n).any(|v| support[0][v] && support[1][v]) {
            continue;
        }
        for side in 0..2 {
            let roots: Vec<usize> = (0..n)
                .filter(|&v| support[side][v] && pairs[side].iter().all(|&(_, h)| h != v))
                .collect();
            if !is_branching(n, &pairs[side], &roots) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

fn subset_sum_positive(weights: &[usize]) -> bool {
    let total: usize = weights.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    (0usize..1 << weights.len()).any(|mask| {
        let s: usize = weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &w)| w)
            .sum();
        s == total / 2
    })
}

/// Criterion 9: the PARTITION reduction preserves positivity for every
/// weight multiset with total at most 12, both sides brute-forced.
#[test]
fn criterion_09_np_reduction() {
    // All nonincreasing positive weight sequences with sum <= 12.
    let mut stack: Vec<Vec<usize>> = (1..=12usize).map(|w| vec![w]).collect();
    let mut checked = 0usize;
    while let Some(weights) = stack.pop() {
        let total: usize = weights.iter().sum();
        let last = *weights.last().unwrap();
        for w in 1..=last.min(12 - total) {
            let mut next = weights.clone();
            next.push(w);
            stack.push(next);
        }
        let r = reduce_partition_instance(&weights);
        assert_eq!(r.h, 1);
        assert_eq!(r.k, 2);
        assert_eq!(
            reduced_instance_positive(&r),
            subset_sum_positive(&weights),
            "weights {weights:?}"
        );
        checked += 1;
    }
    assert!(checked > 200, "expected all multisets with total <= 12");
}

/// Criterion 10: rerunning `pack` on the same inputs emits byte-identical
/// report files.
#[test]
fn criterion_10_deterministic_reports() {
    let instances = [
        (
            "graph.json",
            r#"{"type":"graph","vertices":["a","b","c","d"],
                "edges":[["a","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","d"]],
                "spec":{"h":2,"k":2,"lower":[2,1,1],"upper":[2,1,1]}}"#,
        ),
        (
            "hyper.json",
            r#"{"type":"hypergraph","vertices":["a","b","c"],
                "edges":[["a","b","c"],["a","b"]],
                "spec":{"h":1,"k":1,"lower":[1,1],"upper":[1,1]}}"#,
        ),
        (
            "dyper.json",
            r#"{"type":"dypergraph","vertices":["a","b","c"],
                "arcs":[{"tails":["a"],"head":"b"},{"tails":["a","b"],"head":"c"}],
                "spec":{"h":1,"k":1,"lower":[1,1],"upper":[1,1]}}"#,
        ),
        (
            "infeasible.json",
            r#"{"type":"graph","vertices":["a","b"],"edges":[],
                "spec":{"h":1,"k":1,"lower":[1,1],"upper":[1,1]}}"#,
        ),
    ];
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in instances {
        let file = dir.path().join(name);
        std::fs::write(&file, body).unwrap();
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{name}.{run}.json"));
            assert_cmd::Command::cargo_bin("packing")
                .unwrap()
                .args(["pack", file.to_str().unwrap()])
                .args(["--json-out", out.to_str().unwrap()])
                .args(["--seed", "42"])
                .assert()
                .code(predicates::iter::in_iter([0i32, 1]));
            outputs.push(std::fs::read(&out).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "report for {name} differs between reruns");
    }
}
