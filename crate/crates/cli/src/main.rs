//! Command-line front end: instance parsing, feasibility checks, packing
//! construction, verification, oracle comparisons, and the PARTITION
//! reduction generator.
//!
//! Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 parse or usage
//! error, 3 enumeration cap exceeded.

mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use packing_core::directed::{
    brute_force_bounded_packing, check_subpartition_conditions, pack_branchings_bounded_desk,
    reduce_partition_instance, verify_hyperbranching_packing, DirectedError,
    DIRECTED_SUBPARTITION_CAP,
};
use packing_core::forest_packing::{
    brute_force_regular_packing, check_conditions_28, pack_regular_forests_bounded,
    verify_regular_packing,
};
use packing_core::hyper_packing::{
    brute_force_hyperforest_packing, check_conditions_33, pack_hyperforests,
    verify_hyperforest_packing, TrimError,
};
use packing_core::theorems::{check_theorem, TheoremError, TheoremId, TheoremOutcome};
use packing_core::Dypergraph;

use files::{
    branching_packing_from_json, branching_packing_to_json, forest_packing_from_json,
    forest_packing_to_json, hyperforest_packing_from_json, hyperforest_packing_to_json,
    load_instance, violation_to_witness, ArcJson, BranchHklJson, CheckJson, HostOwned,
    InstanceFile, PackingJson, ParsedInstance, ReportFile, SpecJson, StatsJson, WitnessJson,
};

#[derive(Parser)]
#[command(
    name = "packing",
    about = "Feasibility checks and constructive packings of rooted forests, \
             hyperforests, branchings and hyperbranchings with root-count bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Enumeration cap: partitions are enumerated only for at most this
    /// many vertices.
    #[arg(long = "cap-bell", default_value_t = 12)]
    cap_bell: usize,
    /// Seed recorded in reports; all algorithms are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the JSON report to this path.
    #[arg(long = "json-out")]
    json_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a theorem's feasibility condition on an instance.
    Check {
        file: PathBuf,
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Construct a packing (and verify it before emitting).
    Pack {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Verify a packing file against an instance.
    Verify {
        file: PathBuf,
        #[arg(long)]
        packing: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the condition checker, the constructive packer, and the
    /// brute-force oracle on one instance.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit the branching-packing instance encoding a PARTITION instance.
    ReducePartition {
        weights: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

const EXIT_FEASIBLE: u8 = 0;
const EXIT_INFEASIBLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check {
            file,
            theorem,
            common,
        } => cmd_check(&file, &theorem, &common),
        Command::Pack { file, common } => cmd_pack(&file, &common),
        Command::Verify {
            file,
            packing,
            common,
        } => cmd_verify(&file, &packing, &common),
        Command::Oracle { file, common } => cmd_oracle(&file, &common),
        Command::ReducePartition { weights, common } => cmd_reduce(&weights, &common),
    }
}

fn stats(inst: &ParsedInstance, common: &CommonArgs) -> StatsJson {
    StatsJson {
        vertices: inst.host.vertex_count(),
        elements: inst.host.element_count(),
        cap: common.cap_bell,
        seed: common.seed,
    }
}

fn emit(report: &ReportFile, common: &CommonArgs) -> Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    println!("{text}");
    if let Some(path) = &common.json_out {
        std::fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_check(file: &PathBuf, theorem: &str, common: &CommonArgs) -> Result<u8> {
    let inst = load_instance(file)?;
    let Some(id) = TheoremId::parse(theorem) else {
        return Err(anyhow!("unknown theorem id {theorem:?}"));
    };
    let outcome = match check_theorem(id, &inst.host.as_host(), &inst.spec, common.cap_bell) {
        Ok(outcome) => outcome,
        Err(TheoremError::CapExceeded(c)) => {
            eprintln!("error: {c}");
            return Ok(EXIT_CAP);
        }
        Err(err) => return Err(anyhow!("{err}")),
    };
    let (feasible, witness) = match &outcome {
        TheoremOutcome::Holds => (true, None),
        TheoremOutcome::Violated(v) => (false, Some(violation_to_witness(&inst.names, v))),
    };
    let report = ReportFile {
        feasible,
        witness,
        packing: None,
        checks: vec![CheckJson {
            name: format!("{id} conditions"),
            pass: feasible,
        }],
        stats: stats(&inst, common),
    };
    emit(&report, common)?;
    Ok(if feasible { EXIT_FEASIBLE } else { EXIT_INFEASIBLE })
}

fn cmd_pack(file: &PathBuf, common: &CommonArgs) -> Result<u8> {
    let inst = load_instance(file)?;
    let names = &inst.names;
    let (feasible, witness, packing, verified): (bool, Option<WitnessJson>, Option<PackingJson>, bool) =
        match &inst.host {
            HostOwned::Graph(g) => match pack_regular_forests_bounded(g, &inst.spec) {
                Ok(p) => {
                    let problems = verify_regular_packing(g, &p, &inst.spec);
                    assert!(problems.is_empty(), "constructed packing failed: {problems:?}");
                    (true, None, Some(forest_packing_to_json(names, &p)), true)
                }
                Err(v) => {
                    let v = packing_core::theorems::Violation::from(v);
                    (false, Some(violation_to_witness(names, &v)), None, false)
                }
            },
            HostOwned::Hypergraph(hg) => {
                match pack_hyperforests(hg, &inst.spec, common.cap_bell) {
                    Ok(p) => {
                        let problems = verify_hyperforest_packing(hg, &p, &inst.spec);
                        assert!(problems.is_empty(), "constructed packing failed: {problems:?}");
                        (true, None, Some(hyperforest_packing_to_json(names, &p)), true)
                    }
                    Err(TrimError::Infeasible(v)) => {
                        let v = packing_core::theorems::Violation::from(v);
                        (false, Some(violation_to_witness(names, &v)), None, false)
                    }
                    Err(TrimError::CapExceeded(c)) => {
                        eprintln!("error: {c}");
                        return Ok(EXIT_CAP);
                    }
                    Err(err @ TrimError::InternalContradiction { .. }) => {
                        return Err(anyhow!("{err}"));
                    }
                }
            }
            HostOwned::Digraph(_) | HostOwned::Dypergraph(_) => {
                let d = as_dypergraph(&inst.host);
                match pack_branchings_bounded_desk(&d, &inst.spec) {
                    Ok(p) => {
                        let problems = verify_hyperbranching_packing(&d, &p, &inst.spec);
                        assert!(problems.is_empty(), "constructed packing failed: {problems:?}");
                        (true, None, Some(branching_packing_to_json(names, &p)), true)
                    }
                    Err(DirectedError::Infeasible(v)) => {
                        let v = packing_core::theorems::Violation::from(v);
                        (false, Some(violation_to_witness(names, &v)), None, false)
                    }
                    Err(DirectedError::CapExceeded(c)) => {
                        eprintln!("error: {c}");
                        return Ok(EXIT_CAP);
                    }
                }
            }
        };
    let report = ReportFile {
        feasible,
        witness,
        packing,
        checks: vec![CheckJson {
            name: "packing verified before emit".into(),
            pass: verified,
        }],
        stats: stats(&inst, common),
    };
    emit(&report, common)?;
    Ok(if feasible { EXIT_FEASIBLE } else { EXIT_INFEASIBLE })
}

fn as_dypergraph(host: &HostOwned) -> Dypergraph {
    match host {
        HostOwned::Digraph(d) => Dypergraph::from_digraph(d),
        HostOwned::Dypergraph(d) => d.clone(),
        _ => unreachable!("directed hosts only"),
    }
}

fn cmd_verify(file: &PathBuf, packing_path: &PathBuf, common: &CommonArgs) -> Result<u8> {
    let inst = load_instance(file)?;
    let text = std::fs::read_to_string(packing_path)
        .with_context(|| format!("reading {}", packing_path.display()))?;
    // Accept either a full report (with a packing) or a bare packing file.
    let packing: PackingJson = match serde_json::from_str::<ReportFile>(&text) {
        Ok(report) => report
            .packing
            .ok_or_else(|| anyhow!("report has no packing"))?,
        Err(_) => serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", packing_path.display()))?,
    };
    let problems: Vec<&'static str> = match &inst.host {
        HostOwned::Graph(g) => {
            let p = forest_packing_from_json(&inst.names, &packing)?;
            verify_regular_packing(g, &p, &inst.spec)
        }
        HostOwned::Hypergraph(hg) => {
            let p = hyperforest_packing_from_json(&inst.names, &packing)?;
            verify_hyperforest_packing(hg, &p, &inst.spec)
        }
        HostOwned::Digraph(_) | HostOwned::Dypergraph(_) => {
            let d = as_dypergraph(&inst.host);
            let p = branching_packing_from_json(&inst.names, &packing)?;
            verify_hyperbranching_packing(&d, &p, &inst.spec)
        }
    };
    let valid = problems.is_empty();
    let checks = if valid {
        vec![CheckJson {
            name: "packing valid".into(),
            pass: true,
        }]
    } else {
        problems
            .iter()
            .map(|p| CheckJson {
                name: (*p).into(),
                pass: false,
            })
            .collect()
    };
    let report = ReportFile {
        feasible: valid,
        witness: None,
        packing: Some(packing),
        checks,
        stats: stats(&inst, common),
    };
    emit(&report, common)?;
    Ok(if valid { EXIT_FEASIBLE } else { EXIT_INFEASIBLE })
}

fn cmd_oracle(file: &PathBuf, common: &CommonArgs) -> Result<u8> {
    let inst = load_instance(file)?;
    let n = inst.host.vertex_count();
    let m = inst.host.element_count();
    let verdicts: Vec<(String, bool)> = match &inst.host {
        HostOwned::Graph(g) => {
            if m > 10 || inst.spec.h * n > 20 {
                eprintln!("error: instance too large for the brute-force oracle");
                return Ok(EXIT_CAP);
            }
            let conditions = match check_conditions_28(g, &inst.spec, common.cap_bell) {
                Ok(outcome) => outcome.holds(),
                Err(c) => {
                    eprintln!("error: {c}");
                    return Ok(EXIT_CAP);
                }
            };
            let constructive = match pack_regular_forests_bounded(g, &inst.spec) {
                Ok(p) => {
                    assert!(verify_regular_packing(g, &p, &inst.spec).is_empty());
                    true
                }
                Err(_) => false,
            };
            let brute = brute_force_regular_packing(g, &inst.spec).is_some();
            vec![
                ("conditions".into(), conditions),
                ("constructive".into(), constructive),
                ("brute_force".into(), brute),
            ]
        }
        HostOwned::Hypergraph(hg) => {
            if n > 5 || m > 5 {
                eprintln!("error: instance too large for the brute-force oracle");
                return Ok(EXIT_CAP);
            }
            let conditions = match check_conditions_33(hg, &inst.spec, common.cap_bell) {
                Ok(outcome) => outcome.holds(),
                Err(c) => {
                    eprintln!("error: {c}");
                    return Ok(EXIT_CAP);
                }
            };
            let constructive = match pack_hyperforests(hg, &inst.spec, common.cap_bell) {
                Ok(p) => {
                    assert!(verify_hyperforest_packing(hg, &p, &inst.spec).is_empty());
                    true
                }
                Err(TrimError::Infeasible(_)) => false,
                Err(err) => return Err(anyhow!("{err}")),
            };
            let brute = brute_force_hyperforest_packing(hg, &inst.spec).is_some();
            vec![
                ("conditions".into(), conditions),
                ("constructive".into(), constructive),
                ("brute_force".into(), brute),
            ]
        }
        HostOwned::Digraph(_) | HostOwned::Dypergraph(_) => {
            if n > 4 || m > 5 {
                eprintln!("error: instance too large for the brute-force oracle");
                return Ok(EXIT_CAP);
            }
            let d = as_dypergraph(&inst.host);
            let conditions =
                match check_subpartition_conditions(&d, &inst.spec, DIRECTED_SUBPARTITION_CAP) {
                    Ok(outcome) => outcome.holds(),
                    Err(c) => {
                        eprintln!("error: {c}");
                        return Ok(EXIT_CAP);
                    }
                };
            let constructive = match pack_branchings_bounded_desk(&d, &inst.spec) {
                Ok(p) => {
                    assert!(verify_hyperbranching_packing(&d, &p, &inst.spec).is_empty());
                    true
                }
                Err(DirectedError::Infeasible(_)) => false,
                Err(DirectedError::CapExceeded(c)) => {
                    eprintln!("error: {c}");
                    return Ok(EXIT_CAP);
                }
            };
            let brute = brute_force_bounded_packing(&d, &inst.spec).is_some();
            vec![
                ("conditions".into(), conditions),
                ("constructive".into(), constructive),
                ("brute_force".into(), brute),
            ]
        }
    };
    let agree = verdicts.windows(2).all(|w| w[0].1 == w[1].1);
    let feasible = verdicts[0].1;
    let mut checks: Vec<CheckJson> = verdicts
        .iter()
        .map(|(name, v)| CheckJson {
            name: format!("{name}: {}", if *v { "feasible" } else { "infeasible" }),
            pass: *v == feasible,
        })
        .collect();
    checks.push(CheckJson {
        name: "all methods agree".into(),
        pass: agree,
    });
    let report = ReportFile {
        feasible,
        witness: None,
        packing: None,
        checks,
        stats: stats(&inst, common),
    };
    emit(&report, common)?;
    Ok(if agree { EXIT_FEASIBLE } else { EXIT_INFEASIBLE })
}

fn cmd_reduce(weights: &str, common: &CommonArgs) -> Result<u8> {
    let weights: Vec<usize> = weights
        .split(',')
        .map(|w| {
            w.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("weights must be positive integers"))
        })
        .collect::<Result<Vec<_>>>()?;
    if weights.is_empty() || weights.iter().any(|&w| w == 0) {
        return Err(anyhow!("weights must be positive integers"));
    }
    let r = reduce_partition_instance(&weights);
    let names: Vec<String> = (0..r.digraph.vertex_count())
        .map(|v| format!("v{v}"))
        .collect();
    let file = InstanceFile {
        kind: "digraph".into(),
        vertices: names.clone(),
        edges: None,
        arcs: Some(
            r.digraph
                .arcs()
                .iter()
                .map(|&(t, h)| ArcJson {
                    tails: vec![names[t].clone()],
                    head: names[h].clone(),
                })
                .collect(),
        ),
        // Root-count view of the same question: with h=1 and k=2, member i
        // having ell arcs on its own components is what the branch_hkl
        // payload pins down; the spec field is a placeholder satisfying the
        // file invariants.
        spec: SpecJson {
            h: r.h,
            k: r.k,
            lower: vec![1, 1, 1],
            upper: vec![
                r.digraph.vertex_count(),
                r.digraph.vertex_count(),
                r.digraph.vertex_count(),
            ],
        },
        branch_hkl: Some(BranchHklJson {
            h: r.h,
            k: r.k,
            ell: r.ell,
            odd_total: r.odd_total,
        }),
    };
    let text = serde_json::to_string_pretty(&file)?;
    println!("{text}");
    if let Some(path) = &common.json_out {
        std::fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_FEASIBLE)
}
