//! JSON file formats: instance files with named vertices, and report files
//! with witnesses, packings, named checks and deterministic stats.

use std::collections::HashMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use packing_core::directed::{HyperbranchingMember, HyperbranchingPacking};
use packing_core::ground::{
    HyperforestMember, RootedForest, RootedForestPacking, RootedHyperforestPacking,
};
use packing_core::theorems::{Host, Violation};
use packing_core::{Digraph, Dypergraph, Graph, Hyperarc, Hypergraph, PackingSpec};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArcJson {
    pub tails: Vec<String>,
    pub head: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecJson {
    pub h: usize,
    pub k: usize,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

/// A problem instance as stored on disk: vertex names, elements over those
/// names, and the root-count spec.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcJson>>,
    pub spec: SpecJson,
    /// Extra payload emitted by `reduce-partition`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_hkl: Option<BranchHklJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BranchHklJson {
    pub h: usize,
    pub k: usize,
    pub ell: usize,
    pub odd_total: bool,
}

/// One packing member on disk; which element field is present depends on
/// the instance type.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct MemberJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperedges: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperarcs: Option<Vec<usize>>,
    pub roots: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PackingJson {
    pub members: Vec<MemberJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub required: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub available: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StatsJson {
    pub vertices: usize,
    pub elements: usize,
    pub cap: usize,
    pub seed: u64,
}

/// A command's machine-readable result.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub feasible: bool,
    pub witness: Option<WitnessJson>,
    pub packing: Option<PackingJson>,
    pub checks: Vec<CheckJson>,
    pub stats: StatsJson,
}

/// A parsed instance: the host structure with its name table and spec.
pub struct ParsedInstance {
    pub names: Vec<String>,
    pub host: HostOwned,
    pub spec: PackingSpec,
}

pub enum HostOwned {
    Graph(Graph),
    Hypergraph(Hypergraph),
    Digraph(Digraph),
    Dypergraph(Dypergraph),
}

impl HostOwned {
    pub fn as_host(&self) -> Host<'_> {
        match self {
            HostOwned::Graph(g) => Host::Graph(g),
            HostOwned::Hypergraph(hg) => Host::Hypergraph(hg),
            HostOwned::Digraph(d) => Host::Digraph(d),
            HostOwned::Dypergraph(d) => Host::Dypergraph(d),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            HostOwned::Graph(g) => g.vertex_count(),
            HostOwned::Hypergraph(hg) => hg.vertex_count(),
            HostOwned::Digraph(d) => d.vertex_count(),
            HostOwned::Dypergraph(d) => d.vertex_count(),
        }
    }

    pub fn element_count(&self) -> usize {
        match self {
            HostOwned::Graph(g) => g.edge_count(),
            HostOwned::Hypergraph(hg) => hg.hyperedge_count(),
            HostOwned::Digraph(d) => d.arcs().len(),
            HostOwned::Dypergraph(d) => d.hyperarcs().len(),
        }
    }
}

pub fn parse_instance(file: &InstanceFile) -> Result<ParsedInstance> {
    let names = file.vertices.clone();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            bail!("duplicate vertex name {name:?}");
        }
    }
    let resolve = |name: &str| -> Result<usize> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| anyhow!("undeclared vertex name {name:?}"))
    };
    let n = names.len();
    let edge_lists = || -> Result<Vec<Vec<usize>>> {
        file.edges
            .as_ref()
            .ok_or_else(|| anyhow!("instance type needs an \"edges\" field"))?
            .iter()
            .map(|e| e.iter().map(|v| resolve(v)).collect())
            .collect()
    };
    let arc_lists = || -> Result<Vec<Hyperarc>> {
        file.arcs
            .as_ref()
            .ok_or_else(|| anyhow!("instance type needs an \"arcs\" field"))?
            .iter()
            .map(|a| {
                Ok(Hyperarc {
                    tails: a
                        .tails
                        .iter()
                        .map(|v| resolve(v))
                        .collect::<Result<Vec<_>>>()?,
                    head: resolve(&a.head)?,
                })
            })
            .collect()
    };
    let host = match file.kind.as_str() {
        "graph" => {
            let pairs = edge_lists()?
                .into_iter()
                .map(|e| {
                    if e.len() != 2 {
                        bail!("graph edges must have exactly two endpoints");
                    }
                    Ok((e[0], e[1]))
                })
                .collect::<Result<Vec<_>>>()?;
            HostOwned::Graph(Graph::new(n, pairs).map_err(|e| anyhow!("{e:?}"))?)
        }
        "hypergraph" => HostOwned::Hypergraph(
            Hypergraph::new(n, edge_lists()?).map_err(|e| anyhow!("{e:?}"))?,
        ),
        "digraph" => {
            let pairs = arc_lists()?
                .into_iter()
                .map(|a| {
                    if a.tails.len() != 1 {
                        bail!("digraph arcs must have exactly one tail");
                    }
                    Ok((a.tails[0], a.head))
                })
                .collect::<Result<Vec<_>>>()?;
            HostOwned::Digraph(Digraph::new(n, pairs).map_err(|e| anyhow!("{e:?}"))?)
        }
        "dypergraph" => HostOwned::Dypergraph(
            Dypergraph::new(n, arc_lists()?).map_err(|e| anyhow!("{e:?}"))?,
        ),
        other => bail!("unknown instance type {other:?}"),
    };
    let spec = &file.spec;
    if spec.lower.len() != spec.k + 1 || spec.upper.len() != spec.k + 1 {
        bail!("spec bound arrays must have length k+1");
    }
    let spec = PackingSpec::new(spec.h, spec.k, spec.lower.clone(), spec.upper.clone());
    Ok(ParsedInstance { names, host, spec })
}

pub fn load_instance(path: &std::path::Path) -> Result<ParsedInstance> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: InstanceFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    parse_instance(&file)
}

fn to_names(names: &[String], vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| names[v].clone()).collect()
}

fn from_names(names: &[String], vs: &[String]) -> Result<Vec<usize>> {
    vs.iter()
        .map(|v| {
            names
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| anyhow!("undeclared vertex name {v:?}"))
        })
        .collect()
}

pub fn violation_to_witness(names: &[String], v: &Violation) -> WitnessJson {
    match v {
        Violation::Spec(s) => WitnessJson {
            kind: "spec".into(),
            blocks: None,
            condition: Some(format!("{s:?}")),
            required: None,
            available: None,
        },
        Violation::TotalTooLarge => WitnessJson {
            kind: "total".into(),
            blocks: None,
            condition: Some("h|V| >= ell(0)".into()),
            required: None,
            available: None,
        },
        Violation::Counts {
            blocks,
            full_partition,
            condition,
            required,
            available,
        } => WitnessJson {
            kind: if *full_partition {
                "partition".into()
            } else {
                "subpartition".into()
            },
            blocks: Some(blocks.iter().map(|b| to_names(names, b)).collect()),
            condition: Some((*condition).into()),
            required: Some(*required),
            available: Some(*available),
        },
    }
}

pub fn forest_packing_to_json(names: &[String], p: &RootedForestPacking) -> PackingJson {
    PackingJson {
        members: p
            .members
            .iter()
            .map(|m| MemberJson {
                edges: Some(m.edges.clone()),
                roots: to_names(names, &m.roots),
                support: Some(to_names(names, &m.support)),
                ..Default::default()
            })
            .collect(),
    }
}

pub fn hyperforest_packing_to_json(
    names: &[String],
    p: &RootedHyperforestPacking,
) -> PackingJson {
    PackingJson {
        members: p
            .members
            .iter()
            .map(|m| MemberJson {
                hyperedges: Some(m.hyperedges.clone()),
                roots: to_names(names, &m.roots),
                witness: Some(
                    m.witness
                        .iter()
                        .map(|&(t, h)| (names[t].clone(), names[h].clone()))
                        .collect(),
                ),
                ..Default::default()
            })
            .collect(),
    }
}

pub fn branching_packing_to_json(names: &[String], p: &HyperbranchingPacking) -> PackingJson {
    PackingJson {
        members: p
            .members
            .iter()
            .map(|m| MemberJson {
                hyperarcs: Some(m.hyperarcs.clone()),
                roots: to_names(names, &m.roots),
                witness: Some(
                    m.witness
                        .iter()
                        .map(|&(t, h)| (names[t].clone(), names[h].clone()))
                        .collect(),
                ),
                ..Default::default()
            })
            .collect(),
    }
}

pub fn forest_packing_from_json(
    names: &[String],
    p: &PackingJson,
) -> Result<RootedForestPacking> {
    let members = p
        .members
        .iter()
        .map(|m| {
            Ok(RootedForest {
                support: from_names(
                    names,
                    m.support
                        .as_ref()
                        .ok_or_else(|| anyhow!("forest member needs a support"))?,
                )?,
                edges: m
                    .edges
                    .clone()
                    .ok_or_else(|| anyhow!("forest member needs edges"))?,
                roots: from_names(names, &m.roots)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootedForestPacking { members })
}

pub fn hyperforest_packing_from_json(
    names: &[String],
    p: &PackingJson,
) -> Result<RootedHyperforestPacking> {
    let members = p
        .members
        .iter()
        .map(|m| {
            Ok(HyperforestMember {
                hyperedges: m
                    .hyperedges
                    .clone()
                    .ok_or_else(|| anyhow!("hyperforest member needs hyperedges"))?,
                roots: from_names(names, &m.roots)?,
                witness: witness_pairs(names, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootedHyperforestPacking { members })
}

pub fn branching_packing_from_json(
    names: &[String],
    p: &PackingJson,
) -> Result<HyperbranchingPacking> {
    let members = p
        .members
        .iter()
        .map(|m| {
            Ok(HyperbranchingMember {
                hyperarcs: m
                    .hyperarcs
                    .clone()
                    .ok_or_else(|| anyhow!("branching member needs hyperarcs"))?,
                roots: from_names(names, &m.roots)?,
                witness: witness_pairs(names, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HyperbranchingPacking { members })
}

fn witness_pairs(names: &[String], m: &MemberJson) -> Result<Vec<(usize, usize)>> {
    m.witness
        .as_ref()
        .ok_or_else(|| anyhow!("member needs a witness"))?
        .iter()
        .map(|(t, h)| {
            Ok((
                from_names(names, std::slice::from_ref(t))?[0],
                from_names(names, std::slice::from_ref(h))?[0],
            ))
        })
        .collect()
}
