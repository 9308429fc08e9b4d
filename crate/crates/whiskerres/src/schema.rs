//! Versioned JSON schemas for every artifact the CLI reads or writes.
//!
//! All structs carry `"schema": "whiskerres/1"`; integers stay integers and
//! nothing ever goes through floating point. Serialization uses sorted
//! containers so identical inputs produce byte-identical artifacts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{
    cameron_walker_cm, clique_whisker, cm_chordal_decompose, corona_clique,
    multi_clique_whisker, vwc_expand, ConstructError, VwcStructure, WhiskeredGraph,
};
use crate::corpus::Instance;
use crate::graph::{Graph, GraphError};
use crate::resolution::{BasisSymbol, DiffEntry, Expo, FreeComplex};
use crate::SCHEMA_TAG;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("unsupported schema tag `{0}` (expected {SCHEMA_TAG})")]
    BadTag(String),
    #[error("malformed artifact: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn default_tag() -> String {
    SCHEMA_TAG.to_string()
}

fn check_tag(tag: &str) -> Result<(), SchemaError> {
    if tag == SCHEMA_TAG {
        Ok(())
    } else {
        Err(SchemaError::BadTag(tag.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            schema: default_tag(),
            vertices: g.labels().to_vec(),
            edges: g.edge_labels(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, SchemaError> {
        check_tag(&self.schema)?;
        Ok(Graph::new(&self.vertices, &self.edges)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub blocks: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BipartiteJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub x_part: Vec<String>,
    pub y_part: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// A family instance: the inputs of a construction, not its output, so the
/// file stays small and reconstruction is deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub family: String,
    #[serde(default)]
    pub name: String,
    pub base: GraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionJson>,
    pub mult: Vec<usize>,
}

impl InstanceJson {
    pub fn from_instance(inst: &Instance) -> InstanceJson {
        match inst {
            Instance::Cw { name, wg } | Instance::Multi { name, wg } => InstanceJson {
                schema: default_tag(),
                family: inst.family().into(),
                name: name.clone(),
                base: GraphJson::from_graph(&wg.base),
                partition: Some(PartitionJson {
                    schema: default_tag(),
                    blocks: wg.partition.block_labels(&wg.base),
                }),
                mult: wg.multiplicities(),
            },
            Instance::Vwc { name, vwc } => InstanceJson {
                schema: default_tag(),
                family: "vwc".into(),
                name: name.clone(),
                base: GraphJson::from_graph(&vwc.base),
                partition: None,
                mult: vwc.mult.clone(),
            },
        }
    }

    pub fn to_instance(&self) -> Result<Instance, SchemaError> {
        check_tag(&self.schema)?;
        let base = self.base.to_graph()?;
        let name = if self.name.is_empty() { "instance".to_string() } else { self.name.clone() };
        match self.family.as_str() {
            "cw" | "multi" => {
                let blocks = self
                    .partition
                    .as_ref()
                    .ok_or_else(|| SchemaError::Malformed("partition required".into()))?;
                let pi = base.validate_partition(&blocks.blocks)?;
                let wg = multi_clique_whisker(&base, &pi, &self.mult)?;
                if self.family == "cw" {
                    if self.mult.iter().any(|&n| n != 1) {
                        return Err(SchemaError::Malformed(
                            "family cw requires all multiplicities 1".into(),
                        ));
                    }
                    Ok(Instance::Cw { name, wg })
                } else {
                    Ok(Instance::Multi { name, wg })
                }
            }
            "vwc" => {
                let vwc = vwc_expand(&base, &self.mult)?;
                Ok(Instance::Vwc { name, vwc })
            }
            other => Err(SchemaError::Malformed(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolJson {
    pub cover: Vec<String>,
    pub sigma: Vec<String>,
    pub multidegree: Expo,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DifferentialJson {
    pub level: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: Expo,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResolutionJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub variables: Vec<String>,
    pub levels: Vec<Vec<SymbolJson>>,
    pub differentials: Vec<DifferentialJson>,
}

impl ResolutionJson {
    pub fn from_complex(c: &FreeComplex) -> ResolutionJson {
        let var = |i: &usize| c.variables[*i].clone();
        ResolutionJson {
            schema: default_tag(),
            variables: c.variables.clone(),
            levels: c
                .levels
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|s| SymbolJson {
                            cover: s.cover.iter().map(var).collect(),
                            sigma: s.sigma.iter().map(var).collect(),
                            multidegree: s.multidegree.clone(),
                        })
                        .collect()
                })
                .collect(),
            differentials: c
                .differentials
                .iter()
                .enumerate()
                .map(|(k, entries)| DifferentialJson {
                    level: k + 1,
                    entries: entries
                        .iter()
                        .map(|e| EntryJson {
                            row: e.row,
                            col: e.col,
                            sign: e.sign,
                            monomial: e.monomial.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<FreeComplex, SchemaError> {
        check_tag(&self.schema)?;
        let var_index = |l: &String| -> Result<usize, SchemaError> {
            self.variables
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| SchemaError::Malformed(format!("unknown variable `{l}`")))
        };
        let mut levels = Vec::with_capacity(self.levels.len());
        for level in (0..self.levels.len()).zip(&self.levels) {
            let (li, symbols) = level;
            let mut out = Vec::with_capacity(symbols.len());
            for s in symbols {
                if s.multidegree.len() != self.variables.len() {
                    return Err(SchemaError::Malformed("multidegree length mismatch".into()));
                }
                out.push(BasisSymbol {
                    level: li,
                    cover: s.cover.iter().map(&var_index).collect::<Result<_, _>>()?,
                    sigma: s.sigma.iter().map(&var_index).collect::<Result<_, _>>()?,
                    multidegree: s.multidegree.clone(),
                });
            }
            levels.push(out);
        }
        let mut differentials = vec![Vec::new(); self.levels.len().saturating_sub(1)];
        for d in &self.differentials {
            if d.level == 0 || d.level >= self.levels.len() {
                return Err(SchemaError::Malformed(format!(
                    "differential level {} out of range",
                    d.level
                )));
            }
            let entries: &mut Vec<DiffEntry> = &mut differentials[d.level - 1];
            for e in &d.entries {
                if e.row >= self.levels[d.level - 1].len()
                    || e.col >= self.levels[d.level].len()
                    || e.monomial.len() != self.variables.len()
                    || (e.sign != 1 && e.sign != -1)
                {
                    return Err(SchemaError::Malformed("differential entry out of range".into()));
                }
                entries.push(DiffEntry {
                    row: e.row,
                    col: e.col,
                    sign: e.sign,
                    monomial: e.monomial.clone(),
                });
            }
        }
        Ok(FreeComplex { variables: self.variables.clone(), levels, differentials })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub variables: Vec<String>,
    pub generators: Vec<Expo>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoversJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub covers: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub module: String,
    pub convention: String,
    pub entries: Vec<BettiEntryJson>,
}

impl BettiJson {
    pub fn from_table(t: &crate::hochster::BettiTable) -> BettiJson {
        BettiJson {
            schema: default_tag(),
            module: t.module.clone(),
            convention: match t.convention {
                crate::hochster::TableConvention::Ideal => "ideal".into(),
                crate::hochster::TableConvention::Quotient => "quotient".into(),
            },
            entries: t
                .entries()
                .map(|(i, j, beta)| BettiEntryJson { i, j, beta })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(default = "default_tag")]
    pub schema: String,
    pub basis: String,
    pub coeffs: std::collections::BTreeMap<usize, i64>,
}

impl SeriesJson {
    pub fn from_series(s: &crate::hochster::PoleSeries) -> SeriesJson {
        SeriesJson {
            schema: default_tag(),
            basis: "(t-1)^-k".into(),
            coeffs: s.coeffs().clone(),
        }
    }
}

/// Constructs the whiskered graph named by a CLI `construct` subcommand.
pub enum ConstructRequest<'a> {
    CliqueWhisker { graph: &'a GraphJson, partition: &'a PartitionJson },
    Multi { graph: &'a GraphJson, partition: &'a PartitionJson, mult: &'a [usize] },
    Corona { graph: &'a GraphJson, mult: &'a [usize] },
    CameronWalker { bipartite: &'a BipartiteJson },
    ChordalDecompose { graph: &'a GraphJson },
}

impl ConstructRequest<'_> {
    pub fn build(&self) -> Result<WhiskeredGraph, SchemaError> {
        match self {
            ConstructRequest::CliqueWhisker { graph, partition } => {
                let g = graph.to_graph()?;
                let pi = g.validate_partition(&partition.blocks)?;
                Ok(clique_whisker(&g, &pi))
            }
            ConstructRequest::Multi { graph, partition, mult } => {
                let g = graph.to_graph()?;
                let pi = g.validate_partition(&partition.blocks)?;
                Ok(multi_clique_whisker(&g, &pi, mult)?)
            }
            ConstructRequest::Corona { graph, mult } => {
                let g = graph.to_graph()?;
                Ok(corona_clique(&g, mult)?)
            }
            ConstructRequest::CameronWalker { bipartite } => {
                check_tag(&bipartite.schema)?;
                Ok(cameron_walker_cm(&bipartite.x_part, &bipartite.y_part, &bipartite.edges)?)
            }
            ConstructRequest::ChordalDecompose { graph } => {
                let g = graph.to_graph()?;
                Ok(cm_chordal_decompose(&g)?)
            }
        }
    }
}

/// Builds an expanded very well-covered structure from JSON inputs.
pub fn vwc_from_json(graph: &GraphJson, mult: &[usize]) -> Result<VwcStructure, SchemaError> {
    let g = graph.to_graph()?;
    Ok(vwc_expand(&g, mult)?)
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable artifact");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::resolution::build_whisker_resolution;

    #[test]
    fn graph_round_trip() {
        let g = fixtures::k4_minus_edge();
        let json = GraphJson::from_graph(&g);
        let text = to_pretty_json(&json);
        let parsed: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_graph().unwrap(), g);
    }

    #[test]
    fn rejects_wrong_tag() {
        let bad = GraphJson {
            schema: "whiskerres/999".into(),
            vertices: vec!["a".into()],
            edges: vec![],
        };
        assert!(matches!(bad.to_graph(), Err(SchemaError::BadTag(_))));
    }

    #[test]
    fn instance_round_trip() {
        let (g, pi) = crate::corpus::running_example();
        let inst = Instance::Cw { name: "ex".into(), wg: clique_whisker(&g, &pi) };
        let json = InstanceJson::from_instance(&inst);
        let text = to_pretty_json(&json);
        let parsed: InstanceJson = serde_json::from_str(&text).unwrap();
        let back = parsed.to_instance().unwrap();
        assert_eq!(back.family(), "cw");
        assert_eq!(back.size(), 6);
    }

    #[test]
    fn resolution_round_trip_and_determinism() {
        let (g, pi) = crate::corpus::running_example();
        let wg = clique_whisker(&g, &pi);
        let complex = build_whisker_resolution(&wg).unwrap();
        let json = ResolutionJson::from_complex(&complex);
        let a = to_pretty_json(&json);
        let parsed: ResolutionJson = serde_json::from_str(&a).unwrap();
        let complex2 = parsed.to_complex().unwrap();
        assert_eq!(complex, complex2);
        let b = to_pretty_json(&ResolutionJson::from_complex(&complex2));
        assert_eq!(a, b);
    }

    #[test]
    fn series_json_keys_are_sorted() {
        let mut s = crate::hochster::PoleSeries::zero();
        s.add(2, 5);
        s.add(0, 1);
        let text = to_pretty_json(&SeriesJson::from_series(&s));
        let zero_pos = text.find("\"0\"").unwrap();
        let two_pos = text.find("\"2\"").unwrap();
        assert!(zero_pos < two_pos);
    }
}
