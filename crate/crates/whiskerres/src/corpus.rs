//! Seeded instance generator for batch verification.
//!
//! Instances are deterministic functions of the seed. The generator always
//! emits a handful of mandatory fixtures first (the 4-vertex running
//! example, the one-vertex degenerations, the small very well-covered
//! cases) and pads each family with random graphs, random clique
//! partitions, and random multiplicities within the caps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{
    clique_whisker, multi_clique_whisker, vwc_expand, VwcStructure, WhiskeredGraph,
};
use crate::graph::{CliquePartition, Graph};

/// The 4-vertex running example (K4 minus one edge) with its two-block
/// clique partition; a mandatory corpus member.
pub fn running_example() -> (Graph, CliquePartition) {
    let g = Graph::new(
        &["x:1,1", "x:1,2", "x:1,3", "x:2,1"],
        &[
            ("x:1,1", "x:1,2"),
            ("x:1,1", "x:1,3"),
            ("x:1,1", "x:2,1"),
            ("x:1,2", "x:1,3"),
            ("x:1,3", "x:2,1"),
        ],
    )
    .unwrap();
    let pi = g.validate_partition(&[vec!["x:1,1", "x:1,2", "x:1,3"], vec!["x:2,1"]]).unwrap();
    (g, pi)
}

/// Very well-covered base with a cross edge and no x-x edge; the smallest
/// case where the swap-valid syzygy sets differ from the naive ones.
pub fn staircase_base() -> Graph {
    Graph::new(
        &["x:1", "x:2", "y:1", "y:2"],
        &[("x:1", "y:1"), ("x:2", "y:2"), ("x:1", "y:2")],
    )
    .unwrap()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("generation failed: {0}")]
    Generation(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_max_base")]
    pub max_base_vertices: usize,
    #[serde(default = "default_max_total")]
    pub max_total_vertices: usize,
    #[serde(default = "default_mult_cap")]
    pub multiplicity_cap: usize,
    #[serde(default = "default_count")]
    pub count_cw: usize,
    #[serde(default = "default_count")]
    pub count_multi: usize,
    #[serde(default = "default_count_vwc")]
    pub count_vwc: usize,
}

fn default_seed() -> u64 {
    1
}
fn default_max_base() -> usize {
    6
}
fn default_max_total() -> usize {
    12
}
fn default_mult_cap() -> usize {
    3
}
fn default_count() -> usize {
    24
}
fn default_count_vwc() -> usize {
    12
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: default_seed(),
            max_base_vertices: default_max_base(),
            max_total_vertices: default_max_total(),
            multiplicity_cap: default_mult_cap(),
            count_cw: default_count(),
            count_multi: default_count(),
            count_vwc: default_count_vwc(),
        }
    }
}

/// One generated instance, family-tagged.
#[derive(Debug, Clone)]
pub enum Instance {
    Cw { name: String, wg: WhiskeredGraph },
    Multi { name: String, wg: WhiskeredGraph },
    Vwc { name: String, vwc: VwcStructure },
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Cw { name, .. } | Instance::Multi { name, .. } | Instance::Vwc { name, .. } => name,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Instance::Cw { .. } => "cw",
            Instance::Multi { .. } => "multi",
            Instance::Vwc { .. } => "vwc",
        }
    }

    /// Vertex count of the object the checks run on.
    pub fn size(&self) -> usize {
        match self {
            Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => wg.graph.n(),
            Instance::Vwc { vwc, .. } => vwc.expanded.n(),
        }
    }
}

/// Random graph on `n` vertices with edge probability around `p` percent;
/// labels are temporary and rewritten once the partition is chosen.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: u32) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100) < p {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(&labels, &edges).expect("random graph is simple")
}

/// Random clique partition by randomized greedy growth.
fn random_partition(rng: &mut ChaCha8Rng, g: &Graph) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    for i in (1..order.len()).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut assigned = vec![false; g.n()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        if assigned[v] {
            continue;
        }
        let mut block = vec![v];
        assigned[v] = true;
        for &u in &order {
            if assigned[u] || !rng.gen_bool(0.6) {
                continue;
            }
            if block.iter().all(|&b| g.has_edge(b, u)) {
                block.push(u);
                assigned[u] = true;
            }
        }
        block.sort();
        blocks.push(block);
    }
    blocks
}

/// Rebuilds the base graph with canonical x:i,j labels in block-major
/// order, so the partition coordinates are readable in fixtures.
fn canonicalize(g: &Graph, blocks: &[Vec<usize>]) -> (Graph, CliquePartition) {
    let mut new_labels = vec![String::new(); g.n()];
    let mut order: Vec<usize> = Vec::with_capacity(g.n());
    for (bi, block) in blocks.iter().enumerate() {
        for (j, &v) in block.iter().enumerate() {
            new_labels[v] = format!("x:{},{}", bi + 1, j + 1);
            order.push(v);
        }
    }
    let labels: Vec<String> = order.iter().map(|&v| new_labels[v].clone()).collect();
    let edges: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (new_labels[u].clone(), new_labels[v].clone()))
        .collect();
    let base = Graph::new(&labels, &edges).expect("relabeling is injective");
    let block_labels: Vec<Vec<String>> = blocks
        .iter()
        .enumerate()
        .map(|(bi, block)| {
            (0..block.len()).map(|j| format!("x:{},{}", bi + 1, j + 1)).collect()
        })
        .collect();
    let pi = base.validate_partition(&block_labels).expect("greedy blocks are cliques");
    (base, pi)
}

/// Random multiplicities: all ones plus a random distribution of the spare
/// whisker budget.
fn random_multiplicities(
    rng: &mut ChaCha8Rng,
    r: usize,
    cap: usize,
    budget: usize,
) -> Vec<usize> {
    let mut ns = vec![1usize; r];
    if budget <= r {
        return ns;
    }
    let mut spare = budget - r;
    while spare > 0 {
        let i = rng.gen_range(0..r);
        if ns[i] < cap {
            ns[i] += 1;
            spare -= 1;
        } else if ns.iter().all(|&n| n >= cap) {
            break;
        }
    }
    ns
}

/// Random base graph satisfying the very well-covered side conditions:
/// all matching edges x_i-y_i, optional x_i-y_j for i < j, optional
/// x_i-x_j.
fn random_vwc_base(rng: &mut ChaCha8Rng, d0: usize) -> Graph {
    let mut labels = Vec::with_capacity(2 * d0);
    for i in 1..=d0 {
        labels.push(format!("x:{i}"));
    }
    for i in 1..=d0 {
        labels.push(format!("y:{i}"));
    }
    let mut edges = Vec::new();
    for i in 1..=d0 {
        edges.push((format!("x:{i}"), format!("y:{i}")));
    }
    for i in 1..=d0 {
        for j in i + 1..=d0 {
            if rng.gen_bool(0.35) {
                edges.push((format!("x:{i}"), format!("y:{j}")));
            }
            if rng.gen_bool(0.3) {
                edges.push((format!("x:{i}"), format!("x:{j}")));
            }
        }
    }
    Graph::new(&labels, &edges).expect("vwc base is simple")
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>, CorpusError> {
    if spec.max_total_vertices > crate::graph::DEFAULT_ENUMERATION_CAP {
        return Err(CorpusError::CapExceeded(format!(
            "max_total_vertices {} is above the enumeration cap {}",
            spec.max_total_vertices,
            crate::graph::DEFAULT_ENUMERATION_CAP
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out: Vec<Instance> = Vec::new();

    // Mandatory members: the running example and the degenerate cases.
    let (gex, pex) = running_example();
    out.push(Instance::Cw { name: "cw-example".into(), wg: clique_whisker(&gex, &pex) });
    let k1 = Graph::new(&["x:1,1"], &[]).unwrap();
    let singletons = CliquePartition::singletons(&k1);
    out.push(Instance::Cw { name: "cw-k1".into(), wg: clique_whisker(&k1, &singletons) });
    out.push(Instance::Multi {
        name: "multi-k1-n2".into(),
        wg: multi_clique_whisker(&k1, &singletons, &[2])
            .map_err(|e| CorpusError::Generation(e.to_string()))?,
    });
    out.push(Instance::Multi {
        name: "multi-example-2-1".into(),
        wg: multi_clique_whisker(&gex, &pex, &[2, 1])
            .map_err(|e| CorpusError::Generation(e.to_string()))?,
    });
    let hk2 = Graph::new(&["x:1", "y:1"], &[("x:1", "y:1")]).unwrap();
    out.push(Instance::Vwc {
        name: "vwc-k2-n1".into(),
        vwc: vwc_expand(&hk2, &[1]).map_err(|e| CorpusError::Generation(e.to_string()))?,
    });
    out.push(Instance::Vwc {
        name: "vwc-k2-n2".into(),
        vwc: vwc_expand(&hk2, &[2]).map_err(|e| CorpusError::Generation(e.to_string()))?,
    });
    out.push(Instance::Vwc {
        name: "vwc-staircase-1-2".into(),
        vwc: vwc_expand(&staircase_base(), &[1, 2])
            .map_err(|e| CorpusError::Generation(e.to_string()))?,
    });

    // Random clique-whiskered instances.
    let mut count = out.iter().filter(|i| i.family() == "cw").count();
    let mut attempt = 0u64;
    while count < spec.count_cw {
        attempt += 1;
        if attempt > 100_000 {
            return Err(CorpusError::Generation("cw generation stalled".into()));
        }
        let n = rng.gen_range(1..=spec.max_base_vertices);
        let p = [15, 35, 55, 80][rng.gen_range(0..4)];
        let g = random_graph(&mut rng, n, p);
        let blocks = random_partition(&mut rng, &g);
        if n + blocks.len() > spec.max_total_vertices {
            continue;
        }
        let (base, pi) = canonicalize(&g, &blocks);
        out.push(Instance::Cw {
            name: format!("cw-{count:03}"),
            wg: clique_whisker(&base, &pi),
        });
        count += 1;
    }

    // Multi instances: the all-ones degeneration of each sampled topology
    // plus random multiplicities within the whisker budget.
    let mut count = out.iter().filter(|i| i.family() == "multi").count();
    while count < spec.count_multi {
        attempt += 1;
        if attempt > 200_000 {
            return Err(CorpusError::Generation("multi generation stalled".into()));
        }
        let n = rng.gen_range(1..=spec.max_base_vertices);
        let p = [15, 35, 55, 80][rng.gen_range(0..4)];
        let g = random_graph(&mut rng, n, p);
        let blocks = random_partition(&mut rng, &g);
        let r = blocks.len();
        if n + r > spec.max_total_vertices {
            continue;
        }
        let (base, pi) = canonicalize(&g, &blocks);
        let ones = vec![1usize; r];
        out.push(Instance::Multi {
            name: format!("multi-{count:03}-ones"),
            wg: multi_clique_whisker(&base, &pi, &ones)
                .map_err(|e| CorpusError::Generation(e.to_string()))?,
        });
        count += 1;
        if count >= spec.count_multi {
            break;
        }
        let budget = (spec.max_total_vertices - n).min(6).max(r);
        let ns = random_multiplicities(&mut rng, r, spec.multiplicity_cap, budget);
        if n + ns.iter().sum::<usize>() > spec.max_total_vertices {
            continue;
        }
        out.push(Instance::Multi {
            name: format!("multi-{count:03}"),
            wg: multi_clique_whisker(&base, &pi, &ns)
                .map_err(|e| CorpusError::Generation(e.to_string()))?,
        });
        count += 1;
    }

    // Very well-covered instances.
    let mut count = out.iter().filter(|i| i.family() == "vwc").count();
    while count < spec.count_vwc {
        attempt += 1;
        if attempt > 300_000 {
            return Err(CorpusError::Generation("vwc generation stalled".into()));
        }
        let half_cap = spec.max_total_vertices / 2;
        let d0 = rng.gen_range(1..=half_cap.min(spec.max_base_vertices));
        let h = random_vwc_base(&mut rng, d0);
        let budget = half_cap.max(d0);
        let ns = random_multiplicities(&mut rng, d0, spec.multiplicity_cap, budget);
        if ns.iter().sum::<usize>() > half_cap {
            continue;
        }
        match vwc_expand(&h, &ns) {
            Ok(vwc) => {
                out.push(Instance::Vwc { name: format!("vwc-{count:03}"), vwc });
                count += 1;
            }
            Err(_) => continue,
        }
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_complete() {
        let spec = CorpusSpec { count_cw: 8, count_multi: 8, count_vwc: 4, ..Default::default() };
        let a = generate_corpus(&spec).unwrap();
        let b = generate_corpus(&spec).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name(), y.name());
            assert_eq!(x.size(), y.size());
        }
        assert!(a.iter().any(|i| i.name() == "cw-example"));
        assert!(a.iter().any(|i| i.name() == "vwc-k2-n2"));
        assert!(a.iter().filter(|i| i.family() == "cw").count() >= 8);
        assert!(a.iter().filter(|i| i.family() == "multi").count() >= 8);
        assert!(a.iter().filter(|i| i.family() == "vwc").count() >= 4);
        assert!(a.iter().all(|i| i.size() <= 12));
    }

    #[test]
    fn different_seeds_differ() {
        let a = generate_corpus(&CorpusSpec { seed: 1, ..Default::default() }).unwrap();
        let b = generate_corpus(&CorpusSpec { seed: 2, ..Default::default() }).unwrap();
        // Mandatory prefixes agree; the random tails should not be all equal.
        let sizes_a: Vec<usize> = a.iter().map(|i| i.size()).collect();
        let sizes_b: Vec<usize> = b.iter().map(|i| i.size()).collect();
        assert_ne!(sizes_a, sizes_b);
    }

    #[test]
    fn generated_whiskered_graphs_validate() {
        let spec = CorpusSpec { count_cw: 6, count_multi: 6, count_vwc: 3, ..Default::default() };
        for inst in generate_corpus(&spec).unwrap() {
            match inst {
                Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => {
                    wg.validate().unwrap();
                    assert!(wg.reconstructs());
                }
                Instance::Vwc { vwc, .. } => {
                    assert_eq!(vwc.expanded.n(), 2 * vwc.total());
                }
            }
        }
    }
}
