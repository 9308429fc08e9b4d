//! The whiskered graph families and their canonical clique partitions.
//!
//! Every constructor returns a [`WhiskeredGraph`] (or [`VwcStructure`]) whose
//! invariants are re-validated on assembly: each whisker vertex is adjacent
//! to exactly its block, and deleting all whiskers recovers the base graph.
//!
//! Label conventions (documented, relied on by fixtures and the CLI):
//! whiskers added by the constructors are `w:i,k` (block i, copy k, 1-based);
//! corona clique vertices are `y:i,j`; the Cameron-Walker construction uses
//! leaves `w:i`, pendant-triangle vertices `z:j` and `w:n+j`; very
//! well-covered bases are labeled `x:i` / `y:i` and their expansions
//! `x:i,a` / `y:i,a`.

use std::collections::HashMap;

use thiserror::Error;

use crate::bits;
use crate::graph::{CliquePartition, CoverFamily, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("multiplicity must be at least 1")]
    NonPositiveMultiplicity,
    #[error("expected {0} multiplicities, got {1}")]
    MultiplicityCount(usize, usize),
    #[error("not bipartite with the stated parts: {0}")]
    NotBipartite(String),
    #[error("bipartite part must be nonempty")]
    EmptyPart,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("not a Cohen-Macaulay chordal graph: {0}")]
    NotCohenMacaulayChordal(String),
    #[error("very well-covered condition fails: {0}")]
    NotVeryWellCoveredCM(String),
    #[error("whiskered-graph invariant violated: {0}")]
    Invalid(String),
}

/// A graph realized as a (multi-)clique-whiskered graph over a base graph
/// and partition, together with the whiskers attached to each block.
#[derive(Debug, Clone)]
pub struct WhiskeredGraph {
    pub graph: Graph,
    pub base: Graph,
    pub partition: CliquePartition,
    /// Whisker labels per block, in attachment order.
    pub whisker_map: Vec<Vec<String>>,
}

impl WhiskeredGraph {
    /// Assembles and validates. The base vertex order must be the induced
    /// order from the ambient graph.
    pub fn assemble(
        graph: Graph,
        base: Graph,
        partition: CliquePartition,
        whisker_map: Vec<Vec<String>>,
    ) -> Result<WhiskeredGraph, ConstructError> {
        let wg = WhiskeredGraph { graph, base, partition, whisker_map };
        wg.validate()?;
        Ok(wg)
    }

    pub fn validate(&self) -> Result<(), ConstructError> {
        if self.whisker_map.len() != self.partition.len() {
            return Err(ConstructError::Invalid("one whisker list per block required".into()));
        }
        let mut base_mask = 0u64;
        for l in self.base.labels() {
            let v = self
                .graph
                .vertex(l)
                .ok_or_else(|| ConstructError::Invalid(format!("base vertex {l} missing")))?;
            base_mask |= 1 << v;
        }
        let mut whisker_mask = 0u64;
        for (b, whiskers) in self.whisker_map.iter().enumerate() {
            if whiskers.is_empty() {
                return Err(ConstructError::Invalid(format!("block {b} has no whisker")));
            }
            let block_graph_mask = self.block_graph_mask(b)?;
            for w in whiskers {
                let v = self
                    .graph
                    .vertex(w)
                    .ok_or_else(|| ConstructError::Invalid(format!("whisker {w} missing")))?;
                if bits::contains(base_mask | whisker_mask, v) {
                    return Err(ConstructError::Invalid(format!("{w} reused")));
                }
                whisker_mask |= 1 << v;
                if self.graph.neighbors(v) != block_graph_mask {
                    return Err(ConstructError::Invalid(format!(
                        "whisker {w} is not joined to exactly its block"
                    )));
                }
            }
        }
        if base_mask | whisker_mask != self.graph.full_mask() {
            return Err(ConstructError::Invalid(
                "graph vertices must be exactly base plus whiskers".into(),
            ));
        }
        // Removing the whiskers must recover the base, order included.
        if self.graph.induced(base_mask) != self.base {
            return Err(ConstructError::Invalid("whisker removal does not recover base".into()));
        }
        // And the partition must be a valid clique partition of the base.
        let blocks = self.partition.block_labels(&self.base);
        self.base.validate_partition(&blocks)?;
        Ok(())
    }

    /// Whisker counts per block.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.whisker_map.iter().map(|w| w.len()).collect()
    }

    pub fn is_plain_whiskering(&self) -> bool {
        self.whisker_map.iter().all(|w| w.len() == 1)
    }

    /// Block of the partition as a mask over the ambient graph's vertices.
    pub fn block_graph_mask(&self, block: usize) -> Result<u64, ConstructError> {
        let mut m = 0u64;
        for l in self.base.mask_labels(self.partition.blocks()[block]) {
            let v = self
                .graph
                .vertex(&l)
                .ok_or_else(|| ConstructError::Invalid(format!("block vertex {l} missing")))?;
            m |= 1 << v;
        }
        Ok(m)
    }

    /// Mask (over graph vertices) of the whiskers of one block.
    pub fn whisker_graph_mask(&self, block: usize) -> u64 {
        self.whisker_map[block]
            .iter()
            .map(|w| 1u64 << self.graph.vertex(w).expect("validated"))
            .fold(0, |a, b| a | b)
    }

    /// Rebuilds the whiskered graph from (base, partition, multiplicities)
    /// with canonical labels and renames the fresh whiskers back; equality
    /// with `graph` realizes the decomposition lemmas behind each family.
    pub fn reconstructs(&self) -> bool {
        let ns = self.multiplicities();
        let Ok(rebuilt) = multi_clique_whisker(&self.base, &self.partition, &ns) else {
            return false;
        };
        let mut rename: HashMap<String, String> = HashMap::new();
        for (b, whiskers) in rebuilt.whisker_map.iter().enumerate() {
            for (k, fresh) in whiskers.iter().enumerate() {
                rename.insert(fresh.clone(), self.whisker_map[b][k].clone());
            }
        }
        let renamed: Vec<String> = rebuilt
            .graph
            .labels()
            .iter()
            .map(|l| rename.get(l).cloned().unwrap_or_else(|| l.clone()))
            .collect();
        let Ok(renamed_graph) = Graph::new(
            &renamed,
            &rebuilt
                .graph
                .edge_labels()
                .iter()
                .map(|(a, b)| {
                    (
                        rename.get(a).cloned().unwrap_or_else(|| a.clone()),
                        rename.get(b).cloned().unwrap_or_else(|| b.clone()),
                    )
                })
                .collect::<Vec<_>>(),
        ) else {
            return false;
        };
        same_labeled_graph(&renamed_graph, &self.graph)
    }
}

/// Vertex-set and edge-set equality over labels, ignoring order.
pub fn same_labeled_graph(a: &Graph, b: &Graph) -> bool {
    use std::collections::BTreeSet;
    let va: BTreeSet<&String> = a.labels().iter().collect();
    let vb: BTreeSet<&String> = b.labels().iter().collect();
    if va != vb {
        return false;
    }
    let ea: BTreeSet<(String, String)> = a
        .edge_labels()
        .into_iter()
        .map(|(x, y)| if x <= y { (x, y) } else { (y, x) })
        .collect();
    let eb: BTreeSet<(String, String)> = b
        .edge_labels()
        .into_iter()
        .map(|(x, y)| if x <= y { (x, y) } else { (y, x) })
        .collect();
    ea == eb
}

/// One whisker on every vertex: the plain whisker graph, as the
/// clique-whiskering of the all-singletons partition.
pub fn whisker(g: &Graph) -> WhiskeredGraph {
    clique_whisker(g, &CliquePartition::singletons(g))
}

/// One whisker per block of a clique partition.
pub fn clique_whisker(g: &Graph, pi: &CliquePartition) -> WhiskeredGraph {
    let ns = vec![1usize; pi.len()];
    multi_clique_whisker(g, pi, &ns).expect("all-ones multiplicities are valid")
}

/// `n_i` whiskers on block i, each joined to the whole block.
pub fn multi_clique_whisker(
    g: &Graph,
    pi: &CliquePartition,
    ns: &[usize],
) -> Result<WhiskeredGraph, ConstructError> {
    if ns.len() != pi.len() {
        return Err(ConstructError::MultiplicityCount(pi.len(), ns.len()));
    }
    if ns.iter().any(|&n| n == 0) {
        return Err(ConstructError::NonPositiveMultiplicity);
    }
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut edges = g.edge_labels();
    let mut whisker_map = Vec::with_capacity(pi.len());
    for (b, &block) in pi.blocks().iter().enumerate() {
        let mut ws = Vec::with_capacity(ns[b]);
        for k in 0..ns[b] {
            let w = format!("w:{},{}", b + 1, k + 1);
            for x in g.mask_labels(block) {
                edges.push((x, w.clone()));
            }
            labels.push(w.clone());
            ws.push(w);
        }
        whisker_map.push(ws);
    }
    let graph = Graph::new(&labels, &edges)?;
    WhiskeredGraph::assemble(graph, g.clone(), pi.clone(), whisker_map)
}

/// The whisker graph W(G) with pendants labeled by the partition
/// coordinates: `y:i,j` attached to the j-th vertex of block i. Used by the
/// cover bijection and the Betti-transfer checks, which pair x- and
/// y-variables positionally.
#[derive(Debug, Clone)]
pub struct PairedWhisker {
    pub graph: Graph,
    /// (base vertex index, pendant label), in partition order.
    pub pairs: Vec<(usize, String)>,
}

pub fn paired_whisker_graph(g: &Graph, pi: &CliquePartition) -> PairedWhisker {
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut edges = g.edge_labels();
    let mut pairs = Vec::with_capacity(g.n());
    for (b, &block) in pi.blocks().iter().enumerate() {
        for (j, v) in bits::indices(block).enumerate() {
            let y = format!("y:{},{}", b + 1, j + 1);
            edges.push((g.label(v).to_string(), y.clone()));
            labels.push(y.clone());
            pairs.push((v, y));
        }
    }
    let graph = Graph::new(&labels, &edges).expect("pendant labels are fresh");
    PairedWhisker { graph, pairs }
}

/// Clique corona: attach a complete graph K_{m_i} to each vertex x_i of G,
/// joined completely to x_i. Realized as a clique-whiskered graph by using
/// the last clique vertex of each block as the whisker.
pub fn corona_clique(g: &Graph, ms: &[usize]) -> Result<WhiskeredGraph, ConstructError> {
    if ms.len() != g.n() {
        return Err(ConstructError::MultiplicityCount(g.n(), ms.len()));
    }
    if ms.iter().any(|&m| m == 0) {
        return Err(ConstructError::NonPositiveMultiplicity);
    }
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut edges = g.edge_labels();
    for (i, &m) in ms.iter().enumerate() {
        let clique: Vec<String> = (1..=m).map(|j| format!("y:{},{}", i + 1, j)).collect();
        for (a, ya) in clique.iter().enumerate() {
            edges.push((g.label(i).to_string(), ya.clone()));
            for yb in clique.iter().skip(a + 1) {
                edges.push((ya.clone(), yb.clone()));
            }
        }
        labels.extend(clique);
    }
    let graph = Graph::new(&labels, &edges)?;

    // Base: everything except the top corona vertex of each block.
    let dropped: Vec<String> = (0..g.n()).map(|i| format!("y:{},{}", i + 1, ms[i])).collect();
    let keep: u64 = graph
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| !dropped.contains(l))
        .map(|(v, _)| 1u64 << v)
        .sum();
    let base = graph.induced(keep);
    let blocks: Vec<Vec<String>> = (0..g.n())
        .map(|i| {
            let mut block = vec![g.label(i).to_string()];
            block.extend((1..ms[i]).map(|j| format!("y:{},{}", i + 1, j)));
            block
        })
        .collect();
    let partition = base.validate_partition(&blocks)?;
    let whisker_map: Vec<Vec<String>> = dropped.into_iter().map(|w| vec![w]).collect();
    WhiskeredGraph::assemble(graph, base, partition, whisker_map)
}

/// Cohen-Macaulay Cameron-Walker graph over a connected bipartite graph on
/// parts x_1..x_n and y_1..y_m: one leaf `w:i` on each x_i and one pendant
/// triangle {y_j, z:j, w:n+j} on each y_j. The base keeps the z-vertices and
/// the partition has singleton x-blocks and {y_j, z_j} pair blocks.
pub fn cameron_walker_cm(
    x_part: &[String],
    y_part: &[String],
    edges: &[(String, String)],
) -> Result<WhiskeredGraph, ConstructError> {
    if x_part.is_empty() || y_part.is_empty() {
        return Err(ConstructError::EmptyPart);
    }
    let mut labels: Vec<String> = x_part.to_vec();
    labels.extend(y_part.iter().cloned());
    let bip = Graph::new(&labels, edges)?;
    let n = x_part.len();
    let m = y_part.len();
    for (a, b) in bip.edges() {
        let same_side = (*a < n) == (*b < n);
        if same_side {
            return Err(ConstructError::NotBipartite(format!(
                "edge {}-{} joins one part",
                bip.label(*a),
                bip.label(*b)
            )));
        }
    }
    if !bip.is_connected() {
        return Err(ConstructError::NotConnected);
    }

    let mut all = labels.clone();
    let mut all_edges: Vec<(String, String)> = edges.to_vec();
    for j in 1..=m {
        let (y, z) = (y_part[j - 1].clone(), format!("z:{j}"));
        all.push(z.clone());
        all_edges.push((y, z));
    }
    for i in 1..=n {
        let w = format!("w:{i}");
        all_edges.push((x_part[i - 1].clone(), w.clone()));
        all.push(w);
    }
    for j in 1..=m {
        let w = format!("w:{}", n + j);
        all_edges.push((y_part[j - 1].clone(), w.clone()));
        all_edges.push((format!("z:{j}"), w.clone()));
        all.push(w);
    }
    let graph = Graph::new(&all, &all_edges)?;

    let whiskers: Vec<String> =
        (1..=n + m).map(|i| format!("w:{i}")).collect();
    let keep: u64 = graph
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| !whiskers.contains(l))
        .map(|(v, _)| 1u64 << v)
        .sum();
    let base = graph.induced(keep);
    let mut blocks: Vec<Vec<String>> = x_part.iter().map(|x| vec![x.clone()]).collect();
    for j in 1..=m {
        blocks.push(vec![y_part[j - 1].clone(), format!("z:{j}")]);
    }
    let partition = base.validate_partition(&blocks)?;
    let whisker_map = whiskers.into_iter().map(|w| vec![w]).collect();
    WhiskeredGraph::assemble(graph, base, partition, whisker_map)
}

/// Greedy perfect elimination order, or None when the graph is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut remaining = g.full_mask();
    let mut order = Vec::with_capacity(g.n());
    while remaining != 0 {
        let simplicial = bits::indices(remaining)
            .find(|&v| g.is_clique(g.neighbors(v) & remaining))?;
        order.push(simplicial);
        remaining &= !(1u64 << simplicial);
    }
    Some(order)
}

/// Decomposes a Cohen-Macaulay chordal graph as a clique-whiskering: the
/// maximal cliques admitting a free vertex must partition the vertex set;
/// the lexicographically least free vertex of each clique becomes its
/// whisker.
pub fn cm_chordal_decompose(g: &Graph) -> Result<WhiskeredGraph, ConstructError> {
    if perfect_elimination_order(g).is_none() {
        return Err(ConstructError::NotChordal);
    }
    let cliques = g.maximal_cliques();
    let mut membership = vec![0usize; g.n()];
    for &c in &cliques {
        for v in bits::indices(c) {
            membership[v] += 1;
        }
    }
    let free = |v: usize| membership[v] == 1;
    let with_free: Vec<u64> =
        cliques.iter().copied().filter(|&c| bits::indices(c).any(free)).collect();
    let mut union = 0u64;
    for &c in &with_free {
        if union & c != 0 {
            return Err(ConstructError::NotCohenMacaulayChordal(format!(
                "cliques with a free vertex overlap at {{{}}}",
                g.mask_labels(union & c).join(",")
            )));
        }
        union |= c;
    }
    if union != g.full_mask() {
        return Err(ConstructError::NotCohenMacaulayChordal(format!(
            "vertices {{{}}} lie in no clique with a free vertex",
            g.mask_labels(g.full_mask() & !union).join(",")
        )));
    }
    let mut whisker_labels = Vec::new();
    let mut blocks = Vec::new();
    for &c in &with_free {
        let w = bits::indices(c).find(|&v| free(v)).expect("clique has a free vertex");
        let block = c & !(1u64 << w);
        if block == 0 {
            return Err(ConstructError::NotCohenMacaulayChordal(format!(
                "isolated vertex {}",
                g.label(w)
            )));
        }
        whisker_labels.push(g.label(w).to_string());
        blocks.push(g.mask_labels(block));
    }
    let keep: u64 = (0..g.n())
        .filter(|&v| !whisker_labels.contains(&g.label(v).to_string()))
        .map(|v| 1u64 << v)
        .sum();
    let base = g.induced(keep);
    let partition = base.validate_partition(&blocks)?;
    let whisker_map = whisker_labels.into_iter().map(|w| vec![w]).collect();
    WhiskeredGraph::assemble(g.clone(), base, partition, whisker_map)
}

/// A very well-covered expansion: the base graph H on x:1..x:d0, y:1..y:d0
/// satisfying the cover/independence side conditions, expanded by replacing
/// each x_i-y_i edge with a complete bipartite block of size n_i.
#[derive(Debug, Clone)]
pub struct VwcStructure {
    pub base: Graph,
    pub mult: Vec<usize>,
    pub expanded: Graph,
    /// Block offsets I_i = n_1 + ... + n_{i-1}.
    pub offsets: Vec<usize>,
    pub d0: usize,
    /// Minimal vertex covers of the base H.
    pub covers: CoverFamily,
    /// Per cover, the set of x-indices (0-based) whose y-partner can be
    /// swapped out while staying a vertex cover; these index the syzygies.
    pub sigma: Vec<u64>,
}

impl VwcStructure {
    /// Total expansion size d = Σ n_i; the expanded graph has 2d vertices.
    pub fn total(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn x_base(&self, i: usize) -> usize {
        self.base.vertex(&format!("x:{}", i + 1)).expect("validated")
    }

    pub fn y_base(&self, i: usize) -> usize {
        self.base.vertex(&format!("y:{}", i + 1)).expect("validated")
    }
}

/// Checks the very well-covered side conditions on H and expands it.
pub fn vwc_expand(h: &Graph, ns: &[usize]) -> Result<VwcStructure, ConstructError> {
    let fail = |msg: String| Err(ConstructError::NotVeryWellCoveredCM(msg));
    if h.n() % 2 != 0 || h.n() == 0 {
        return fail("vertex count must be 2*d0 > 0".into());
    }
    let d0 = h.n() / 2;
    let mut xs = Vec::with_capacity(d0);
    let mut ys = Vec::with_capacity(d0);
    for i in 1..=d0 {
        match (h.vertex(&format!("x:{i}")), h.vertex(&format!("y:{i}"))) {
            (Some(x), Some(y)) => {
                xs.push(x);
                ys.push(y);
            }
            _ => return fail(format!("expected labels x:{i} and y:{i}")),
        }
    }
    if ns.len() != d0 {
        return Err(ConstructError::MultiplicityCount(d0, ns.len()));
    }
    if ns.iter().any(|&n| n == 0) {
        return Err(ConstructError::NonPositiveMultiplicity);
    }
    let x_mask: u64 = xs.iter().map(|&v| 1u64 << v).sum();
    let y_mask: u64 = ys.iter().map(|&v| 1u64 << v).sum();
    for i in 0..d0 {
        if !h.has_edge(xs[i], ys[i]) {
            return fail(format!("matching edge x:{}-y:{} missing", i + 1, i + 1));
        }
        for j in 0..d0 {
            if h.has_edge(ys[i], ys[j]) {
                return fail(format!("edge inside the independent part: y:{}-y:{}", i + 1, j + 1));
            }
            if h.has_edge(xs[i], ys[j]) && i > j {
                return fail(format!("edge x:{}-y:{} violates the order condition", i + 1, j + 1));
            }
        }
    }
    if !h.is_cover(x_mask) {
        return fail("x-part is not a vertex cover".into());
    }
    if !h.is_independent(y_mask) {
        return fail("y-part is not independent".into());
    }
    let covers = h.minimal_vertex_covers();
    if !covers.contains(x_mask) {
        return fail("x-part is not a minimal vertex cover".into());
    }
    if covers.covers().iter().any(|&c| bits::popcount(c) != d0) {
        return fail("not unmixed: some minimal cover has size != d0".into());
    }
    // Every minimal cover picks exactly one endpoint of each matching edge.
    for &c in covers.covers() {
        for i in 0..d0 {
            let hits = bits::contains(c, xs[i]) as usize + bits::contains(c, ys[i]) as usize;
            if hits != 1 {
                return fail("a minimal cover does not split the matching".into());
            }
        }
    }

    // Swap-valid syzygy indices per cover: y_i in C may step to x_i only if
    // the swap is still a cover (equivalently, every earlier x-neighbor of
    // y_i already lies in C). For plain whisker bases every candidate
    // qualifies; in general the condition properly cuts the set down.
    let mut sigma = Vec::with_capacity(covers.len());
    for &c in covers.covers() {
        let mut mask = 0u64;
        for i in 0..d0 {
            if bits::contains(c, ys[i]) {
                let swap = (c & !(1u64 << ys[i])) | 1u64 << xs[i];
                if h.is_cover(swap) {
                    debug_assert!(covers.contains(swap));
                    mask |= 1u64 << i;
                }
            }
        }
        sigma.push(mask);
    }

    let mut offsets = Vec::with_capacity(d0);
    let mut acc = 0usize;
    for &n in ns {
        offsets.push(acc);
        acc += n;
    }
    let mut labels: Vec<String> = Vec::with_capacity(2 * acc);
    for i in 1..=d0 {
        for a in 1..=ns[i - 1] {
            labels.push(format!("x:{i},{a}"));
        }
    }
    for i in 1..=d0 {
        for a in 1..=ns[i - 1] {
            labels.push(format!("y:{i},{a}"));
        }
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 0..d0 {
        for j in 0..d0 {
            if i != j && h.has_edge(xs[i], xs[j]) && i < j {
                for a in 1..=ns[i] {
                    for b in 1..=ns[j] {
                        edges.push((format!("x:{},{}", i + 1, a), format!("x:{},{}", j + 1, b)));
                    }
                }
            }
            if h.has_edge(xs[i], ys[j]) {
                for a in 1..=ns[i] {
                    for b in 1..=ns[j] {
                        edges.push((format!("x:{},{}", i + 1, a), format!("y:{},{}", j + 1, b)));
                    }
                }
            }
        }
    }
    let expanded = Graph::new(&labels, &edges)?;
    Ok(VwcStructure { base: h.clone(), mult: ns.to_vec(), expanded, offsets, d0, covers, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn whisker_k1_is_k2() {
        let wg = whisker(&fixtures::k1());
        assert_eq!(wg.graph.n(), 2);
        assert_eq!(wg.graph.edges().len(), 1);
        assert_eq!(wg.whisker_map, vec![vec!["w:1,1".to_string()]]);
    }

    #[test]
    fn whisker_equals_clique_whisker_at_singletons() {
        let g = fixtures::k4_minus_edge();
        let a = whisker(&g);
        let b = clique_whisker(&g, &CliquePartition::singletons(&g));
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.whisker_map, b.whisker_map);
    }

    #[test]
    fn clique_whisker_fixture_shape() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = clique_whisker(&g, &pi);
        assert_eq!(wg.graph.n(), 6);
        // |E(G^π)| = |E(G)| + |V(G)|.
        assert_eq!(wg.graph.edges().len(), g.edges().len() + g.n());
        let w1 = wg.graph.vertex("w:1,1").unwrap();
        let block1 = wg.graph.labels_mask(&["x:1,1", "x:1,2", "x:1,3"]).unwrap();
        assert_eq!(wg.graph.neighbors(w1), block1);
        assert!(wg.reconstructs());
    }

    #[test]
    fn edge_count_grows_by_vertex_count() {
        for g in [fixtures::k2(), fixtures::cycle4(), fixtures::k4_minus_edge()] {
            let wg = whisker(&g);
            assert_eq!(wg.graph.edges().len(), g.edges().len() + g.n());
        }
    }

    #[test]
    fn multi_whisker_counts() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = multi_clique_whisker(&g, &pi, &[2, 1]).unwrap();
        assert_eq!(wg.graph.n(), 7);
        assert_eq!(wg.whisker_map[0], vec!["w:1,1".to_string(), "w:1,2".to_string()]);
        assert_eq!(wg.whisker_map[1], vec!["w:2,1".to_string()]);
        for w in ["w:1,1", "w:1,2"] {
            let v = wg.graph.vertex(w).unwrap();
            assert_eq!(
                wg.graph.neighbors(v),
                wg.graph.labels_mask(&["x:1,1", "x:1,2", "x:1,3"]).unwrap()
            );
        }
        assert!(wg.reconstructs());

        assert_eq!(
            multi_clique_whisker(&g, &pi, &[0, 1]).unwrap_err(),
            ConstructError::NonPositiveMultiplicity
        );
        // A star: one block, two whiskers on K1.
        let k1 = fixtures::k1();
        let star =
            multi_clique_whisker(&k1, &CliquePartition::singletons(&k1), &[2]).unwrap();
        assert_eq!(star.graph.n(), 3);
        assert_eq!(star.graph.edges().len(), 2);
    }

    #[test]
    fn multi_with_ones_equals_clique_whisker_exactly() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let a = clique_whisker(&g, &pi);
        let b = multi_clique_whisker(&g, &pi, &[1, 1]).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.whisker_map, b.whisker_map);
    }

    #[test]
    fn corona_cases() {
        // K1 with one pendant: K2.
        let k1 = Graph::new(&["x1"], &[]).unwrap();
        let c = corona_clique(&k1, &[1]).unwrap();
        assert_eq!(c.graph.n(), 2);
        assert_eq!(c.partition.block_labels(&c.base), vec![vec!["x1".to_string()]]);

        // K1 with K2 corona: a triangle whose base is the edge {x1, y:1,1}.
        let c = corona_clique(&k1, &[2]).unwrap();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.graph.edges().len(), 3);
        assert_eq!(c.base.n(), 2);
        assert_eq!(
            c.partition.block_labels(&c.base),
            vec![vec!["x1".to_string(), "y:1,1".to_string()]]
        );
        assert!(c.reconstructs());

        // K2 with single pendants: the path on 4 vertices.
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let c = corona_clique(&k2, &[1, 1]).unwrap();
        assert_eq!(c.graph.n(), 4);
        assert_eq!(c.graph.edges().len(), 3);
        assert_eq!(
            c.partition.block_labels(&c.base),
            vec![vec!["a".to_string()], vec!["b".to_string()]]
        );
        assert!(c.reconstructs());
    }

    #[test]
    fn cameron_walker_single_edge() {
        let wg = cameron_walker_cm(
            &["x1".into()],
            &["y1".into()],
            &[("x1".into(), "y1".into())],
        )
        .unwrap();
        assert_eq!(wg.graph.n(), 5);
        assert_eq!(wg.base.n(), 3);
        assert_eq!(
            wg.partition.block_labels(&wg.base),
            vec![vec!["x1".to_string()], vec!["y1".to_string(), "z:1".to_string()]]
        );
        assert!(wg.reconstructs());
    }

    #[test]
    fn cameron_walker_path_n1_m2() {
        let wg = cameron_walker_cm(
            &["x1".into()],
            &["y1".into(), "y2".into()],
            &[("x1".into(), "y1".into()), ("x1".into(), "y2".into())],
        )
        .unwrap();
        assert_eq!(wg.graph.n(), 8);
        assert_eq!(wg.partition.len(), 3);
        assert_eq!(wg.multiplicities(), vec![1, 1, 1]);
        assert!(wg.reconstructs());
    }

    #[test]
    fn cameron_walker_rejects_bad_parts() {
        let err = cameron_walker_cm(
            &["x1".into(), "x2".into()],
            &["y1".into()],
            &[
                ("x1".into(), "x2".into()),
                ("x1".into(), "y1".into()),
                ("x2".into(), "y1".into()),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, ConstructError::NotBipartite(_)));

        let err = cameron_walker_cm(
            &["x1".into(), "x2".into()],
            &["y1".into()],
            &[("x1".into(), "y1".into())],
        )
        .unwrap_err();
        assert_eq!(err, ConstructError::NotConnected);
    }

    #[test]
    fn chordal_decompose_k2() {
        let wg = cm_chordal_decompose(&fixtures::k2()).unwrap();
        assert_eq!(wg.base.labels(), &["b".to_string()]);
        assert_eq!(wg.whisker_map, vec![vec!["a".to_string()]]);
        assert!(wg.reconstructs());
    }

    #[test]
    fn chordal_decompose_rejects_c4_and_overlap() {
        assert_eq!(
            cm_chordal_decompose(&fixtures::cycle4()).unwrap_err(),
            ConstructError::NotChordal
        );

        // Triangle with pendants on two of its vertices: the maximal cliques
        // admitting a free vertex overlap, so no decomposition exists.
        let g = Graph::new(
            &["a", "b", "c", "pa", "pb"],
            &[("a", "b"), ("a", "c"), ("b", "c"), ("a", "pa"), ("b", "pb")],
        )
        .unwrap();
        let err = cm_chordal_decompose(&g).unwrap_err();
        assert!(matches!(err, ConstructError::NotCohenMacaulayChordal(_)));
    }

    #[test]
    fn chordal_decompose_whiskered_triangle() {
        // Triangle with a pendant on every vertex is Cohen-Macaulay chordal.
        let g = Graph::new(
            &["a", "b", "c", "pa", "pb", "pc"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("b", "c"),
                ("a", "pa"),
                ("b", "pb"),
                ("c", "pc"),
            ],
        )
        .unwrap();
        let wg = cm_chordal_decompose(&g).unwrap();
        assert_eq!(wg.base.n(), 3);
        assert_eq!(wg.partition.len(), 3);
        assert!(wg.reconstructs());
    }

    #[test]
    fn vwc_k2_expansion() {
        let h = Graph::new(&["x:1", "y:1"], &[("x:1", "y:1")]).unwrap();
        let s = vwc_expand(&h, &[2]).unwrap();
        assert_eq!(s.expanded.n(), 4);
        assert_eq!(s.expanded.edges().len(), 4); // K_{2,2}
        assert_eq!(s.offsets, vec![0]);
        assert_eq!(s.covers.len(), 2);
        assert_eq!(s.sigma, vec![0b0, 0b1]);
    }

    #[test]
    fn vwc_identity_expansion_matches_base() {
        let h = fixtures::vwc_staircase();
        let s = vwc_expand(&h, &[1, 1]).unwrap();
        // Same graph up to the x:i -> x:i,1 relabeling.
        let renamed: Vec<(String, String)> = s
            .expanded
            .edge_labels()
            .into_iter()
            .map(|(a, b)| (a.replace(",1", ""), b.replace(",1", "")))
            .collect();
        let rebuilt = Graph::new(
            &s.expanded
                .labels()
                .iter()
                .map(|l| l.replace(",1", ""))
                .collect::<Vec<_>>(),
            &renamed,
        )
        .unwrap();
        assert!(same_labeled_graph(&rebuilt, &h));
    }

    #[test]
    fn vwc_staircase_structure() {
        let h = fixtures::vwc_staircase();
        let s = vwc_expand(&h, &[1, 2]).unwrap();
        assert_eq!(s.expanded.n(), 6);
        // x1y1 stays one edge, x2y2 becomes K_{2,2}, x1y2 fans out to both
        // copies of y2.
        assert_eq!(s.expanded.edges().len(), 1 + 4 + 2);
        // Covers: {x1,x2}, {x1,y2}, {y1,y2}; swap-valid sets ∅, {x2}, {x1}.
        assert_eq!(s.covers.len(), 3);
        let sigma_sizes: Vec<u32> = s.sigma.iter().map(|m| m.count_ones()).collect();
        let mut sorted = sigma_sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 1]);
    }

    #[test]
    fn vwc_rejects_bad_inputs() {
        let h = Graph::new(&["x:1", "y:1"], &[]).unwrap();
        assert!(matches!(
            vwc_expand(&h, &[1]).unwrap_err(),
            ConstructError::NotVeryWellCoveredCM(_)
        ));

        // Order violation: x2-y1 forces 2 <= 1.
        let h = Graph::new(
            &["x:1", "x:2", "y:1", "y:2"],
            &[("x:1", "y:1"), ("x:2", "y:2"), ("x:2", "y:1")],
        )
        .unwrap();
        assert!(matches!(
            vwc_expand(&h, &[1, 1]).unwrap_err(),
            ConstructError::NotVeryWellCoveredCM(_)
        ));
    }

    #[test]
    fn paired_whisker_graph_of_fixture() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let pw = paired_whisker_graph(&g, &pi);
        assert_eq!(pw.graph.n(), 8);
        assert_eq!(pw.graph.edges().len(), 9);
        assert_eq!(pw.pairs.len(), 4);
        assert_eq!(pw.pairs[3].1, "y:2,1");
    }
}
