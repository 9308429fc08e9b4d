//! Finite simple graphs with a stable vertex order, plus the exhaustive
//! enumerations everything else is built on: minimal vertex covers, maximal
//! independent sets, maximal cliques, (induced) matching numbers, and clique
//! partition validation.
//!
//! Enumeration is deliberately brute force (subset scans over bitmasks): the
//! graphs handled here are desk-scale by design and exactness beats speed.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;

/// Default cap on vertex counts for exhaustive enumeration. CLI callers can
/// raise it, but the subset scans are exponential so don't.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("block {{{0}}} is not a clique")]
    NotAClique(String),
    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("graph has {0} vertices, above the enumeration cap {1}")]
    CapExceeded(usize, usize),
}

/// A finite simple graph. The vertex list order is total and stable: it
/// induces the variable order used for signs and serialized fixtures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates raw vertex and edge lists into a canonical graph.
    /// Rejects duplicate labels, loops and unknown endpoints; duplicate
    /// edges collapse silently (the edge *set* is what matters).
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        assert!(labels.len() <= bits::MAX_GROUND, "ground set too large for bitmask representation");
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let mut adj = vec![0u64; labels.len()];
        let mut edge_set = std::collections::BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let &u = index.get(a).ok_or_else(|| GraphError::UnknownEndpoint(a.into()))?;
            let &v = index.get(b).ok_or_else(|| GraphError::UnknownEndpoint(b.into()))?;
            if u == v {
                return Err(GraphError::LoopEdge(a.into()));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edge_set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { labels, index, adj, edges: edge_set.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone())).collect()
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.adj[u], v)
    }

    pub fn full_mask(&self) -> u64 {
        if self.n() == 64 { !0 } else { (1u64 << self.n()) - 1 }
    }

    /// Translates a mask into sorted labels.
    pub fn mask_labels(&self, mask: u64) -> Vec<String> {
        bits::indices(mask).map(|i| self.labels[i].clone()).collect()
    }

    pub fn labels_mask<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64, GraphError> {
        let mut m = 0u64;
        for l in labels {
            let v = self
                .vertex(l.as_ref())
                .ok_or_else(|| GraphError::UnknownEndpoint(l.as_ref().into()))?;
            m |= 1 << v;
        }
        Ok(m)
    }

    /// Induced subgraph on `keep`, preserving relative vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = bits::indices(keep).collect();
        let labels: Vec<String> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let pairs: Vec<(&str, &str)> =
            edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        Graph::new(&lrefs, &pairs).expect("induced subgraph of a valid graph is valid")
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits::indices(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits::indices(mask).all(|v| mask & !(self.adj[v] | (1 << v)) == 0)
    }

    pub fn is_cover(&self, mask: u64) -> bool {
        self.edges.iter().all(|&(u, v)| bits::contains(mask, u) || bits::contains(mask, v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = vec![0usize];
        while let Some(v) = frontier.pop() {
            for u in bits::indices(self.adj[v] & !seen) {
                seen |= 1 << u;
                frontier.push(u);
            }
        }
        seen == self.full_mask()
    }

    /// All maximal independent sets, sorted lexicographically by vertex order.
    pub fn maximal_independent_sets(&self) -> Vec<u64> {
        let full = self.full_mask();
        let mut out = Vec::new();
        for mask in 0..=full {
            if self.is_independent(mask)
                && bits::indices(full & !mask).all(|u| self.adj[u] & mask != 0)
            {
                out.push(mask);
            }
            if mask == full {
                break;
            }
        }
        out.sort_by_key(|&m| bits::lex_key(m));
        out
    }

    /// All maximal cliques, sorted lexicographically by vertex order.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let full = self.full_mask();
        let mut out = Vec::new();
        for mask in 0..=full {
            if mask != 0
                && self.is_clique(mask)
                && bits::indices(full & !mask).all(|u| mask & !self.adj[u] != 0)
            {
                out.push(mask);
            }
            if mask == full {
                break;
            }
        }
        out.sort_by_key(|&m| bits::lex_key(m));
        out
    }

    /// Exactly the inclusion-minimal vertex covers, computed as complements
    /// of maximal independent sets and cross-checked by a direct minimality
    /// scan over all subsets.
    pub fn minimal_vertex_covers(&self) -> CoverFamily {
        let full = self.full_mask();
        let mut covers: Vec<u64> =
            self.maximal_independent_sets().iter().map(|&m| full & !m).collect();
        covers.sort_by_key(|&m| bits::lex_key(m));

        let mut direct = Vec::new();
        for mask in 0..=full {
            // Minimal = cover and every member vertex is necessary. The
            // empty set qualifies exactly for the edgeless graph.
            if self.is_cover(mask)
                && bits::indices(mask).all(|v| !self.is_cover(mask & !(1 << v)))
            {
                direct.push(mask);
            }
            if mask == full {
                break;
            }
        }
        direct.sort_by_key(|&m| bits::lex_key(m));
        assert_eq!(covers, direct, "cover enumeration mismatch between the two routes");
        CoverFamily { covers }
    }

    /// Maximum matching size, exact, by exhaustive search over edge subsets
    /// (as a maximum independent set in the edge-conflict graph).
    pub fn matching_number(&self) -> usize {
        let conflicts = self.edge_conflicts(false);
        max_independent_in_conflict(&conflicts)
    }

    /// Maximum induced matching size, exact. Two edges conflict when they
    /// share a vertex or some edge joins their endpoints.
    pub fn induced_matching_number(&self) -> usize {
        let conflicts = self.edge_conflicts(true);
        max_independent_in_conflict(&conflicts)
    }

    fn edge_conflicts(&self, induced: bool) -> Vec<u64> {
        let m = self.edges.len();
        assert!(m <= 64, "too many edges for matching enumeration");
        let mut conflicts = vec![0u64; m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                let share = a == c || a == d || b == c || b == d;
                let joined = induced
                    && (self.has_edge(a, c)
                        || self.has_edge(a, d)
                        || self.has_edge(b, c)
                        || self.has_edge(b, d));
                if share || joined {
                    conflicts[i] |= 1 << j;
                    conflicts[j] |= 1 << i;
                }
            }
        }
        conflicts
    }

    /// Accepts iff the blocks are pairwise disjoint cliques covering V(G).
    pub fn validate_partition<S: AsRef<str>>(
        &self,
        blocks: &[Vec<S>],
    ) -> Result<CliquePartition, GraphError> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for block in blocks {
            let mask = self.labels_mask(block)?;
            if bits::popcount(mask) != block.len() || mask & seen != 0 {
                return Err(GraphError::NotAPartition(format!(
                    "block {{{}}} repeats a vertex",
                    join_labels(self, mask)
                )));
            }
            if !self.is_clique(mask) {
                return Err(GraphError::NotAClique(join_labels(self, mask)));
            }
            if mask == 0 {
                return Err(GraphError::NotAPartition("empty block".into()));
            }
            seen |= mask;
            out.push(mask);
        }
        if seen != self.full_mask() {
            return Err(GraphError::NotAPartition(format!(
                "vertices {{{}}} uncovered",
                join_labels(self, self.full_mask() & !seen)
            )));
        }
        Ok(CliquePartition { blocks: out })
    }

    pub fn check_cap(&self, cap: usize) -> Result<(), GraphError> {
        if self.n() > cap {
            return Err(GraphError::CapExceeded(self.n(), cap));
        }
        Ok(())
    }
}

fn join_labels(g: &Graph, mask: u64) -> String {
    g.mask_labels(mask).join(",")
}

/// Ordered clique partition of a graph's vertex set. Block order and
/// within-block vertex order (the graph's order) fix the sign conventions
/// downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    blocks: Vec<u64>,
}

impl CliquePartition {
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Vertices in "partition order": block by block, ascending inside.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|&b| bits::indices(b)).collect()
    }

    /// Index of the block containing vertex `v`, if any.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|&b| bits::contains(b, v))
    }

    pub fn block_labels(&self, g: &Graph) -> Vec<Vec<String>> {
        self.blocks.iter().map(|&b| g.mask_labels(b)).collect()
    }

    pub fn singletons(g: &Graph) -> CliquePartition {
        CliquePartition { blocks: (0..g.n()).map(|v| 1u64 << v).collect() }
    }
}

/// The antichain of minimal vertex covers of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFamily {
    covers: Vec<u64>,
}

impl CoverFamily {
    pub fn covers(&self) -> &[u64] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.covers.contains(&mask)
    }

    pub fn label_sets(&self, g: &Graph) -> Vec<Vec<String>> {
        self.covers.iter().map(|&c| g.mask_labels(c)).collect()
    }

    /// Maximum size of a minimal vertex cover (the big height of the edge
    /// ideal).
    pub fn bight(&self) -> usize {
        self.covers.iter().map(|&c| bits::popcount(c)).max().unwrap_or(0)
    }

    pub fn min_size(&self) -> usize {
        self.covers.iter().map(|&c| bits::popcount(c)).min().unwrap_or(0)
    }
}

/// Maximum independent set in a conflict graph given by adjacency masks.
/// Exhaustive with a dominance rule: a vertex with no remaining conflicts is
/// always taken, which keeps disjoint-heavy instances linear.
fn max_independent_in_conflict(conflicts: &[u64]) -> usize {
    fn go(conflicts: &[u64], live: u64) -> usize {
        if live == 0 {
            return 0;
        }
        let v = live.trailing_zeros() as usize;
        let rest = live & !(1 << v);
        if conflicts[v] & live == 0 {
            return 1 + go(conflicts, rest);
        }
        let take = 1 + go(conflicts, rest & !conflicts[v]);
        let skip = go(conflicts, rest);
        take.max(skip)
    }
    let live = if conflicts.len() == 64 { !0u64 } else { (1u64 << conflicts.len()) - 1 };
    go(conflicts, live)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k2, k4_minus_edge};
    use std::collections::BTreeSet;

    /// Test-local oracle: subsets as label sets, no bitmask sharing with the
    /// implementation path.
    fn brute_minimal_covers(g: &Graph) -> BTreeSet<BTreeSet<String>> {
        let n = g.n();
        let mut covers: Vec<BTreeSet<String>> = Vec::new();
        for mask in 0u64..(1 << n) {
            let set: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_cover =
                g.edges().iter().all(|&(u, v)| set.contains(&u) || set.contains(&v));
            if is_cover {
                covers.push(set.iter().map(|&v| g.label(v).to_string()).collect());
            }
        }
        covers
            .iter()
            .filter(|c| !covers.iter().any(|d| *d != **c && d.is_subset(c)))
            .cloned()
            .collect()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::new(&["a", "a"], &[]).unwrap_err(),
            GraphError::DuplicateVertex("a".into())
        );
        assert_eq!(
            Graph::new(&["a"], &[("a", "a")]).unwrap_err(),
            GraphError::LoopEdge("a".into())
        );
        assert_eq!(
            Graph::new(&["a"], &[("a", "b")]).unwrap_err(),
            GraphError::UnknownEndpoint("b".into())
        );
    }

    #[test]
    fn k2_covers() {
        let g = k2();
        let covers = g.minimal_vertex_covers();
        assert_eq!(covers.label_sets(&g), vec![vec!["a".to_string()], vec!["b".to_string()]]);
    }

    #[test]
    fn fixture_covers_match_brute_force() {
        let g = k4_minus_edge();
        let got: BTreeSet<BTreeSet<String>> = g
            .minimal_vertex_covers()
            .label_sets(&g)
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        assert_eq!(got, brute_minimal_covers(&g));
        let frozen: BTreeSet<BTreeSet<String>> = [
            vec!["x:1,1", "x:1,3"],
            vec!["x:1,1", "x:1,2", "x:2,1"],
            vec!["x:1,2", "x:1,3", "x:2,1"],
        ]
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
        assert_eq!(got, frozen);
    }

    #[test]
    fn fixture_maximal_sets() {
        let g = k4_minus_edge();
        let mis: BTreeSet<Vec<String>> =
            g.maximal_independent_sets().iter().map(|&m| g.mask_labels(m)).collect();
        let expect: BTreeSet<Vec<String>> = [
            vec!["x:1,1"],
            vec!["x:1,3"],
            vec!["x:1,2", "x:2,1"],
        ]
        .iter()
        .map(|v| v.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(mis, expect);

        // Brute force: x:1,1 - x:1,3 - x:2,1 is a triangle, so the two
        // maximal cliques are the two triangles sharing the x:1,1 - x:1,3
        // edge.
        let cliques: BTreeSet<Vec<String>> =
            g.maximal_cliques().iter().map(|&m| g.mask_labels(m)).collect();
        let expect: BTreeSet<Vec<String>> = [
            vec!["x:1,1", "x:1,2", "x:1,3"],
            vec!["x:1,1", "x:1,3", "x:2,1"],
        ]
        .iter()
        .map(|v| v.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(cliques, expect);

        // Independent cross-check by direct subset scan over label sets.
        let mut brute: BTreeSet<Vec<String>> = BTreeSet::new();
        for mask in 0u64..(1 << g.n()) {
            let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || g.has_edge(u, v)));
            if mask == 0 || !is_clique {
                continue;
            }
            let maximal = (0..g.n()).filter(|v| !verts.contains(v)).all(|u| {
                !verts.iter().all(|&v| g.has_edge(u, v))
            });
            if maximal {
                brute.insert(verts.iter().map(|&v| g.label(v).to_string()).collect());
            }
        }
        assert_eq!(cliques, brute);
    }

    #[test]
    fn k2_cliques() {
        let g = k2();
        assert_eq!(g.maximal_cliques(), vec![0b11]);
    }

    #[test]
    fn matching_numbers() {
        let g = k2();
        assert_eq!(g.matching_number(), 1);
        assert_eq!(g.induced_matching_number(), 1);

        // Star K_{1,3}: all edges share the center.
        let star = Graph::new(
            &["c", "l1", "l2", "l3"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        assert_eq!(star.matching_number(), 1);
        assert_eq!(star.induced_matching_number(), 1);
    }

    #[test]
    fn partition_validation() {
        let g = k4_minus_edge();
        let pi = g
            .validate_partition(&[
                vec!["x:1,1", "x:1,2", "x:1,3"],
                vec!["x:2,1"],
            ])
            .unwrap();
        assert_eq!(pi.len(), 2);

        let err = g
            .validate_partition(&[vec!["x:1,2", "x:2,1"], vec!["x:1,1", "x:1,3"]])
            .unwrap_err();
        assert!(matches!(err, GraphError::NotAClique(_)));

        let err = g.validate_partition(&[vec!["x:1,1"]]).unwrap_err();
        assert!(matches!(err, GraphError::NotAPartition(_)));

        let k2 = k2();
        assert!(k2.validate_partition(&[vec!["a"], vec!["b"]]).is_ok());
    }

    #[test]
    fn edgeless_graph_has_empty_cover() {
        let g = Graph::new(&["a"], &[]).unwrap();
        let covers = g.minimal_vertex_covers();
        assert_eq!(covers.covers(), &[0u64]);
        assert_eq!(covers.len(), 1);
    }

    #[test]
    fn covers_complement_independent_sets() {
        let g = k4_minus_edge();
        let full = g.full_mask();
        let mis: BTreeSet<u64> = g.maximal_independent_sets().into_iter().collect();
        let from_covers: BTreeSet<u64> =
            g.minimal_vertex_covers().covers().iter().map(|&c| full & !c).collect();
        assert_eq!(mis, from_covers);
    }

    proptest::proptest! {
        #[test]
        fn prop_cover_mis_duality(n in 1usize..7, edges in proptest::collection::vec((0usize..7, 0usize..7), 0..12)) {
            let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let pairs: Vec<(String, String)> = edges
                .into_iter()
                .filter(|&(a, b)| a < n && b < n && a != b)
                .map(|(a, b)| (format!("v{a}"), format!("v{b}")))
                .collect();
            let g = Graph::new(&labels, &pairs).unwrap();
            let full = g.full_mask();
            let mis: BTreeSet<u64> = g.maximal_independent_sets().into_iter().collect();
            let covers: BTreeSet<u64> =
                g.minimal_vertex_covers().covers().iter().map(|&c| full & !c).collect();
            proptest::prop_assert_eq!(mis, covers);
            proptest::prop_assert!(g.induced_matching_number() <= g.matching_number());
        }
    }
}
