//! Vertex decomposability of simplicial complexes, with certificates.
//!
//! A complex is vertex decomposable when it is a simplex (or void), or some
//! vertex x has vertex-decomposable link and deletion and every facet of the
//! deletion is a facet of the whole complex. The search memoizes on the
//! canonical facet encoding of each induced subcomplex, and a positive
//! answer carries a shedding tree that [`verify_certificate`] can replay
//! independently.

use std::collections::HashMap;
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::simplicial::SimplicialComplex;

/// Shedding tree over vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum VdTree {
    /// Void complex or a single facet (a simplex on its support).
    Leaf,
    Shed { vertex: String, link: Box<VdTree>, del: Box<VdTree> },
}

#[derive(Debug, Clone)]
pub struct VdResult {
    pub decomposable: bool,
    pub certificate: Option<VdTree>,
    /// On failure, the facet lists of a subcomplex where every candidate
    /// shedding vertex fails.
    pub stuck: Option<Vec<Vec<String>>>,
}

impl VdResult {
    /// Shedding vertices in pre-order, for display.
    pub fn shedding_order(&self) -> Vec<String> {
        fn walk(t: &VdTree, out: &mut Vec<String>) {
            if let VdTree::Shed { vertex, link, del } = t {
                out.push(vertex.clone());
                walk(link, out);
                walk(del, out);
            }
        }
        let mut out = Vec::new();
        if let Some(t) = &self.certificate {
            walk(t, &mut out);
        }
        out
    }
}

#[derive(Clone)]
enum Tree {
    Leaf,
    Shed { vertex: usize, link: Rc<Tree>, del: Rc<Tree> },
}

fn support(facets: &[u64]) -> u64 {
    facets.iter().fold(0, |m, &f| m | f)
}

fn maximal(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_unstable();
    faces.dedup();
    let keep: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && f & !g == 0))
        .collect();
    let mut keep = keep;
    keep.sort_by_key(|&m| bits::lex_key(m));
    keep
}

fn search(facets: &[u64], memo: &mut HashMap<Vec<u64>, Option<Rc<Tree>>>) -> Option<Rc<Tree>> {
    if facets.len() <= 1 {
        return Some(Rc::new(Tree::Leaf));
    }
    let key: Vec<u64> = facets.to_vec();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut found: Option<Rc<Tree>> = None;
    for x in bits::indices(support(facets)) {
        let bit = 1u64 << x;
        let del = maximal(facets.iter().map(|&f| f & !bit).collect());
        // Shedding condition: every facet of the deletion stays a facet.
        if !del.iter().all(|f| facets.contains(f)) {
            continue;
        }
        let link = maximal(
            facets.iter().filter(|&&f| f & bit != 0).map(|&f| f & !bit).collect(),
        );
        let Some(link_tree) = search(&link, memo) else { continue };
        let Some(del_tree) = search(&del, memo) else { continue };
        found = Some(Rc::new(Tree::Shed { vertex: x, link: link_tree, del: del_tree }));
        break;
    }
    memo.insert(key, found.clone());
    found
}

/// Decides vertex decomposability by exhaustive shedding search.
pub fn vertex_decomposable(delta: &SimplicialComplex) -> VdResult {
    let mut memo = HashMap::new();
    let facets: Vec<u64> = delta.facets().to_vec();
    match search(&facets, &mut memo) {
        Some(tree) => VdResult {
            decomposable: true,
            certificate: Some(label_tree(&tree, delta)),
            stuck: None,
        },
        None => {
            // Find a smallest memoized failure for the witness.
            let stuck = memo
                .iter()
                .filter(|(_, v)| v.is_none())
                .map(|(k, _)| k.clone())
                .min_by_key(|k| (k.len(), k.clone()))
                .unwrap_or(facets);
            VdResult {
                decomposable: false,
                certificate: None,
                stuck: Some(stuck.iter().map(|&f| delta.mask_labels(f)).collect()),
            }
        }
    }
}

fn label_tree(tree: &Tree, delta: &SimplicialComplex) -> VdTree {
    match tree {
        Tree::Leaf => VdTree::Leaf,
        Tree::Shed { vertex, link, del } => VdTree::Shed {
            vertex: delta.labels()[*vertex].clone(),
            link: Box::new(label_tree(link, delta)),
            del: Box::new(label_tree(del, delta)),
        },
    }
}

/// Replays a shedding tree against a complex, checking every condition of
/// the definition. Independent of the search above.
pub fn verify_certificate(delta: &SimplicialComplex, tree: &VdTree) -> bool {
    fn replay(labels: &[String], facets: &[u64], tree: &VdTree) -> bool {
        match tree {
            VdTree::Leaf => facets.len() <= 1,
            VdTree::Shed { vertex, link, del } => {
                let Some(x) = labels.iter().position(|l| l == vertex) else {
                    return false;
                };
                let bit = 1u64 << x;
                if facets.iter().all(|&f| f & bit == 0) {
                    return false; // not a vertex of the complex
                }
                let del_facets = maximal(facets.iter().map(|&f| f & !bit).collect());
                if !del_facets.iter().all(|f| facets.contains(f)) {
                    return false;
                }
                let link_facets = maximal(
                    facets.iter().filter(|&&f| f & bit != 0).map(|&f| f & !bit).collect(),
                );
                replay(labels, &link_facets, link) && replay(labels, &del_facets, del)
            }
        }
    }
    replay(delta.labels(), &delta.facets().to_vec(), tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn simplex_and_void_are_decomposable() {
        let simplex = SimplicialComplex::simplex(vec!["a".into(), "b".into(), "c".into()]);
        assert!(vertex_decomposable(&simplex).decomposable);
        let void = SimplicialComplex::void(vec!["a".into()]);
        assert!(vertex_decomposable(&void).decomposable);
        let empty = SimplicialComplex::empty_complex(vec!["a".into()]);
        assert!(vertex_decomposable(&empty).decomposable);
    }

    #[test]
    fn independence_complex_of_c4_is_not_decomposable() {
        // Two disjoint diagonals: every candidate vertex fails the facet
        // condition, so the exhaustive search rejects.
        let delta = SimplicialComplex::independence_complex(&fixtures::cycle4());
        let res = vertex_decomposable(&delta);
        assert!(!res.decomposable);
        assert!(res.stuck.is_some());
    }

    #[test]
    fn two_points_are_decomposable_with_valid_certificate() {
        let delta = SimplicialComplex::from_faces(
            vec!["a".into(), "b".into()],
            &[0b01, 0b10],
        );
        let res = vertex_decomposable(&delta);
        assert!(res.decomposable);
        let cert = res.certificate.unwrap();
        assert!(verify_certificate(&delta, &cert));
        // A certificate for the wrong complex fails the replay.
        let other = SimplicialComplex::independence_complex(&fixtures::cycle4());
        assert!(!verify_certificate(&other, &cert));
    }

    #[test]
    fn whiskered_fixture_is_decomposable() {
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = crate::constructions::clique_whisker(&g, &pi);
        let delta = SimplicialComplex::independence_complex(&wg.graph);
        let res = vertex_decomposable(&delta);
        assert!(res.decomposable);
        assert!(verify_certificate(&delta, &res.certificate.unwrap()));
    }
}
