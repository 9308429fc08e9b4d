//! Graded Betti tables and local-cohomology Hilbert series of
//! Stanley-Reisner rings, computed from simplicial homology two independent
//! ways.
//!
//! For a complex Δ on n vertices the table of k[Δ] is computed both as the
//! restriction sum over W ⊆ [n] and as the link sum over the faces of the
//! Alexander dual; the two routes must agree exactly and a disagreement is
//! reported as an error rather than papered over.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::homology::{homology_of_faces, ReducedHomology};
use crate::linalg::Field;
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochsterError {
    #[error("restriction and dual-link Betti routes disagree at (i,j)=({i},{j}): {restriction} vs {dual_link}")]
    OracleMismatch { i: usize, j: usize, restriction: u64, dual_link: u64 },
    #[error("Betti data of the void complex is undefined")]
    VoidComplex,
}

/// Which module a Betti table describes: an ideal I or the quotient S/I.
/// The homological shift between the two is β_{i,j}(I) = β_{i+1,j}(S/I).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableConvention {
    #[serde(rename = "ideal")]
    Ideal,
    #[serde(rename = "quotient")]
    Quotient,
}

/// Finitely supported table of graded Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub module: String,
    pub convention: TableConvention,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(module: impl Into<String>, convention: TableConvention) -> BettiTable {
        BettiTable { module: module.into(), convention, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value != 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological index present.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity: max of j - i over nonzero entries.
    pub fn reg(&self) -> isize {
        self.entries.keys().map(|&(i, j)| j as isize - i as isize).max().unwrap_or(0)
    }

    /// Total Betti number at homological index i.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(&(k, _), _)| k == i).map(|(_, &v)| v).sum()
    }

    /// Total Betti number at the projective dimension (the Cohen-Macaulay
    /// type when the module is a Cohen-Macaulay quotient).
    pub fn top_total(&self) -> u64 {
        self.total(self.pd())
    }

    /// Reindexes a quotient table as the table of its defining ideal:
    /// drops the (0,0) entry and shifts i down by one.
    pub fn to_ideal(&self, module: impl Into<String>) -> BettiTable {
        assert_eq!(self.convention, TableConvention::Quotient);
        let mut out = BettiTable::new(module, TableConvention::Ideal);
        for (i, j, v) in self.entries() {
            if i == 0 {
                assert_eq!((i, j, v), (0, 0, 1), "quotient table must start at β_{{0,0}} = 1");
                continue;
            }
            out.add(i - 1, j, v);
        }
        out
    }

    /// Entry-wise equality, ignoring the module name.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    pub fn first_difference(&self, other: &BettiTable) -> Option<(usize, usize, u64, u64)> {
        let keys: std::collections::BTreeSet<(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        for (i, j) in keys {
            let (a, b) = (self.get(i, j), other.get(i, j));
            if a != b {
                return Some((i, j, a, b));
            }
        }
        None
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "betti table of {} ({:?})", self.module, self.convention)?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  beta_{{{i},{j}}} = {v}")?;
        }
        Ok(())
    }
}

/// Hilbert series of a local cohomology module, written as a finite
/// integer combination Σ c_k (t-1)^{-k}; the identity
/// t^{-1}/(1-t^{-1}) = (t-1)^{-1} is the normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PoleSeries {
    coeffs: BTreeMap<usize, i64>,
}

impl PoleSeries {
    pub fn zero() -> PoleSeries {
        PoleSeries::default()
    }

    pub fn add(&mut self, pole_order: usize, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(pole_order).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&pole_order);
        }
    }

    pub fn coeff(&self, pole_order: usize) -> i64 {
        self.coeffs.get(&pole_order).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }
}

impl std::fmt::Display for PoleSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, &c)| match k {
                0 => format!("{c}"),
                _ if c == 1 => format!("(t-1)^-{k}"),
                _ => format!("{c}(t-1)^-{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// β_{i,j}(k[Δ]) by the restriction route: for each W the restricted
/// complex Δ_W contributes dim H̃_{j-i-1}(Δ_W) at j = |W|. Subsets are
/// processed in parallel.
pub fn betti_restriction(delta: &SimplicialComplex, field: Field) -> BettiTable {
    let faces = delta.all_faces();
    let full = delta.full_mask();
    let subsets: Vec<u64> = bits::subsets_of(full);
    let partials: Vec<BTreeMap<(usize, usize), u64>> = subsets
        .par_iter()
        .map(|&w| {
            let restricted: Vec<u64> = faces.iter().copied().filter(|&f| f & !w == 0).collect();
            let h = homology_of_faces(&restricted, field);
            let j = bits::popcount(w);
            let mut cells = BTreeMap::new();
            for s in 0..=j {
                // dim H̃_{s-1} lands at homological index i = j - s.
                let d = h.dim(s as isize - 1);
                if d > 0 {
                    *cells.entry((j - s, j)).or_insert(0) += d as u64;
                }
            }
            cells
        })
        .collect();
    let mut table = BettiTable::new("k[Δ]", TableConvention::Quotient);
    for cells in partials {
        for ((i, j), v) in cells {
            table.add(i, j, v);
        }
    }
    table
}

/// β_{i,j}(k[Δ]) by the dual-link route: faces F of Δ^∨ with |F| = n - j
/// contribute dim H̃_{i-2}(link_{Δ^∨} F). Valid for i ≥ 1; the (0,0) entry
/// is the trivial generator of the quotient.
pub fn betti_dual_link(delta: &SimplicialComplex, field: Field) -> BettiTable {
    let n = delta.n();
    let dual = delta.alexander_dual();
    let dual_faces = dual.all_faces();
    let face_set: HashSet<u64> = dual_faces.iter().copied().collect();
    let partials: Vec<BTreeMap<(usize, usize), u64>> = dual_faces
        .par_iter()
        .map(|&f| {
            let link: Vec<u64> = dual_faces
                .iter()
                .copied()
                .filter(|&h| h & f == 0 && face_set.contains(&(h | f)))
                .collect();
            let h = homology_of_faces(&link, field);
            let j = n - bits::popcount(f);
            let mut cells = BTreeMap::new();
            for s in 0..=n {
                // dim H̃_{s-1} contributes at i = s + 1 ≥ 1.
                let d = h.dim(s as isize - 1);
                if d > 0 {
                    *cells.entry((s + 1, j)).or_insert(0) += d as u64;
                }
            }
            cells
        })
        .collect();
    let mut table = BettiTable::new("k[Δ]", TableConvention::Quotient);
    if !delta.is_void() {
        table.add(0, 0, 1);
    }
    for cells in partials {
        for ((i, j), v) in cells {
            table.add(i, j, v);
        }
    }
    table
}

/// The two-route Betti oracle: computes both forms and insists they agree.
pub fn hochster_betti(
    delta: &SimplicialComplex,
    field: Field,
) -> Result<BettiTable, HochsterError> {
    if delta.is_void() {
        return Err(HochsterError::VoidComplex);
    }
    let restriction = betti_restriction(delta, field);
    let dual_link = betti_dual_link(delta, field);
    if let Some((i, j, a, b)) = restriction.first_difference(&dual_link) {
        return Err(HochsterError::OracleMismatch { i, j, restriction: a, dual_link: b });
    }
    Ok(restriction)
}

/// Hilbert series of all local cohomology modules H^j_m(k[Δ]) for
/// j = 0 ..= dim k[Δ], via the face-link sum: the coefficient of
/// (t-1)^{-k} in the j-th series is Σ_{|F|=k} dim H̃_{j-k-1}(link_Δ F).
pub fn local_cohomology_all(delta: &SimplicialComplex, field: Field) -> Vec<PoleSeries> {
    let Some(dim_ring) = delta.max_face_size() else {
        return vec![];
    };
    let faces = delta.all_faces();
    let face_set: HashSet<u64> = faces.iter().copied().collect();
    let link_homology: Vec<(usize, ReducedHomology)> = faces
        .par_iter()
        .map(|&f| {
            let link: Vec<u64> = faces
                .iter()
                .copied()
                .filter(|&h| h & f == 0 && face_set.contains(&(h | f)))
                .collect();
            (bits::popcount(f), homology_of_faces(&link, field))
        })
        .collect();
    (0..=dim_ring)
        .map(|j| {
            let mut series = PoleSeries::zero();
            for (k, h) in &link_homology {
                let d = h.dim(j as isize - *k as isize - 1);
                series.add(*k, d as i64);
            }
            series
        })
        .collect()
}

/// Single local cohomology series H^j_m(k[Δ]).
pub fn local_cohomology(delta: &SimplicialComplex, j: usize, field: Field) -> PoleSeries {
    local_cohomology_all(delta, field).into_iter().nth(j).unwrap_or_else(PoleSeries::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Graph;

    fn independence(g: &Graph) -> SimplicialComplex {
        SimplicialComplex::independence_complex(g)
    }

    #[test]
    fn principal_ideal_table() {
        // Δ(K2): k[Δ] = k[x,y]/(xy).
        let delta = independence(&fixtures::k2());
        let table = hochster_betti(&delta, Field::Q).unwrap();
        assert_eq!(table.get(0, 0), 1);
        assert_eq!(table.get(1, 2), 1);
        assert_eq!(table.entries().count(), 2);
        assert_eq!(table.pd(), 1);
        assert_eq!(table.reg(), 1);
    }

    #[test]
    fn cover_ideal_of_whiskered_fixture() {
        // J(G^π) for the running fixture equals the Stanley-Reisner ideal of
        // the dual of the independence complex; its table was derived by the
        // restriction sum over all W.
        let g = fixtures::k4_minus_edge();
        let pi = fixtures::k4_minus_edge_partition(&g);
        let wg = crate::constructions::clique_whisker(&g, &pi);
        let delta = independence(&wg.graph);
        let dual = delta.alexander_dual();
        let quotient = hochster_betti(&dual, Field::Q).unwrap();
        let ideal = quotient.to_ideal("J");
        assert_eq!(ideal.get(0, 4), 6);
        assert_eq!(ideal.get(1, 5), 6);
        assert_eq!(ideal.get(2, 6), 1);
        assert_eq!(ideal.entries().count(), 3);
    }

    #[test]
    fn betti_tables_characteristic_free_on_fixture() {
        let delta = independence(&fixtures::k4_minus_edge());
        let q = hochster_betti(&delta, Field::Q).unwrap();
        let f2 = hochster_betti(&delta, Field::F2).unwrap();
        let f3 = hochster_betti(&delta, Field::F3).unwrap();
        assert!(q.same_entries(&f2));
        assert!(q.same_entries(&f3));
    }

    #[test]
    fn local_cohomology_of_k2_quotient() {
        // k[x,w]/(xw): H^0 = 0 and H^1 has series 1 + 2(t-1)^{-1}, from the
        // faces ∅ (two points, H̃_0 = 1) and the two vertices (links {∅}).
        let delta = independence(&fixtures::k2());
        let all = local_cohomology_all(&delta, Field::Q);
        assert_eq!(all.len(), 2);
        assert!(all[0].is_zero());
        let mut expect = PoleSeries::zero();
        expect.add(0, 1);
        expect.add(1, 2);
        assert_eq!(all[1], expect);
    }

    #[test]
    fn cone_kills_h0() {
        // A cone (full simplex) has zero local cohomology below the top.
        let delta = SimplicialComplex::simplex(vec!["a".into(), "b".into()]);
        let all = local_cohomology_all(&delta, Field::Q);
        assert!(all[0].is_zero());
        assert!(all[1].is_zero());
    }

    #[test]
    fn bridge_between_series_and_dual_betti() {
        // F(H^j(k[Δ])) = Σ_i β_{i, n-j+i}(I_{Δ^∨}) (t-1)^{-(j-i)}.
        let g = fixtures::k2();
        let delta = independence(&g);
        let n = delta.n();
        let dual_ideal = hochster_betti(&delta.alexander_dual(), Field::Q)
            .unwrap()
            .to_ideal("I");
        for (j, series) in local_cohomology_all(&delta, Field::Q).iter().enumerate() {
            let mut expect = PoleSeries::zero();
            for (i, jj, v) in dual_ideal.entries() {
                if jj + j == n + i && j >= i {
                    expect.add(j - i, v as i64);
                }
            }
            assert_eq!(series, &expect, "series mismatch at j={j}");
        }
    }
}
