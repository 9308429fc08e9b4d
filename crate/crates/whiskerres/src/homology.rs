//! Reduced simplicial homology dimensions over an exact field.
//!
//! The reduced chain complex includes the empty face, so H̃_{-1}({∅}) is
//! one-dimensional and the void complex has no homology at all. Dimensions
//! come from exact ranks of the boundary matrices (see [`crate::linalg`]).

use std::collections::HashMap;

use crate::bits;
use crate::linalg::{Field, IntMatrix};
use crate::simplicial::SimplicialComplex;

/// Reduced homology dimensions; `dims[s]` is dim H̃_{s-1}, so index 0 holds
/// the (-1)-st reduced homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// dim H̃_i, with i = -1 allowed; anything out of range is zero.
    pub fn dim(&self, i: isize) -> usize {
        let idx = i + 1;
        if idx < 0 || idx as usize >= self.dims.len() {
            0
        } else {
            self.dims[idx as usize]
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Σ (-1)^i dim H̃_i including i = -1.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(s, &d)| if s % 2 == 0 { -(d as i64) } else { d as i64 })
            .sum()
    }
}

/// Homology from an explicit full face list (every face, ∅ included for a
/// nonvoid complex). An empty list is the void complex: all zero.
pub fn homology_of_faces(faces: &[u64], field: Field) -> ReducedHomology {
    if faces.is_empty() {
        return ReducedHomology { dims: vec![] };
    }
    let max_size = faces.iter().map(|&f| bits::popcount(f)).max().unwrap();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
    for &f in faces {
        by_size[bits::popcount(f)].push(f);
    }
    for layer in &mut by_size {
        layer.sort_by_key(|&m| bits::lex_key(m));
    }
    // ranks[s] = rank of the boundary map from size-s faces to size-(s-1).
    let mut ranks = vec![0usize; max_size + 2];
    for s in 1..=max_size {
        let rows: HashMap<u64, usize> =
            by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut entries = Vec::new();
        for (col, &f) in by_size[s].iter().enumerate() {
            for (k, v) in bits::indices(f).enumerate() {
                let target = f & !(1u64 << v);
                let row = rows[&target];
                let sign = if k % 2 == 0 { 1 } else { -1 };
                entries.push((row, col, sign));
            }
        }
        ranks[s] = IntMatrix { rows: by_size[s - 1].len(), cols: by_size[s].len(), entries }
            .rank(field);
    }
    let dims = (0..=max_size)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    ReducedHomology { dims }
}

/// Reduced homology of a complex.
pub fn reduced_homology(delta: &SimplicialComplex, field: Field) -> ReducedHomology {
    homology_of_faces(&delta.all_faces(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(labels: &[&str], facets: &[u64]) -> SimplicialComplex {
        SimplicialComplex::from_faces(labels.iter().map(|s| s.to_string()).collect(), facets)
    }

    #[test]
    fn two_points_have_h0_one() {
        let delta = complex(&["a", "b"], &[0b01, 0b10]);
        for field in Field::ALL {
            let h = reduced_homology(&delta, field);
            assert_eq!(h.dim(-1), 0);
            assert_eq!(h.dim(0), 1);
        }
    }

    #[test]
    fn hollow_triangle_has_h1_one() {
        let delta = complex(&["a", "b", "c"], &[0b011, 0b101, 0b110]);
        for field in Field::ALL {
            let h = reduced_homology(&delta, field);
            assert_eq!(h.dim(0), 0);
            assert_eq!(h.dim(1), 1);
        }
    }

    #[test]
    fn empty_complex_has_hminus1_one() {
        let delta = complex(&["a"], &[0]);
        let h = reduced_homology(&delta, Field::Q);
        assert_eq!(h.dim(-1), 1);
        assert_eq!(h.dim(0), 0);
    }

    #[test]
    fn void_complex_is_all_zero() {
        let delta = SimplicialComplex::void(vec!["a".into()]);
        let h = reduced_homology(&delta, Field::Q);
        assert!(h.is_trivial());
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let delta = complex(&["a", "b", "c", "d"], &[0b1111]);
        for field in Field::ALL {
            assert!(reduced_homology(&delta, field).is_trivial());
        }
    }

    #[test]
    fn projective_plane_detects_characteristic() {
        // Minimal 6-vertex triangulation of RP^2 (every edge in exactly two
        // triangles, chi = 1): H̃_1 vanishes over Q and GF(3) but is
        // 1-dimensional over GF(2).
        let facets: Vec<u64> = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ]
        .iter()
        .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
        let delta = SimplicialComplex::from_faces(
            (0..6).map(|i| format!("v{i}")).collect(),
            &facets,
        );
        let hq = reduced_homology(&delta, Field::Q);
        assert_eq!((hq.dim(0), hq.dim(1), hq.dim(2)), (0, 0, 0));
        let h2 = reduced_homology(&delta, Field::F2);
        assert_eq!((h2.dim(0), h2.dim(1), h2.dim(2)), (0, 1, 1));
        let h3 = reduced_homology(&delta, Field::F3);
        assert_eq!((h3.dim(0), h3.dim(1), h3.dim(2)), (0, 0, 0));
    }

    #[test]
    fn euler_characteristic_matches_face_count() {
        let delta = complex(&["a", "b", "c", "d"], &[0b0111, 0b1100]);
        for field in Field::ALL {
            let h = reduced_homology(&delta, field);
            assert_eq!(h.euler(), delta.reduced_euler_characteristic());
        }
    }
}
