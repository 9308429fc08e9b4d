//! Exact rank computations over Q, GF(2) and GF(3).
//!
//! Ranks over Q use fraction-free (Bareiss) elimination: all intermediate
//! entries are minors of the original integer matrix and every division is
//! exact. The fast path runs in `i64` with checked arithmetic and falls back
//! to `BigInt` on overflow, so the result is always exact.

use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

/// Coefficient field for homology and strand computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// The rationals; ranks computed by fraction-free integer elimination.
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "f2")]
    F2,
    #[serde(rename = "f3")]
    F3,
}

impl Field {
    pub const ALL: [Field; 3] = [Field::Q, Field::F2, Field::F3];

    pub fn parse(s: &str) -> Option<Field> {
        match s {
            "q" | "Q" | "rational" => Some(Field::Q),
            "f2" | "F2" | "gf2" => Some(Field::F2),
            "f3" | "F3" | "gf3" => Some(Field::F3),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Field::Q => "q",
            Field::F2 => "f2",
            Field::F3 => "f3",
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense integer matrix given as (rows, cols, sparse entries).
/// Entries outside the list are zero; duplicate positions are summed.
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl IntMatrix {
    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            Field::Q => rank_q(self),
            Field::F2 => rank_f2(self),
            Field::F3 => rank_fp(self, 3),
        }
    }
}

fn dense_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        a[r][c] += v;
    }
    a
}

fn rank_q(m: &IntMatrix) -> usize {
    match bareiss_i64(dense_i64(m)) {
        Some(rank) => rank,
        None => bareiss_bigint(m),
    }
}

/// Fraction-free elimination in i64. Returns None on overflow; the pivot is
/// chosen with minimal absolute value to keep intermediate minors small,
/// which in practice keeps boundary-matrix eliminations inside i64.
fn bareiss_i64(mut a: Vec<Vec<i64>>) -> Option<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut prev: i64 = 1;
    let mut rank = 0;
    let mut row_live: Vec<usize> = (0..rows).collect();
    let mut col_live: Vec<usize> = (0..cols).collect();
    while !row_live.is_empty() && !col_live.is_empty() {
        let mut pivot: Option<(usize, usize)> = None;
        for (ri, &r) in row_live.iter().enumerate() {
            for (ci, &c) in col_live.iter().enumerate() {
                let v = a[r][c];
                if v != 0 && pivot.map_or(true, |(pr, pc)| v.abs() < a[row_live[pr]][col_live[pc]].abs()) {
                    pivot = Some((ri, ci));
                    if v.abs() == 1 {
                        break;
                    }
                }
            }
            if let Some((pr, pc)) = pivot {
                if a[row_live[pr]][col_live[pc]].abs() == 1 {
                    break;
                }
            }
        }
        let Some((pri, pci)) = pivot else { break };
        let prow = row_live.remove(pri);
        let pcol = col_live.remove(pci);
        let p = a[prow][pcol];
        for &r in &row_live {
            for &c in &col_live {
                let t1 = a[r][c].checked_mul(p)?;
                let t2 = a[r][pcol].checked_mul(a[prow][c])?;
                let num = t1.checked_sub(t2)?;
                debug_assert_eq!(num % prev, 0);
                a[r][c] = num / prev;
            }
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_bigint(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        a[r][c] += BigInt::from(v);
    }
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row_live: Vec<usize> = (0..m.rows).collect();
    let mut col_live: Vec<usize> = (0..m.cols).collect();
    while !row_live.is_empty() && !col_live.is_empty() {
        let mut pivot: Option<(usize, usize)> = None;
        'scan: for (ri, &r) in row_live.iter().enumerate() {
            for (ci, &c) in col_live.iter().enumerate() {
                if a[r][c].sign() != Sign::NoSign {
                    pivot = Some((ri, ci));
                    break 'scan;
                }
            }
        }
        let Some((pri, pci)) = pivot else { break };
        let prow = row_live.remove(pri);
        let pcol = col_live.remove(pci);
        let p = a[prow][pcol].clone();
        for &r in &row_live {
            for &c in &col_live {
                let num = &a[r][c] * &p - &a[r][pcol] * &a[prow][c];
                a[r][c] = num / &prev;
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// GF(2) rank with rows packed into machine words.
fn rank_f2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows];
    for &(r, c, v) in &m.entries {
        if v.rem_euclid(2) == 1 {
            rows[r][c / 64] ^= 1u64 << (c % 64);
        }
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, b) = (c / 64, c % 64);
        let Some(p) = (rank..m.rows).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail {
            if row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(prow.iter()) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// GF(p) rank via plain elimination on u32 residues (p odd prime, p small).
fn rank_fp(m: &IntMatrix, p: u32) -> usize {
    let mut a = vec![vec![0u32; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        a[r][c] = (a[r][c] + v.rem_euclid(p as i64) as u32) % p;
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(pr) = (rank..m.rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail {
            let f = row[c];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(prow.iter()) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn mod_inverse(v: u32, p: u32) -> u32 {
    // Fermat; p is prime and tiny.
    let mut acc = 1u64;
    let mut base = v as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, data: &[&[i64]]) -> IntMatrix {
        let mut entries = Vec::new();
        for (r, row) in data.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r, c, v));
                }
            }
        }
        IntMatrix { rows, cols, entries }
    }

    #[test]
    fn rank_agrees_across_fields_on_unimodular_example() {
        let m = mat(3, 3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        // det = 2: full rank over Q and GF(3), rank 2 over GF(2).
        assert_eq!(m.rank(Field::Q), 3);
        assert_eq!(m.rank(Field::F3), 3);
        assert_eq!(m.rank(Field::F2), 2);
    }

    #[test]
    fn rank_of_zero_and_empty() {
        let z = mat(2, 2, &[&[0, 0], &[0, 0]]);
        assert_eq!(z.rank(Field::Q), 0);
        let e = IntMatrix { rows: 0, cols: 5, entries: vec![] };
        assert_eq!(e.rank(Field::Q), 0);
    }

    #[test]
    fn rank_with_duplicate_entries_summed() {
        let m = IntMatrix { rows: 1, cols: 1, entries: vec![(0, 0, 1), (0, 0, -1)] };
        assert_eq!(m.rank(Field::Q), 0);
    }

    #[test]
    fn bigint_path_matches_i64_path() {
        let m = mat(
            4,
            4,
            &[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8], &[9, 7, 9, 3]],
        );
        assert_eq!(m.rank(Field::Q), bareiss_bigint(&m));
    }
}
