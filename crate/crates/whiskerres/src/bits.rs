//! Small-set arithmetic on `u64` bitmasks.
//!
//! Everything in this crate that enumerates subsets (covers, cliques, faces,
//! strands) works on vertex sets of at most [`MAX_GROUND`] elements, so a
//! single machine word is enough.

/// Hard ceiling on ground-set sizes handled by the bitmask representation.
pub const MAX_GROUND: usize = 60;

/// Iterator over the bit indices set in a mask, ascending.
pub fn indices(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn contains(mask: u64, i: usize) -> bool {
    mask >> i & 1 == 1
}

pub fn popcount(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// Sort key realizing lexicographic order on ascending index lists, so that
/// e.g. {0} < {0,1} < {0,2} < {1}.
pub fn lex_key(mask: u64) -> Vec<usize> {
    indices(mask).collect()
}

/// All subsets of `mask`, in submask-enumeration order (ends with `mask`).
pub fn subsets_of(mask: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << popcount(mask).min(24));
    let mut s = 0u64;
    loop {
        out.push(s);
        if s == mask {
            break;
        }
        s = (s.wrapping_sub(mask)) & mask;
    }
    out
}

/// Binomial coefficient as an exact u64; small arguments only.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_is_complete() {
        let subs = subsets_of(0b1011);
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s & !0b1011 == 0));
    }

    #[test]
    fn lex_key_orders_like_sorted_index_lists() {
        let mut masks = vec![0b10u64, 0b01, 0b11, 0b101];
        masks.sort_by_key(|&m| lex_key(m));
        assert_eq!(masks, vec![0b01, 0b11, 0b101, 0b10]);
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
