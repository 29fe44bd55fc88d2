//! Brute-force chain census.
//!
//! Walks every strict chain `x_0 < x_1 < … < x_k` directly from the `≤`
//! table. No matrices are involved, which is what makes this an independent
//! check on [`crate::incidence::chain_counts`].

use crate::error::PosetError;
use crate::poset::Poset;

/// Chain enumeration is exponential; the worst case (a total order) has
/// `2^n − 1` chains.
pub const DEFAULT_SIZE_GUARD: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCensus {
    /// `counts[k]` = number of chains of length `k` (with `k + 1` elements),
    /// for `k = 0..n`.
    pub counts: Vec<u64>,
    pub total: u64,
}

impl OracleCensus {
    /// Alternating sum `c_0 − c_1 + c_2 − …`.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

pub fn enumerate_chains(p: &Poset, size_guard: usize) -> Result<OracleCensus, PosetError> {
    let n = p.len();
    if n > size_guard {
        return Err(PosetError::SizeGuard {
            requested: n,
            limit: size_guard,
        });
    }
    let mut counts = vec![0u64; n];
    for root in 0..n {
        extend(p, root, 0, &mut counts);
    }
    let total = counts.iter().sum();
    Ok(OracleCensus { counts, total })
}

// `top` is the current maximum of a chain of length `len`
fn extend(p: &Poset, top: usize, len: usize, counts: &mut [u64]) {
    counts[len] += 1;
    for next in 0..p.len() {
        if next != top && p.leq(top, next) {
            extend(p, next, len + 1, counts);
        }
    }
}

pub fn euler_char_oracle(p: &Poset, size_guard: usize) -> Result<i64, PosetError> {
    Ok(enumerate_chains(p, size_guard)?.euler_characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, boolean_lattice, chain, Mode, PosetSpec};

    fn two_plus_two() -> Poset {
        Poset::build(&PosetSpec {
            names: ["a", "b", "c", "d"].map(String::from).to_vec(),
            mode: Mode::Covers,
            pairs: vec![("a".into(), "b".into()), ("c".into(), "d".into())],
        })
        .unwrap()
    }

    #[test]
    fn census_examples() {
        assert_eq!(
            enumerate_chains(&antichain(3), 14).unwrap().counts,
            [3, 0, 0]
        );
        assert_eq!(enumerate_chains(&chain(3), 14).unwrap().counts, [3, 3, 1]);
        let b = enumerate_chains(&boolean_lattice(2), 14).unwrap();
        assert_eq!(b.counts, [4, 5, 2, 0]);
        assert_eq!(b.total, 11);
        assert_eq!(
            enumerate_chains(&two_plus_two(), 14).unwrap().counts,
            [4, 2, 0, 0]
        );
        assert!(enumerate_chains(&antichain(0), 14)
            .unwrap()
            .counts
            .is_empty());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char_oracle(&boolean_lattice(2), 14).unwrap(), 1);
        assert_eq!(euler_char_oracle(&chain(6), 14).unwrap(), 1);
        assert_eq!(euler_char_oracle(&two_plus_two(), 14).unwrap(), 2);
        assert_eq!(euler_char_oracle(&antichain(0), 14).unwrap(), 0);
    }

    #[test]
    fn total_order_has_all_nonempty_subsets() {
        let c = enumerate_chains(&chain(10), 14).unwrap();
        assert_eq!(c.total, (1 << 10) - 1);
    }

    #[test]
    fn guard() {
        assert_eq!(
            enumerate_chains(&chain(15), DEFAULT_SIZE_GUARD),
            Err(PosetError::SizeGuard {
                requested: 15,
                limit: 14
            })
        );
        assert!(enumerate_chains(&chain(15), 15).is_ok());
    }
}
