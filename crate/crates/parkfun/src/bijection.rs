//! The bijection between `k`-tuples of weakly increasing `(r,1)`-parking
//! functions and weakly increasing `(r,k)`-parking functions.
//!
//! Forward direction: shift the `i`-th component up by
//! `r * (total length of earlier components) + i - 1` and concatenate.
//! Inverse: normalize to `c_i = b_i - r i + r - 1`, factor at the strict
//! left-to-right maxima of `c`, renormalize each factor to start at 1, and
//! spread empty components according to the gaps between maxima.

use crate::error::{Error, Result};
use crate::parking::{is_rk_parking, parking_statistic, PrefSeq};

/// An ordered tuple of weakly increasing `(r,1)`-parking functions, empty
/// components allowed. The tuple remembers the `r` it was validated against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WipfTuple {
    r: u32,
    components: Vec<PrefSeq>,
}

impl WipfTuple {
    pub fn new(r: u32, components: Vec<PrefSeq>) -> Result<Self> {
        for (index, alpha) in components.iter().enumerate() {
            if !alpha.is_weakly_increasing() || !is_rk_parking(alpha, r, 1) {
                return Err(Error::InvalidComponent { index, r });
            }
        }
        Ok(WipfTuple { r, components })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn components(&self) -> &[PrefSeq] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Sum of the component lengths; equals the length of the merged image.
    pub fn total_len(&self) -> usize {
        self.components.iter().map(|a| a.len()).sum()
    }
}

/// Merge a tuple into a single weakly increasing `(r,k)`-parking function,
/// where `k` is the number of components.
pub fn psi(tuple: &WipfTuple) -> PrefSeq {
    let r = tuple.r as u64;
    let mut merged: Vec<u32> = Vec::with_capacity(tuple.total_len());
    let mut consumed: u64 = 0;
    for (i, alpha) in tuple.components.iter().enumerate() {
        let shift = r * consumed + i as u64;
        for &a in alpha.entries() {
            merged.push((a as u64 + shift) as u32);
        }
        consumed += alpha.len() as u64;
    }
    PrefSeq::new(merged).expect("shifted entries stay positive")
}

/// Split a weakly increasing `(r,k)`-parking function into its unique
/// preimage tuple of `k` weakly increasing `(r,1)`-parking functions.
pub fn psi_inv(beta: &PrefSeq, r: u32, k: u32) -> Result<WipfTuple> {
    if !beta.is_weakly_increasing() || !is_rk_parking(beta, r, k) {
        return Err(Error::NotParkingFunction { r, k });
    }
    if beta.is_empty() {
        return WipfTuple::new(r, vec![PrefSeq::empty(); k as usize]);
    }
    let b = beta.entries();
    let n = b.len();
    // c_i = b_i - r i + r - 1, chosen so c_1 = b_1 - 1 and c is bounded by k - 1
    let c: Vec<i64> = b
        .iter()
        .enumerate()
        .map(|(i0, &bi)| bi as i64 - r as i64 * (i0 as i64 + 1) + r as i64 - 1)
        .collect();
    // strict left-to-right maxima; the first index always qualifies
    let mut maxima: Vec<usize> = Vec::new();
    let mut best = i64::MIN;
    for (i, &ci) in c.iter().enumerate() {
        if ci > best {
            maxima.push(i);
            best = ci;
        }
    }
    // the running maximum c value at the start of a factor is one less than
    // the component index the factor came from, so the factor starting with
    // c = v sits at component v + 1; empties fill every skipped slot,
    // including those before the first factor
    let mut components: Vec<PrefSeq> = Vec::with_capacity(k as usize);
    for (m, &start) in maxima.iter().enumerate() {
        let gap = if m == 0 {
            c[start]
        } else {
            c[start] - c[maxima[m - 1]] - 1
        };
        for _ in 0..gap {
            components.push(PrefSeq::empty());
        }
        let end = maxima.get(m + 1).copied().unwrap_or(n);
        let base = b[start] - 1;
        let factor: Vec<u32> = b[start..end].iter().map(|&x| x - base).collect();
        components.push(PrefSeq::new(factor)?);
    }
    while components.len() < k as usize {
        components.push(PrefSeq::empty());
    }
    debug_assert_eq!(components.len(), k as usize);
    WipfTuple::new(r, components)
}

/// Verify the statistic transport identity for one sequence: the sum
/// statistic of `beta` equals
/// `sum_j (statistic of component j at k = 1) + (k - j) * length(component j)`.
pub fn statistic_transport_holds(beta: &PrefSeq, r: u32, k: u32) -> Result<bool> {
    let lhs = parking_statistic(beta, r, k)?;
    let tuple = psi_inv(beta, r, k)?;
    let mut rhs: u64 = 0;
    for (j0, alpha) in tuple.components().iter().enumerate() {
        let s = parking_statistic(alpha, r, 1)?;
        rhs += s + (k as u64 - (j0 as u64 + 1)) * alpha.len() as u64;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::enumerate_wipf;

    fn seq(v: &[u32]) -> PrefSeq {
        PrefSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn forward_worked_example() {
        let tuple = WipfTuple::new(
            2,
            vec![
                seq(&[1, 2]),
                PrefSeq::empty(),
                PrefSeq::empty(),
                seq(&[1]),
                seq(&[1, 3, 4]),
            ],
        )
        .unwrap();
        assert_eq!(psi(&tuple), seq(&[1, 2, 8, 11, 13, 14]));
    }

    #[test]
    fn forward_edge_cases() {
        let empties = WipfTuple::new(3, vec![PrefSeq::empty(); 4]).unwrap();
        assert_eq!(psi(&empties), PrefSeq::empty());
        // a single component merges to itself
        for alpha in enumerate_wipf(4, 2, 1) {
            let tuple = WipfTuple::new(2, vec![alpha.clone()]).unwrap();
            assert_eq!(psi(&tuple), alpha);
        }
    }

    #[test]
    fn inverse_worked_example() {
        let beta = seq(&[1, 2, 2, 10, 12, 14, 15, 19, 22]);
        let tuple = psi_inv(&beta, 2, 7).unwrap();
        let expected = vec![
            seq(&[1, 2, 2]),
            PrefSeq::empty(),
            PrefSeq::empty(),
            seq(&[1, 3, 5, 6]),
            seq(&[1]),
            seq(&[1]),
            PrefSeq::empty(),
        ];
        assert_eq!(tuple.components(), expected.as_slice());
        // and the tuple merges back
        assert_eq!(psi(&tuple), beta);
    }

    #[test]
    fn inverse_of_empty_sequence() {
        let tuple = psi_inv(&PrefSeq::empty(), 2, 3).unwrap();
        assert_eq!(tuple.components(), vec![PrefSeq::empty(); 3].as_slice());
    }

    #[test]
    fn inverse_rejects_non_parking_input() {
        assert!(matches!(
            psi_inv(&seq(&[2, 2]), 1, 1),
            Err(Error::NotParkingFunction { .. })
        ));
        // not weakly increasing
        assert!(psi_inv(&seq(&[2, 1]), 1, 2).is_err());
    }

    #[test]
    fn tuple_validation_rejects_bad_components() {
        assert!(matches!(
            WipfTuple::new(1, vec![seq(&[2])]),
            Err(Error::InvalidComponent { index: 0, r: 1 })
        ));
        assert!(matches!(
            WipfTuple::new(2, vec![seq(&[1]), seq(&[1, 2, 9])]),
            Err(Error::InvalidComponent { index: 1, r: 2 })
        ));
    }

    /// All tuples with the given number of components and total length.
    fn all_tuples(r: u32, k: u32, total: usize) -> Vec<WipfTuple> {
        let pools: Vec<Vec<PrefSeq>> = (0..=total)
            .map(|n| enumerate_wipf(n as u32, r, 1))
            .collect();
        let mut out = Vec::new();
        fn rec(
            pools: &[Vec<PrefSeq>],
            k: u32,
            left: usize,
            acc: &mut Vec<PrefSeq>,
            r: u32,
            out: &mut Vec<WipfTuple>,
        ) {
            if acc.len() == k as usize {
                if left == 0 {
                    out.push(WipfTuple::new(r, acc.clone()).unwrap());
                }
                return;
            }
            for n in 0..=left {
                for alpha in &pools[n] {
                    acc.push(alpha.clone());
                    rec(pools, k, left - n, acc, r, out);
                    acc.pop();
                }
            }
        }
        rec(&pools, k, total, &mut Vec::new(), r, &mut out);
        out
    }

    #[test]
    fn roundtrip_both_ways_exhaustively() {
        for r in 1..=2u32 {
            for k in 1..=3u32 {
                for total in 0..=5usize {
                    for tuple in all_tuples(r, k, total) {
                        let beta = psi(&tuple);
                        assert_eq!(beta.len(), tuple.total_len());
                        assert!(beta.is_weakly_increasing());
                        assert!(is_rk_parking(&beta, r, k), "psi image parks: {beta}");
                        let back = psi_inv(&beta, r, k).unwrap();
                        assert_eq!(back, tuple, "inverse of forward, r={r} k={k}");
                    }
                    for beta in enumerate_wipf(total as u32, r, k) {
                        let tuple = psi_inv(&beta, r, k).unwrap();
                        assert_eq!(psi(&tuple), beta, "forward of inverse, r={r} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_partitions_concatenate_blockwise() {
        for r in 1..=2u32 {
            for tuple in all_tuples(r, 3, 5) {
                let beta = psi(&tuple);
                let mut merged = crate::partition::Partition::empty();
                for alpha in tuple.components() {
                    merged = merged.merge(&alpha.multiplicity_partition());
                }
                assert_eq!(beta.multiplicity_partition(), merged);
            }
        }
    }

    #[test]
    fn statistic_transport_exhaustive() {
        for r in 1..=2u32 {
            for k in 1..=3u32 {
                for n in 0..=5u32 {
                    for beta in enumerate_wipf(n, r, k) {
                        assert!(
                            statistic_transport_holds(&beta, r, k).unwrap(),
                            "transport fails for {beta} r={r} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn statistic_transport_worked_example_and_maximal() {
        let beta = seq(&[1, 2, 2, 10, 12, 14, 15, 19, 22]);
        assert!(statistic_transport_holds(&beta, 2, 7).unwrap());
        // maximal sequence: statistic 0 on both sides
        let maximal = seq(&[3, 5, 7, 9]);
        assert_eq!(parking_statistic(&maximal, 2, 3).unwrap(), 0);
        assert!(statistic_transport_holds(&maximal, 2, 3).unwrap());
    }

    #[test]
    fn counting_corollary_component_lengths() {
        // summing products of per-length counts over compositions equals the
        // k-parameter count: the degree restriction of the power identity
        for r in 1..=2u32 {
            for k in 1..=3u32 {
                for n in 0..=5usize {
                    let by_tuples = all_tuples(r, k, n).len();
                    let direct = enumerate_wipf(n as u32, r, k).len();
                    assert_eq!(by_tuples, direct, "r={r} k={k} n={n}");
                }
            }
        }
    }
}
