//! Integer partitions, their statistics, and generalized multinomial
//! coefficients whose top argument may be any integer.
//!
//! - [`Partition`]: weakly decreasing positive parts; carries the length,
//!   part multiplicities, the symmetry-order weight `z`, and the sign
//!   `(-1)^{|lambda| - len(lambda)}`.
//! - [`enumerate_partitions`]: all partitions of `n` in reverse-lexicographic
//!   order, the fixed order used everywhere in the crate.
//! - [`gen_multinomial`]: falling-factorial multinomial, exact for negative
//!   top arguments.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rat};

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is the unique partition of 0.
///
/// Partitions compare by size first, then reverse-lexicographically within a
/// size, matching the enumeration order of [`enumerate_partitions`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build a partition from a weakly decreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::BadParameter(format!(
                    "partition parts must be weakly decreasing, got {:?}",
                    parts
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::BadParameter(
                "partition parts must be positive".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Build a partition from parts in any order; zeros are rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`; `single(0)` is the empty partition.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the value `part` among the parts.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Just the multiplicity counts, as consumed by [`gen_multinomial`].
    pub fn multiplicity_counts(&self) -> Vec<u32> {
        self.multiplicities().into_iter().map(|(_, c)| c).collect()
    }

    /// z = prod_i i^{d_i} d_i! where d_i is the multiplicity of i.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, count) in self.multiplicities() {
            acc *= BigInt::from(part).pow(count);
            acc *= factorial(count as u64);
        }
        acc
    }

    /// The sign (-1)^{|lambda| - len(lambda)}.
    pub fn sign(&self) -> i32 {
        if (self.size() as i64 - self.len() as i64) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut col = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= col).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            col += 1;
        }
        Partition { parts }
    }

    /// Multiset union of the parts, used for products in multiplicative bases.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Whether `self` refines `coarser`: the parts of `self` can be grouped
    /// so that each group sums to one part of `coarser`. Equal partitions
    /// refine each other trivially.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let mut room: Vec<u32> = coarser.parts.clone();
        fn place(parts: &[u32], idx: usize, room: &mut Vec<u32>) -> bool {
            if idx == parts.len() {
                return room.iter().all(|&r| r == 0);
            }
            let p = parts[idx];
            let mut tried: Vec<u32> = Vec::new();
            for i in 0..room.len() {
                if room[i] >= p && !tried.contains(&room[i]) {
                    tried.push(room[i]);
                    room[i] -= p;
                    if place(parts, idx + 1, room) {
                        room[i] += p;
                        return true;
                    }
                    room[i] += p;
                }
            }
            false
        }
        place(&self.parts, 0, &mut room)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            // within a size: reverse-lexicographic, so (n) sorts first
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Dot-joined parts, e.g. `2.1`; the empty partition renders as `""`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ".")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions of `n`, exactly once, in reverse-lexicographic order:
/// `(n)` first, `(1,...,1)` last. Deterministic.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = max_part.min(remaining);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n.max(1), &mut prefix, &mut out);
    out
}

/// Falling-factorial multinomial
/// `top (top-1) ... (top - sum(ds) + 1) / prod_i ds[i]!`,
/// exact for any integer `top`, including negative values.
pub fn gen_multinomial(top: i64, ds: &[u32]) -> Rat {
    let steps: u64 = ds.iter().map(|&d| d as u64).sum();
    let mut num = BigInt::one();
    for step in 0..steps {
        num *= BigInt::from(top - step as i64);
    }
    let mut den = BigInt::one();
    for &d in ds {
        den *= factorial(d as u64);
    }
    Rat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_is_integer};
    use num::Zero;
    use proptest::prelude::*;

    /// p(n) by the pentagonal-number recurrence, independent of the
    /// enumeration code.
    fn partition_count_oracle(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = sum;
        }
        table[n] as u64
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        for n in 0..=30u32 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                partition_count_oracle(n as usize),
                "p({n})"
            );
        }
    }

    #[test]
    fn enumeration_of_zero_and_small_n() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(9).len(), 30);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(four, vec!["4", "3.1", "2.2", "2.1.1", "1.1.1.1"]);
    }

    #[test]
    fn enumeration_is_sorted_in_partition_order() {
        for n in 0..=9u32 {
            let parts = enumerate_partitions(n);
            for w in parts.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn z_values() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[3]).z(), BigInt::from(3));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
    }

    #[test]
    fn z_counts_permutations_by_cycle_type() {
        // sum over partitions of n of n!/z equals n!, each summand integral
        for n in 0..=10u64 {
            let nf = factorial(n);
            let mut total = BigInt::zero();
            for lam in enumerate_partitions(n as u32) {
                let q = &nf / lam.z();
                assert_eq!(&q * lam.z(), nf, "n!/z integral for {lam}");
                total += q;
            }
            assert_eq!(total, nf);
        }
    }

    #[test]
    fn gen_multinomial_examples() {
        assert_eq!(gen_multinomial(5, &[2]), rat(10));
        assert_eq!(gen_multinomial(7, &[]), rat(1));
        assert_eq!(gen_multinomial(-3, &[2]), rat(6));
        // multinomial with several slots: binom(4;1,2,1) = 4!/1!2!1! = 12
        assert_eq!(gen_multinomial(4, &[1, 2, 1]), rat(12));
    }

    #[test]
    fn conjugate_and_sign() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(p.sign(), 1); // 4 - 2 even
        assert_eq!(Partition::new(vec![2, 1]).unwrap().sign(), -1);
    }

    #[test]
    fn refinement_basics() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert!(p(&[3, 1]).refines(&p(&[4])));
        assert!(p(&[2, 1, 1]).refines(&p(&[3, 1])));
        assert!(!p(&[2, 2]).refines(&p(&[3, 1])));
        assert!(p(&[2, 2]).refines(&p(&[2, 2])));
    }

    #[test]
    fn revlex_never_puts_a_refinement_first() {
        for n in 0..=8u32 {
            let order = enumerate_partitions(n);
            for i in 0..order.len() {
                for j in (i + 1)..order.len() {
                    assert!(
                        !(order[i].refines(&order[j]) && order[i] != order[j]),
                        "{} precedes {} but refines it",
                        order[i],
                        order[j]
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn gen_multinomial_times_factorials_is_falling_factorial(
            top in -10i64..=10,
            ds in proptest::collection::vec(0u32..=4, 0..=4),
        ) {
            let value = gen_multinomial(top, &ds);
            let mut denom = BigInt::one();
            for &d in &ds {
                denom *= factorial(d as u64);
            }
            let steps: u64 = ds.iter().map(|&d| d as u64).sum();
            let mut falling = BigInt::one();
            for s in 0..steps {
                falling *= BigInt::from(top - s as i64);
            }
            prop_assert_eq!(value * Rat::from_integer(denom), Rat::from_integer(falling));
        }

        #[test]
        fn gen_multinomial_with_integer_top_is_integral(
            top in -10i64..=10,
            ds in proptest::collection::vec(0u32..=4, 0..=4),
        ) {
            prop_assert!(rat_is_integer(&gen_multinomial(top, &ds)));
        }
    }
}
