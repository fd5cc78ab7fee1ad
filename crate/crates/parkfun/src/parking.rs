//! Membership, enumeration, counting, Frobenius characteristics, and the
//! sum statistic for `(r,k)`-parking functions.
//!
//! The symmetric group acts on preference sequences by permuting
//! coordinates, so every orbit has a unique weakly increasing
//! representative. Enumeration works over representatives; counts weight
//! each representative by its orbit size `n! / prod(multiplicities!)`.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, gen_multinomial, Partition};
use crate::rational::{factorial, Rat};
use crate::symfun::{Basis, SymFn};

/// A preference sequence: positive integers, order significant. The empty
/// sequence is allowed and is a parking function for every parameter choice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PrefSeq {
    entries: Vec<u32>,
}

impl PrefSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::BadParameter(
                "preference sequences contain positive integers".into(),
            ));
        }
        Ok(PrefSeq { entries })
    }

    pub fn empty() -> Self {
        PrefSeq {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// The increasing rearrangement.
    pub fn sorted(&self) -> PrefSeq {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        PrefSeq { entries }
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&a| a as u64).sum()
    }

    /// Partition recording how many times each value occurs.
    pub fn multiplicity_partition(&self) -> Partition {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &a in &self.entries {
            *counts.entry(a).or_insert(0) += 1;
        }
        Partition::from_unsorted(counts.into_values().collect())
            .expect("multiplicities are positive")
    }

    /// Size of the coordinate-permutation orbit of this sequence:
    /// `n! / prod(value multiplicities!)`.
    pub fn orbit_size(&self) -> BigInt {
        let mut size = factorial(self.len() as u64);
        for &mult in self.multiplicity_partition().parts() {
            size /= factorial(mult as u64);
        }
        size
    }
}

impl fmt::Display for PrefSeq {
    /// Comma-joined entries; the empty sequence renders as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for a in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

/// Whether the increasing rearrangement of `a` is coordinatewise bounded by
/// the weakly increasing vector `u`.
pub fn is_u_parking(a: &PrefSeq, u: &[u32]) -> Result<bool> {
    if a.len() != u.len() {
        return Err(Error::LengthMismatch {
            seq: a.len(),
            bound: u.len(),
        });
    }
    let sorted = a.sorted();
    Ok(sorted
        .entries()
        .iter()
        .zip(u)
        .all(|(&b, &bound)| b <= bound))
}

/// Whether `a` is an `(r,k)`-parking function, i.e. `u`-parking for
/// `u_i = k + (i-1) r`.
pub fn is_rk_parking(a: &PrefSeq, r: u32, k: u32) -> bool {
    let u: Vec<u32> = (0..a.len() as u32).map(|i| k + i * r).collect();
    is_u_parking(a, &u).expect("bounds constructed with matching length")
}

/// All weakly increasing `(r,k)`-parking functions of length `n`, in
/// lexicographic order.
pub fn enumerate_wipf(n: u32, r: u32, k: u32) -> Vec<PrefSeq> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::with_capacity(n as usize);
    fn rec(n: u32, r: u32, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<PrefSeq>) {
        if prefix.len() == n as usize {
            out.push(PrefSeq {
                entries: prefix.clone(),
            });
            return;
        }
        let i = prefix.len() as u32;
        let lo = prefix.last().copied().unwrap_or(1);
        let hi = k + i * r;
        for v in lo..=hi {
            prefix.push(v);
            rec(n, r, k, prefix, out);
            prefix.pop();
        }
    }
    rec(n, r, k, &mut prefix, &mut out);
    out
}

/// Number of `(r,k)`-parking functions of length `n`, summed as orbit sizes
/// over the weakly increasing representatives.
pub fn count_parking_functions(n: u32, r: u32, k: u32) -> BigInt {
    let mut total = BigInt::zero();
    for wipf in enumerate_wipf(n, r, k) {
        total += wipf.orbit_size();
    }
    total
}

/// Frobenius characteristic of the permutation action on `(r,k)`-parking
/// functions: the sum of `h_{multiplicity partition}` over the weakly
/// increasing representatives. Always expressed in the `h` basis.
pub fn parking_frobenius(n: u32, r: u32, k: u32) -> SymFn {
    let mut f = SymFn::zero(Basis::Homogeneous);
    for wipf in enumerate_wipf(n, r, k) {
        f.add_term(wipf.multiplicity_partition(), Rat::one());
    }
    f
}

/// The sum statistic `kn + C(n,2) r - sum(a)`; zero exactly at the maximal
/// weakly increasing parking function. Symmetric under permuting `a`.
pub fn parking_statistic(a: &PrefSeq, r: u32, k: u32) -> Result<u64> {
    if !is_rk_parking(a, r, k) {
        return Err(Error::NotParkingFunction { r, k });
    }
    let n = a.len() as u64;
    let bound = (k as u64)
        .checked_mul(n)
        .and_then(|v| v.checked_add(n * n.saturating_sub(1) / 2 * r as u64))
        .expect("statistic bound fits in u64");
    Ok(bound - a.sum())
}

/// Polynomial in `q` with symmetric-function coefficients, the grading
/// variable for the sum statistic. Coefficients are kept in the `h` basis
/// and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymFn {
    terms: BTreeMap<u64, SymFn>,
}

impl QSymFn {
    pub fn zero() -> Self {
        QSymFn {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut q = QSymFn::zero();
        q.add_term(0, SymFn::one(Basis::Homogeneous));
        q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: u64, f: SymFn) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().plus(&f);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Iterate `(q-exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&u64, &SymFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: u64) -> SymFn {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(|| SymFn::zero(Basis::Homogeneous))
    }

    /// Evaluation at `q = 1`: the plain sum of all coefficients.
    pub fn at_q_one(&self) -> SymFn {
        let mut acc = SymFn::zero(Basis::Homogeneous);
        for f in self.terms.values() {
            acc = acc.plus(f);
        }
        acc
    }

    /// Multiply every exponent shift: `q^e -> q^{e + delta}`.
    pub fn shift_exponents(&self, delta: u64) -> QSymFn {
        QSymFn {
            terms: self
                .terms
                .iter()
                .map(|(e, f)| (e + delta, f.clone()))
                .collect(),
        }
    }

    pub fn plus(&self, other: &QSymFn) -> QSymFn {
        let mut out = self.clone();
        for (e, f) in &other.terms {
            out.add_term(*e, f.clone());
        }
        out
    }

    pub fn multiply(&self, other: &QSymFn) -> Result<QSymFn> {
        let mut out = QSymFn::zero();
        for (ea, fa) in &self.terms {
            for (eb, fb) in &other.terms {
                out.add_term(ea + eb, fa.multiply(fb)?);
            }
        }
        Ok(out)
    }
}

/// q-refined Frobenius characteristic: each weakly increasing `(r,k)`-parking
/// function contributes `q^{statistic} h_{multiplicities}`. Evaluating at
/// `q = 1` recovers [`parking_frobenius`].
pub fn parking_frobenius_q(n: u32, r: u32, k: u32) -> QSymFn {
    let mut out = QSymFn::zero();
    for wipf in enumerate_wipf(n, r, k) {
        let s = parking_statistic(&wipf, r, k).expect("enumerated sequences are parking functions");
        out.add_term(
            s,
            SymFn::term(
                Basis::Homogeneous,
                wipf.multiplicity_partition(),
                Rat::one(),
            ),
        );
    }
    out
}

/// Frobenius characteristic of the coordinate-permutation action on the full
/// cube `[rn+k]^n`:
/// `sum_lambda multinomial(rn+k; multiplicities(lambda)) h_lambda`.
/// Equals `(rn+k)/k` times the parking Frobenius characteristic when `k != 0`.
pub fn cube_frobenius(n: u32, r: u32, k: i64) -> Result<SymFn> {
    let side = r as i64 * n as i64 + k;
    if n == 0 || side < 1 {
        return Err(Error::BadParameter(format!(
            "cube action needs n >= 1 and rn+k >= 1, got n={n}, rn+k={side}"
        )));
    }
    let mut f = SymFn::zero(Basis::Homogeneous);
    for lambda in enumerate_partitions(n) {
        let c = gen_multinomial(side, &lambda.multiplicity_counts());
        f.add_term(lambda, c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn seq(v: &[u32]) -> PrefSeq {
        PrefSeq::new(v.to_vec()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn u_parking_membership() {
        assert!(!is_u_parking(&seq(&[3, 1, 4, 3]), &[1, 2, 3, 4]).unwrap());
        assert!(is_u_parking(&PrefSeq::empty(), &[]).unwrap());
        assert!(is_u_parking(&seq(&[1, 1, 1]), &[1, 5, 9]).unwrap());
        assert_eq!(
            is_u_parking(&seq(&[1]), &[1, 2]),
            Err(Error::LengthMismatch { seq: 1, bound: 2 })
        );
    }

    #[test]
    fn rk_membership() {
        assert!(is_rk_parking(&seq(&[1, 2, 8, 11, 13, 14]), 2, 5));
        assert!(is_rk_parking(
            &seq(&[1, 2, 2, 10, 12, 14, 15, 19, 22]),
            2,
            7
        ));
        assert!(!is_rk_parking(&seq(&[2, 2]), 1, 1));
        assert!(!is_rk_parking(&seq(&[3, 1, 4, 3]), 1, 1));
    }

    #[test]
    fn wipf_enumeration_examples() {
        let got: Vec<String> = enumerate_wipf(3, 1, 1)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, vec!["1,1,1", "1,1,2", "1,1,3", "1,2,2", "1,2,3"]);
        assert_eq!(enumerate_wipf(0, 3, 2), vec![PrefSeq::empty()]);
        let got: Vec<String> = enumerate_wipf(2, 2, 1)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, vec!["1,1", "1,2", "1,3"]);
    }

    #[test]
    fn wipf_counts_are_catalan_for_r_equals_k_equals_one() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 0..=8u32 {
            assert_eq!(enumerate_wipf(n, 1, 1).len() as u64, catalan[n as usize]);
        }
    }

    #[test]
    fn wipf_counts_follow_the_fuss_catalan_formula() {
        // weakly increasing (r,1)-parking functions are counted by
        // binom((r+1)n, n) / (rn + 1)
        for r in 1..=3u32 {
            for n in 0..=6u32 {
                let closed = {
                    let num = gen_multinomial(((r + 1) * n) as i64, &[n]);
                    num / Rat::from_integer(BigInt::from(r * n + 1))
                };
                assert_eq!(
                    Rat::from_integer(BigInt::from(enumerate_wipf(n, r, 1).len())),
                    closed,
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_parking_functions(3, 1, 1), BigInt::from(16));
        for (r, k) in [(1, 1), (2, 3), (3, 2)] {
            assert_eq!(count_parking_functions(1, r, k), BigInt::from(k));
        }
        assert_eq!(count_parking_functions(2, 2, 1), BigInt::from(5));
    }

    #[test]
    fn counting_matches_closed_form_on_a_grid() {
        for n in 1..=5u32 {
            for r in 1..=3u32 {
                for k in 1..=3u32 {
                    let closed =
                        BigInt::from(k) * BigInt::from(r as i64 * n as i64 + k as i64).pow(n - 1);
                    assert_eq!(
                        count_parking_functions(n, r, k),
                        closed,
                        "n={n} r={r} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f3 = parking_frobenius(3, 1, 1);
        let expected = SymFn::from_terms(
            Basis::Homogeneous,
            [
                (part(&[3]), rat(1)),
                (part(&[2, 1]), rat(3)),
                (part(&[1, 1, 1]), rat(1)),
            ],
        );
        assert_eq!(f3, expected);
        for (r, k) in [(1u32, 1u32), (2, 3), (3, 2)] {
            assert_eq!(
                parking_frobenius(1, r, k),
                SymFn::term(Basis::Homogeneous, part(&[1]), rat(k as i64))
            );
        }
        let f = parking_frobenius(2, 2, 1);
        let expected = SymFn::from_terms(
            Basis::Homogeneous,
            [(part(&[2]), rat(1)), (part(&[1, 1]), rat(2))],
        );
        assert_eq!(f, expected);
    }

    /// Frobenius characteristic straight from the definition: average of
    /// `Fix(w) p_{cycle type(w)}` over all permutations `w`, acting on the
    /// full set of (not necessarily increasing) parking functions.
    fn frobenius_by_definition(n: usize, r: u32, k: u32) -> SymFn {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            let mut perms = vec![Vec::new()];
            for i in 0..n {
                let mut next = Vec::new();
                for p in &perms {
                    for pos in 0..=i {
                        let mut q = p.clone();
                        q.insert(pos, i);
                        next.push(q);
                    }
                }
                perms = next;
            }
            perms
        }
        fn cycle_type(perm: &[usize]) -> Partition {
            let mut seen = vec![false; perm.len()];
            let mut lens = Vec::new();
            for start in 0..perm.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0u32;
                let mut at = start;
                while !seen[at] {
                    seen[at] = true;
                    at = perm[at];
                    len += 1;
                }
                lens.push(len);
            }
            Partition::from_unsorted(lens).unwrap()
        }
        // every parking function, by filtering the full cube
        let side = (k + (n as u32 - 1) * r) as u64;
        let mut all: Vec<Vec<u32>> = Vec::new();
        for code in 0..side.pow(n as u32) {
            let mut c = code;
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push((c % side) as u32 + 1);
                c /= side;
            }
            if is_rk_parking(&PrefSeq::new(v.clone()).unwrap(), r, k) {
                all.push(v);
            }
        }
        let mut f = SymFn::zero(Basis::PowerSum);
        let nf = factorial(n as u64);
        for w in permutations(n) {
            let fixed = all
                .iter()
                .filter(|a| (0..n).all(|i| a[i] == a[w[i]]))
                .count();
            f.add_term(cycle_type(&w), Rat::new(BigInt::from(fixed), nf.clone()));
        }
        f
    }

    #[test]
    fn frobenius_matches_definition_oracle() {
        for (n, r, k) in [(2usize, 1u32, 2u32), (3, 1, 1), (3, 2, 1), (4, 1, 2)] {
            let by_orbits = parking_frobenius(n as u32, r, k)
                .to_basis(Basis::PowerSum)
                .unwrap();
            let by_definition = frobenius_by_definition(n, r, k);
            assert_eq!(by_orbits, by_definition, "n={n} r={r} k={k}");
        }
    }

    #[test]
    fn statistic_examples() {
        // maximal weakly increasing parking function has statistic zero
        for (n, r, k) in [(4u32, 2u32, 3u32), (5, 1, 1)] {
            let maximal: Vec<u32> = (0..n).map(|i| k + i * r).collect();
            assert_eq!(parking_statistic(&seq(&maximal), r, k).unwrap(), 0);
        }
        assert_eq!(parking_statistic(&seq(&[1, 1]), 1, 1).unwrap(), 1);
        assert_eq!(parking_statistic(&PrefSeq::empty(), 3, 2).unwrap(), 0);
        assert_eq!(
            parking_statistic(&seq(&[2, 2]), 1, 1),
            Err(Error::NotParkingFunction { r: 1, k: 1 })
        );
        // symmetric under permutations: depends only on the entry sum
        assert_eq!(
            parking_statistic(&seq(&[1, 3, 2]), 1, 1).unwrap(),
            parking_statistic(&seq(&[3, 2, 1]), 1, 1).unwrap()
        );
    }

    #[test]
    fn statistic_transport_value_from_worked_example() {
        let beta = seq(&[1, 2, 2, 10, 12, 14, 15, 19, 22]);
        assert_eq!(parking_statistic(&beta, 2, 7).unwrap(), 38);
    }

    #[test]
    fn q_frobenius_examples() {
        // n=1, k=2: preferences 2 and 1 carry statistics 0 and 1
        let q = parking_frobenius_q(1, 1, 2);
        let h1 = SymFn::generator(Basis::Homogeneous, 1);
        assert_eq!(q.coeff(0), h1);
        assert_eq!(q.coeff(1), h1);
        // n=2, r=1, k=1
        let q = parking_frobenius_q(2, 1, 1);
        assert_eq!(
            q.coeff(0),
            SymFn::term(Basis::Homogeneous, part(&[1, 1]), rat(1))
        );
        assert_eq!(q.coeff(1), SymFn::generator(Basis::Homogeneous, 2));
        // q = 1 collapses to the plain Frobenius characteristic
        for (n, r, k) in [(3u32, 1u32, 1u32), (4, 2, 3), (3, 2, 2)] {
            assert_eq!(
                parking_frobenius_q(n, r, k).at_q_one(),
                parking_frobenius(n, r, k)
            );
        }
    }

    #[test]
    fn cube_frobenius_examples() {
        for (r, k) in [(1i64, 1i64), (2, 3)] {
            let d = cube_frobenius(1, r as u32, k).unwrap();
            assert_eq!(d, SymFn::term(Basis::Homogeneous, part(&[1]), rat(r + k)));
        }
        let d = cube_frobenius(2, 1, 1).unwrap();
        let expected = SymFn::from_terms(
            Basis::Homogeneous,
            [(part(&[2]), rat(3)), (part(&[1, 1]), rat(3))],
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn cube_relation_to_parking_frobenius() {
        for n in 1..=5u32 {
            for (r, k) in [(1u32, 1u32), (1, 3), (2, 2), (3, 1)] {
                let side = rat((r * n + k) as i64);
                let lhs = cube_frobenius(n, r, k as i64).unwrap();
                let rhs = parking_frobenius(n, r, k).scale(&(side / rat(k as i64)));
                assert_eq!(lhs, rhs, "n={n} r={r} k={k}");
            }
        }
    }

    #[test]
    fn scalar_with_all_ones_recovers_the_count() {
        for (n, r, k) in [(3u32, 1u32, 1u32), (4, 2, 1), (3, 2, 3)] {
            let f = parking_frobenius(n, r, k);
            let ones = SymFn::term(
                Basis::Homogeneous,
                Partition::new(vec![1; n as usize]).unwrap(),
                rat(1),
            );
            let got = f.hall_scalar(&ones).unwrap();
            assert_eq!(
                got,
                Rat::from_integer(count_parking_functions(n, r, k)),
                "n={n} r={r} k={k}"
            );
        }
    }
}
