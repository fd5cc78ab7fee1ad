//! The dual set attached to negative powers of the parking generating
//! series, its rotation orbits, and the constructive per-orbit enumeration.
//!
//! A weakly increasing vector `b` of length `n` belongs to the dual set for
//! parameters `(r, k)` with `N = rn - k > 0` when:
//!
//! - I. `b_1 = w` for some `w` in `[k]`, and `b_n - b_1 < N`;
//! - II. `b_{q(w)} = w`, where `q(w)` is the least `q` with `w <= q r`;
//! - III. `b_j <= (j-1) r` whenever `b_j > w`.
//!
//! Shifting all entries by `i` modulo `N` (with representatives in
//! `{1,...,N}`) partitions `[N]^n` into orbits; the rotation argument says
//! each orbit of period `p` matches exactly `p k / N` weakly increasing
//! members of the dual set. The public operations below expose membership,
//! enumeration, orbits, the shift that lands inside the set, the explicit
//! `k`-vector enumeration for aperiodic orbits, and the period reduction
//! used to transport the count from periodic orbits to aperiodic ones.
//!
//! Indexing note: the public predicates speak 1-based positions as in the
//! membership properties above; the shift and ladder arithmetic below uses
//! 0-based positions `x_j = b_{j+1}` with `delta_j = r j - x_j`, so
//! `delta_0 = -1` whenever `x_0 = 1`.

use std::collections::BTreeSet;

use num::One;

use crate::error::{Error, Result};
use crate::parking::{enumerate_wipf, PrefSeq};
use crate::rational::Rat;
use crate::symfun::{Basis, SymFn};

/// `s mod t` with representatives in `{1, ..., t}`, never 0.
fn mod1(s: i64, t: i64) -> i64 {
    (s - 1).rem_euclid(t) + 1
}

fn reduce_sorted(entries: &[u32], modulus: i64) -> Vec<u32> {
    let mut v: Vec<u32> = entries
        .iter()
        .map(|&e| mod1(e as i64, modulus) as u32)
        .collect();
    v.sort_unstable();
    v
}

fn dual_side(n: u32, r: u32, k: u32) -> Result<i64> {
    let side = r as i64 * n as i64 - k as i64;
    if n == 0 || side <= 0 {
        return Err(Error::DualDomain { n, r, k });
    }
    Ok(side)
}

/// Membership in the dual set, tested on the increasing rearrangement.
/// Entries above `rn - k` are allowed; only property I bounds the spread.
pub fn is_in_dual_set(b: &PrefSeq, r: u32, k: u32) -> bool {
    let n = b.len();
    if n == 0 || r == 0 {
        return false;
    }
    let sorted = b.sorted();
    let b = sorted.entries();
    let w = b[0];
    if w > k {
        return false;
    }
    let side = r as i64 * n as i64 - k as i64;
    if b[n - 1] as i64 - w as i64 >= side {
        return false;
    }
    let q = w.div_ceil(r) as usize;
    if q > n || b[q - 1] != w {
        return false;
    }
    b.iter()
        .enumerate()
        .all(|(j0, &bj)| bj <= w || bj as i64 <= r as i64 * j0 as i64)
}

/// All weakly increasing members of the dual set, in lexicographic order.
/// The search is bounded by property I (`b_1 <= k`, `b_n < b_1 + N`) and
/// pruned by property III.
pub fn enumerate_dual_set(n: u32, r: u32, k: u32) -> Result<Vec<PrefSeq>> {
    fn extend(n: usize, r: u32, w: u32, side: i64, prefix: &mut Vec<u32>, out: &mut Vec<PrefSeq>) {
        if prefix.len() == n {
            out.push(PrefSeq::new(prefix.clone()).expect("entries positive"));
            return;
        }
        let j0 = prefix.len() as i64; // 0-based index of the next slot
        let lo = *prefix.last().expect("prefix starts nonempty");
        let hi = (w as i64 + side - 1) as u32;
        for v in lo..=hi {
            if v > w && v as i64 > r as i64 * j0 {
                break;
            }
            prefix.push(v);
            extend(n, r, w, side, prefix, out);
            prefix.pop();
        }
    }
    let side = dual_side(n, r, k)?;
    let mut out = Vec::new();
    for w in 1..=k {
        let q = w.div_ceil(r) as usize;
        if q > n as usize {
            continue;
        }
        // properties I and II pin the first q entries to w
        let mut prefix = vec![w; q];
        extend(n as usize, r, w, side, &mut prefix, &mut out);
    }
    Ok(out)
}

/// Frobenius characteristic of the permutation action on the dual set: the
/// sum of `h_{multiplicity partition}` over the weakly increasing members.
pub fn dual_set_frobenius(n: u32, r: u32, k: u32) -> Result<SymFn> {
    let mut f = SymFn::zero(Basis::Homogeneous);
    for b in enumerate_dual_set(n, r, k)? {
        f.add_term(b.multiplicity_partition(), Rat::one());
    }
    Ok(f)
}

/// For `1 <= k <= r`: the sorted sequences obtained by adjoining a value in
/// `[k]` to a weakly increasing `(r,r)`-parking function of length `n - 1`.
/// As a set this equals [`enumerate_dual_set`] on the same parameters.
pub fn adjoined_witnesses(n: u32, r: u32, k: u32) -> Result<Vec<PrefSeq>> {
    if k == 0 || k > r {
        return Err(Error::KExceedsR { k, r });
    }
    if n == 0 {
        return Err(Error::BadParameter(
            "witness sequences start at n = 1".into(),
        ));
    }
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
    for alpha in enumerate_wipf(n - 1, r, r) {
        for w in 1..=k {
            let mut v = alpha.entries().to_vec();
            v.push(w);
            v.sort_unstable();
            set.insert(v);
        }
    }
    set.into_iter().map(PrefSeq::new).collect()
}

/// The rotation orbit of a vector in `[N]^n`: the distinct increasing
/// rearrangements of its translates modulo `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftOrbit {
    period: u32,
    members: BTreeSet<Vec<u32>>,
}

impl ShiftOrbit {
    /// The least `i >= 1` whose translate rearranges identically; equals the
    /// number of members.
    pub fn period(&self) -> u32 {
        self.period
    }

    /// Members in lexicographic order, each weakly increasing.
    pub fn members(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.members.iter()
    }

    /// The lexicographically least member, the canonical orbit key.
    pub fn canonical_key(&self) -> &Vec<u32> {
        self.members.iter().next().expect("orbits are nonempty")
    }

    pub fn contains(&self, sorted: &[u32]) -> bool {
        self.members.contains(sorted)
    }
}

/// Compute the rotation orbit of `a` inside `[N]^n`. The period always
/// divides `N`.
pub fn shift_orbit(a: &PrefSeq, modulus: u32) -> Result<ShiftOrbit> {
    if modulus == 0 {
        return Err(Error::BadParameter("orbit modulus must be positive".into()));
    }
    if a.is_empty() {
        return Err(Error::BadParameter("orbit vectors are nonempty".into()));
    }
    if a.entries().iter().any(|&e| e > modulus) {
        return Err(Error::BadParameter(format!(
            "orbit vector entries must lie in [1, {modulus}]"
        )));
    }
    let base = reduce_sorted(a.entries(), modulus as i64);
    let mut members = BTreeSet::new();
    members.insert(base.clone());
    let mut period = modulus;
    for i in 1..modulus {
        let shifted: Vec<u32> = {
            let mut v: Vec<u32> = a
                .entries()
                .iter()
                .map(|&e| mod1(e as i64 + i as i64, modulus as i64) as u32)
                .collect();
            v.sort_unstable();
            v
        };
        if shifted == base {
            period = i;
            break;
        }
        members.insert(shifted);
    }
    debug_assert_eq!(members.len(), period as usize);
    debug_assert_eq!(modulus % period, 0, "period divides the modulus");
    Ok(ShiftOrbit { period, members })
}

/// Count, by brute force over the enumerated dual set, the weakly increasing
/// members whose reduction modulo `N` lies in the orbit of `a`. The rotation
/// argument says this equals `period * k / N`.
pub fn count_orbit_matches(a: &PrefSeq, n: u32, r: u32, k: u32) -> Result<usize> {
    let side = dual_side(n, r, k)?;
    let orbit = shift_orbit(a, side as u32)?;
    let mut count = 0;
    for b in enumerate_dual_set(n, r, k)? {
        if orbit.contains(&reduce_sorted(b.entries(), side)) {
            count += 1;
        }
    }
    Ok(count)
}

fn validate_normalized_aperiodic(
    x: &PrefSeq,
    n: u32,
    r: u32,
    k: u32,
    bounded: bool,
) -> Result<i64> {
    let side = dual_side(n, r, k)?;
    if x.len() != n as usize {
        return Err(Error::LengthMismatch {
            seq: x.len(),
            bound: n as usize,
        });
    }
    if !x.is_weakly_increasing() {
        return Err(Error::NotWeaklyIncreasing);
    }
    if x.entries()[0] != 1 {
        return Err(Error::BadParameter(
            "normalized orbit representatives start with 1".into(),
        ));
    }
    if bounded && x.entries().iter().any(|&e| e as i64 > side) {
        return Err(Error::BadParameter(format!(
            "normalized orbit representatives lie in [1, {side}]"
        )));
    }
    let reduction = PrefSeq::new(reduce_sorted(x.entries(), side))?;
    if shift_orbit(&reduction, side as u32)?.period() as i64 != side {
        return Err(Error::PeriodicInput);
    }
    Ok(side)
}

/// The integer shift that moves a normalized aperiodic vector into the dual
/// set: 0 when `x` already belongs, otherwise `1 - x_j` for the largest
/// 0-based position `j` minimizing `delta_j = r j - x_j`. The reduction of
/// `x + i` modulo `N` then lies in the dual set with smallest coordinate 1.
pub fn shift_into_dual(x: &PrefSeq, n: u32, r: u32, k: u32) -> Result<i64> {
    let side = validate_normalized_aperiodic(x, n, r, k, false)?;
    if is_in_dual_set(x, r, k) {
        return Ok(0);
    }
    let xs = x.entries();
    let mut best_j = 1usize;
    let mut best = i64::MAX;
    for j in 1..n as usize {
        let delta = r as i64 * j as i64 - xs[j] as i64;
        if delta <= best {
            best = delta;
            best_j = j;
        }
    }
    let lands = |i: i64| {
        let mut v: Vec<u32> = xs
            .iter()
            .map(|&e| mod1(e as i64 + i, side) as u32)
            .collect();
        v.sort_unstable();
        is_in_dual_set(&PrefSeq::new(v).expect("entries positive"), r, k)
    };
    let shift = 1 - xs[best_j] as i64;
    if lands(shift) {
        return Ok(shift);
    }
    // entries above N sit outside the proven range of the minimizing rule;
    // some translate with smallest coordinate 1 always exists, find it
    for &e in xs {
        let i = 1 - e as i64;
        if lands(i) {
            return Ok(i);
        }
    }
    unreachable!("every aperiodic orbit contains a dual-set member anchored at 1")
}

/// The complete list of weakly increasing dual-set members whose reduction
/// modulo `N` lies in the (aperiodic) orbit of `x`; exactly `k` vectors.
///
/// `x` must be weakly increasing, start with 1, lie in `[N]^n`, belong to
/// the dual set, and have full period. The vectors come in two families:
/// plain translates `x + i` bounded by the first ladder gap, and translates
/// of the rotations `1 - x_{j_v}` for the ladder positions whose `delta`
/// stays at most `k - 2`.
pub fn orbit_dual_vectors(x: &PrefSeq, n: u32, r: u32, k: u32) -> Result<Vec<PrefSeq>> {
    let side = validate_normalized_aperiodic(x, n, r, k, true)?;
    if !is_in_dual_set(x, r, k) {
        return Err(Error::NotInDualSet);
    }
    let xs = x.entries();
    let delta: Vec<i64> = xs
        .iter()
        .enumerate()
        .map(|(j, &v)| r as i64 * j as i64 - v as i64)
        .collect();
    // ladder positions: strict ascents of x whose delta is a strict minimum
    // over everything to their right
    let mut ladder: Vec<usize> = Vec::new();
    for j in 0..n as usize {
        let in_j = j == 0 || xs[j] > xs[j - 1];
        if !in_j {
            continue;
        }
        if ((j + 1)..n as usize).all(|j2| delta[j2] > delta[j]) {
            ladder.push(j);
        }
    }
    debug_assert_eq!(ladder.first(), Some(&0), "position 0 anchors the ladder");
    let cutoff = k as i64 - 2;
    // largest ladder index whose delta stays at most k - 2
    let m = ladder.iter().take_while(|&&j| delta[j] <= cutoff).count() - 1;
    let mut out: Vec<PrefSeq> = Vec::with_capacity(k as usize);
    let push_shifted = |v: &[u32], i: i64, out: &mut Vec<PrefSeq>| {
        let entries: Vec<u32> = v.iter().map(|&e| (e as i64 + i) as u32).collect();
        out.push(PrefSeq::new(entries).expect("shifted entries stay positive"));
    };
    let first_gap = ladder
        .get(1)
        .map(|&j| delta[j])
        .unwrap_or(i64::MAX)
        .min(k as i64 - 1);
    for i in 0..=first_gap {
        push_shifted(xs, i, &mut out);
    }
    for v in 1..=m {
        let jv = ladder[v];
        let rotate = 1 - xs[jv] as i64;
        let alpha: Vec<u32> = {
            let mut w: Vec<u32> = xs
                .iter()
                .map(|&e| mod1(e as i64 + rotate, side) as u32)
                .collect();
            w.sort_unstable();
            w
        };
        let next_gap = ladder
            .get(v + 1)
            .map(|&j| delta[j])
            .unwrap_or(i64::MAX)
            .min(k as i64 - 1);
        for i2 in 0..=(next_gap - delta[jv] - 1) {
            push_shifted(&alpha, i2, &mut out);
        }
    }
    Ok(out)
}

/// Extract the aperiodic core of a dual-set member whose orbit has period
/// `p < N`: the member replicates its first `n' = n / (N/p)` entries with
/// shifts `0, p, 2p, ...`, and the core belongs to the dual set for the
/// reduced parameters `(n', r, k / (N/p))`.
pub fn periodic_core(b: &PrefSeq, n: u32, r: u32, k: u32, p: u32) -> Result<PrefSeq> {
    let side = dual_side(n, r, k)?;
    if p == 0 || side % p as i64 != 0 {
        return Err(Error::BadParameter(format!(
            "period {p} must divide rn-k = {side}"
        )));
    }
    if b.len() != n as usize {
        return Err(Error::LengthMismatch {
            seq: b.len(),
            bound: n as usize,
        });
    }
    let ell = (side / p as i64) as u32;
    if ell == 1 {
        return Ok(b.clone());
    }
    if !n.is_multiple_of(ell) || !k.is_multiple_of(ell) {
        return Err(Error::NotReplicated { period: p });
    }
    let reduced_n = (n / ell) as usize;
    let entries = b.entries();
    for j in 0..(n as usize - reduced_n) {
        if entries[j + reduced_n] != entries[j] + p {
            return Err(Error::NotReplicated { period: p });
        }
    }
    PrefSeq::new(entries[..reduced_n].to_vec())
}

/// Replicate a core `ell` times with shifts `0, p, ..., (ell-1) p`. Inverse
/// of [`periodic_core`]; the result is weakly increasing because the core's
/// spread is below `p`.
pub fn periodic_replicate(core: &PrefSeq, ell: u32, p: u32) -> PrefSeq {
    let mut entries = Vec::with_capacity(core.len() * ell as usize);
    for s in 0..ell {
        for &e in core.entries() {
            entries.push(e + s * p);
        }
    }
    PrefSeq::new(entries).expect("replicated entries stay positive")
}
