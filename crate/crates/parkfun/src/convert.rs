//! Per-degree transition matrices between the classical bases.
//!
//! The monomial basis is the pivot: forward expansions into `m` are computed
//! combinatorially (matrix fillings with prescribed row and column sums),
//! the Schur row goes through Jacobi-Trudi, and the inverse directions are
//! exact Gauss-Jordan solves. Matrices are cached per degree behind a mutex;
//! duplicate computation is acceptable, torn reads are not.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Rat;
use crate::symfun::{schur_in_h, Basis};

pub(crate) type Matrix = Vec<Vec<Rat>>;

static DEGREE_CAP: AtomicU32 = AtomicU32::new(12);

/// Largest homogeneous degree for which basis conversions are served.
pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(AtomicOrdering::Relaxed)
}

/// Raise or lower the conversion degree cap (default 12).
pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, AtomicOrdering::Relaxed);
}

pub(crate) fn check_degree(degree: u32) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeTooLarge { degree, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Direction {
    ToMonomial(Basis),
    FromMonomial(Basis),
}

fn cache() -> &'static Mutex<HashMap<(u32, Direction), Arc<Matrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, Direction), Arc<Matrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lookup_or_build(degree: u32, dir: Direction) -> Arc<Matrix> {
    if let Some(m) = cache().lock().unwrap().get(&(degree, dir)) {
        return m.clone();
    }
    // built outside the lock; a racing thread may do the same work
    let built = Arc::new(build(degree, dir));
    cache()
        .lock()
        .unwrap()
        .entry((degree, dir))
        .or_insert(built)
        .clone()
}

/// Matrix expressing basis elements of `basis` in the monomial basis:
/// row `i`, column `j` is the coefficient of `m_{order[j]}` in the basis
/// element indexed by `order[i]`, with `order = enumerate_partitions(degree)`.
pub(crate) fn to_monomial(basis: Basis, degree: u32) -> Result<Arc<Matrix>> {
    check_degree(degree)?;
    debug_assert!(basis != Basis::Monomial);
    Ok(lookup_or_build(degree, Direction::ToMonomial(basis)))
}

/// Inverse of [`to_monomial`]: expresses monomial elements in `basis`.
pub(crate) fn from_monomial(basis: Basis, degree: u32) -> Result<Arc<Matrix>> {
    check_degree(degree)?;
    debug_assert!(basis != Basis::Monomial);
    Ok(lookup_or_build(degree, Direction::FromMonomial(basis)))
}

fn build(degree: u32, dir: Direction) -> Matrix {
    match dir {
        Direction::ToMonomial(basis) => build_to_monomial(degree, basis),
        Direction::FromMonomial(basis) => {
            invert(&lookup_or_build(degree, Direction::ToMonomial(basis)))
        }
    }
}

fn build_to_monomial(degree: u32, basis: Basis) -> Matrix {
    let order = enumerate_partitions(degree);
    match basis {
        Basis::Homogeneous | Basis::Elementary | Basis::PowerSum => {
            let kind = match basis {
                Basis::Homogeneous => FillKind::Any,
                Basis::Elementary => FillKind::ZeroOne,
                _ => FillKind::Whole,
            };
            order
                .iter()
                .map(|mu| {
                    order
                        .iter()
                        .map(|lam| Rat::from_integer(count_fillings(mu.parts(), lam.parts(), kind)))
                        .collect()
                })
                .collect()
        }
        Basis::Schur => {
            let h2m = lookup_or_build(degree, Direction::ToMonomial(Basis::Homogeneous));
            let index: HashMap<&Partition, usize> =
                order.iter().enumerate().map(|(i, p)| (p, i)).collect();
            order
                .iter()
                .map(|lam| {
                    let mut hvec = vec![Rat::zero(); order.len()];
                    for (mu, c) in schur_in_h(lam).terms() {
                        hvec[index[mu]] = c.clone();
                    }
                    vec_times_matrix(&hvec, &h2m)
                })
                .collect()
        }
        Basis::Monomial => unreachable!("monomial is the pivot basis"),
    }
}

pub(crate) fn vec_times_matrix(v: &[Rat], m: &Matrix) -> Vec<Rat> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![Rat::zero(); cols];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, mij) in m[i].iter().enumerate() {
            if !mij.is_zero() {
                out[j] += vi * mij;
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum FillKind {
    /// Nonnegative integer entries.
    Any,
    /// Entries restricted to {0, 1}.
    ZeroOne,
    /// Each row sum lands entirely in a single column.
    Whole,
}

/// Number of matrices with the given row and column sums and entry
/// restriction. The monomial coefficient of `h`, `e`, and `p` products.
pub(crate) fn count_fillings(rows: &[u32], cols: &[u32], kind: FillKind) -> BigInt {
    let mut memo: HashMap<(usize, Vec<u32>), BigInt> = HashMap::new();
    fn rec(
        rows: &[u32],
        kind: FillKind,
        idx: usize,
        remaining: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
    ) -> BigInt {
        let left: u32 = rows[idx..].iter().sum();
        let cap: u32 = remaining.iter().sum();
        if left != cap {
            return BigInt::zero();
        }
        if idx == rows.len() {
            return BigInt::one();
        }
        let key = (idx, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let value = match kind {
            FillKind::Whole => {
                let mut acc = BigInt::zero();
                let v = rows[idx];
                for j in 0..remaining.len() {
                    if remaining[j] >= v {
                        remaining[j] -= v;
                        acc += rec(rows, kind, idx + 1, remaining, memo);
                        remaining[j] += v;
                    }
                }
                acc
            }
            _ => {
                // distribute rows[idx] over the columns left-to-right
                fn distribute(
                    rows: &[u32],
                    kind: FillKind,
                    idx: usize,
                    col: usize,
                    todo: u32,
                    remaining: &mut Vec<u32>,
                    memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
                ) -> BigInt {
                    if todo == 0 {
                        return rec(rows, kind, idx + 1, remaining, memo);
                    }
                    if col == remaining.len() {
                        return BigInt::zero();
                    }
                    let max_here = match kind {
                        FillKind::ZeroOne => remaining[col].min(1).min(todo),
                        _ => remaining[col].min(todo),
                    };
                    let mut acc = BigInt::zero();
                    for a in 0..=max_here {
                        remaining[col] -= a;
                        acc += distribute(rows, kind, idx, col + 1, todo - a, remaining, memo);
                        remaining[col] += a;
                    }
                    acc
                }
                distribute(rows, kind, idx, 0, rows[idx], remaining, memo)
            }
        };
        memo.insert(key, value.clone());
        value
    }
    let mut remaining = cols.to_vec();
    rec(rows, kind, 0, &mut remaining, &mut memo)
}

/// Exact Gauss-Jordan inverse. Panics if the matrix is singular, which would
/// mean a transition matrix between two bases failed to be invertible.
fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix must be invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}
