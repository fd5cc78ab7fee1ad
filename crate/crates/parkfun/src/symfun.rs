//! The ring of symmetric functions over exact rationals.
//!
//! A [`SymFn`] is a sparse, possibly inhomogeneous linear combination of
//! basis elements indexed by partitions, tagged with one of the five
//! classical bases:
//!
//! - `m` monomial, `e` elementary, `h` complete homogeneous, `p` power sum,
//!   `s` Schur.
//!
//! Change of basis pivots through `m` (see `convert`), products happen in a
//! multiplicative basis, the omega involution acts basis-by-basis, and the
//! Hall scalar product is evaluated in the power-sum basis where
//! `<p_lambda, p_mu> = z_lambda delta`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::convert;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{rat, Rat};

/// One of the five classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    PowerSum,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::PowerSum,
        Basis::Schur,
    ];

    /// Single-letter label used in serialized output.
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Homogeneous => 'h',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }

    /// Bases in which products are key concatenation.
    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            Basis::Elementary | Basis::Homogeneous | Basis::PowerSum
        )
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Homogeneous),
            "p" => Ok(Basis::PowerSum),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!(
                "unknown basis {other:?}, expected one of m, e, h, p, s"
            ))),
        }
    }
}

/// A symmetric function: sparse mapping from partitions to rational
/// coefficients in a tagged basis. Zero coefficients are never stored.
///
/// Structural equality (`==`) requires the same basis; use
/// [`SymFn::eq_as_element`] to compare across bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: coefficient 1 on the empty partition.
    pub fn one(basis: Basis) -> Self {
        SymFn::term(basis, Partition::empty(), Rat::one())
    }

    /// The generator indexed by a single part, e.g. `h_n`; `n = 0` gives 1.
    pub fn generator(basis: Basis, n: u32) -> Self {
        SymFn::term(basis, Partition::single(n), Rat::one())
    }

    /// A single term `coeff * b_lambda`.
    pub fn term(basis: Basis, lambda: Partition, coeff: Rat) -> Self {
        let mut f = SymFn::zero(basis);
        f.add_term(lambda, coeff);
        f
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rat)>,
    {
        let mut f = SymFn::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in the canonical partition order (degree, then
    /// reverse-lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `coeff * b_lambda` in place, dropping the key if it cancels.
    pub fn add_term(&mut self, lambda: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Degrees with a nonzero homogeneous component.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|p| p.size()).collect()
    }

    /// The homogeneous component of the given degree.
    pub fn homogeneous_component(&self, degree: u32) -> SymFn {
        SymFn {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every key partition has the given size. The zero function
    /// is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|p| p.size() == degree)
    }

    /// True when the function is the scalar `c`, i.e. `c` times the empty
    /// partition and nothing else.
    pub fn is_scalar(&self, c: &Rat) -> bool {
        if c.is_zero() {
            return self.is_zero();
        }
        self.terms.len() == 1 && self.coeff(&Partition::empty()) == *c
    }

    pub fn scale(&self, c: &Rat) -> SymFn {
        if c.is_zero() {
            return SymFn::zero(self.basis);
        }
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    fn same_basis_combine(&self, other: &SymFn, negate: bool) -> SymFn {
        assert_eq!(
            self.basis, other.basis,
            "addition requires a common basis; convert explicitly"
        );
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    pub fn plus(&self, other: &SymFn) -> SymFn {
        self.same_basis_combine(other, false)
    }

    pub fn minus(&self, other: &SymFn) -> SymFn {
        self.same_basis_combine(other, true)
    }

    pub fn negate(&self) -> SymFn {
        self.scale(&(-Rat::one()))
    }

    /// Product of two symmetric functions. When both operands already share
    /// a multiplicative basis (`e`, `h`, or `p`) the keys concatenate
    /// directly; otherwise both sides are converted to `h` first, so the
    /// result is expressed in `h` in that case.
    pub fn multiply(&self, other: &SymFn) -> Result<SymFn> {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            return Ok(self.convolve(other));
        }
        let a = self.to_basis(Basis::Homogeneous)?;
        let b = other.to_basis(Basis::Homogeneous)?;
        Ok(a.convolve(&b))
    }

    fn convolve(&self, other: &SymFn) -> SymFn {
        let mut out = SymFn::zero(self.basis);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.merge(q), a * b);
            }
        }
        out
    }

    /// Express the same element of the ring in another basis. Exact; errors
    /// only when a homogeneous degree exceeds the configured conversion cap.
    pub fn to_basis(&self, target: Basis) -> Result<SymFn> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let mut out = SymFn::zero(target);
        for degree in self.degrees() {
            let order = enumerate_partitions(degree);
            let index: HashMap<&Partition, usize> =
                order.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut v = vec![Rat::zero(); order.len()];
            for (p, c) in self.terms.iter().filter(|(p, _)| p.size() == degree) {
                v[index[p]] = c.clone();
            }
            let v = if self.basis == Basis::Monomial {
                v
            } else {
                let table = convert::to_monomial(self.basis, degree)?;
                convert::vec_times_matrix(&v, &table)
            };
            let v = if target == Basis::Monomial {
                v
            } else {
                let table = convert::from_monomial(target, degree)?;
                convert::vec_times_matrix(&v, &table)
            };
            for (i, c) in v.into_iter().enumerate() {
                out.add_term(order[i].clone(), c);
            }
        }
        Ok(out)
    }

    /// Equality as elements of the ring, regardless of basis tags.
    pub fn eq_as_element(&self, other: &SymFn) -> Result<bool> {
        if self.basis == other.basis {
            return Ok(self == other);
        }
        Ok(self.to_basis(Basis::Monomial)? == other.to_basis(Basis::Monomial)?)
    }

    /// The involution determined by swapping `e_n` and `h_n`. Acts on the
    /// power-sum basis by the sign of each key and on Schur keys by
    /// conjugation; monomial input round-trips through the power sums.
    pub fn omega(&self) -> Result<SymFn> {
        match self.basis {
            Basis::Homogeneous => Ok(SymFn {
                basis: Basis::Elementary,
                terms: self.terms.clone(),
            }),
            Basis::Elementary => Ok(SymFn {
                basis: Basis::Homogeneous,
                terms: self.terms.clone(),
            }),
            Basis::PowerSum => Ok(SymFn {
                basis: Basis::PowerSum,
                terms: self
                    .terms
                    .iter()
                    .map(|(p, c)| {
                        let c = if p.sign() < 0 { -c.clone() } else { c.clone() };
                        (p.clone(), c)
                    })
                    .collect(),
            }),
            Basis::Schur => Ok(SymFn {
                basis: Basis::Schur,
                terms: self
                    .terms
                    .iter()
                    .map(|(p, c)| (p.conjugate(), c.clone()))
                    .collect(),
            }),
            Basis::Monomial => self
                .to_basis(Basis::PowerSum)?
                .omega()?
                .to_basis(Basis::Monomial),
        }
    }

    /// Hall scalar product, computed in the power-sum basis.
    pub fn hall_scalar(&self, other: &SymFn) -> Result<Rat> {
        let a = self.to_basis(Basis::PowerSum)?;
        let b = other.to_basis(Basis::PowerSum)?;
        let mut acc = Rat::zero();
        for (p, ca) in a.terms() {
            let cb = b.coeff(p);
            if !cb.is_zero() {
                acc += ca * cb * Rat::from_integer(p.z());
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if !a.is_one() || p.is_empty() {
                write!(f, "{a}")?;
                if !p.is_empty() {
                    write!(f, "*")?;
                }
            }
            if !p.is_empty() {
                write!(f, "{}[{}]", self.basis, p)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Jacobi-Trudi expansion of the Schur function: the determinant
/// `det(h_{lambda_i - i + j})` as a signed sum of `h` keys, with `h_0 = 1`
/// and `h_{<0} = 0`.
pub fn schur_in_h(lambda: &Partition) -> SymFn {
    let ell = lambda.len();
    if ell == 0 {
        return SymFn::one(Basis::Homogeneous);
    }
    let parts = lambda.parts();
    let mut out = SymFn::zero(Basis::Homogeneous);
    // permutation expansion with column pruning: entries below the
    // diagonal band vanish quickly
    fn rec(
        parts: &[u32],
        row: usize,
        used: u64,
        inversions: u32,
        chosen: &mut Vec<u32>,
        out: &mut SymFn,
    ) {
        let ell = parts.len();
        if row == ell {
            let key = Partition::from_unsorted(chosen.clone()).expect("positive parts");
            let sign = if inversions.is_multiple_of(2) {
                rat(1)
            } else {
                rat(-1)
            };
            out.add_term(key, sign);
            return;
        }
        for col in 0..ell {
            if used & (1 << col) != 0 {
                continue;
            }
            let idx = parts[row] as i64 - (row as i64 + 1) + (col as i64 + 1);
            if idx < 0 {
                continue;
            }
            // earlier rows already claimed every used column; those sitting
            // to the right of `col` each contribute one inversion
            let added = ((col + 1)..ell).filter(|&c| used & (1 << c) != 0).count() as u32;
            let pushed = idx > 0;
            if pushed {
                chosen.push(idx as u32);
            }
            rec(
                parts,
                row + 1,
                used | (1 << col),
                inversions + added,
                chosen,
                out,
            );
            if pushed {
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::with_capacity(ell);
    rec(parts, 0, 0, 0, &mut chosen, &mut out);
    out
}

/// The Schur function evaluated at `n_vars` ones, via the hook-content
/// product `prod (n_vars + content) / hook`. Polynomial in `n_vars`, so it
/// extends to negative arguments.
pub fn schur_principal_specialization(lambda: &Partition, n_vars: i64) -> Rat {
    let conj = lambda.conjugate();
    let mut value = Rat::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            let hook = row as i64 - j as i64 + conj.parts()[j] as i64 - i as i64 - 1;
            value *= Rat::new((n_vars + content).into(), hook.into());
        }
    }
    value
}
