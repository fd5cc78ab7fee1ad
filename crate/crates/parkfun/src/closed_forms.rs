//! Closed-form expansions of the parking Frobenius characteristic for any
//! integer `k`, the dual coefficients, special negative-`k` values, the
//! expansions of `e_n`, `p_n`, `h_n` in the parking-function basis, and the
//! mixed scalar-product formula.
//!
//! For `k <= 0` the expansions themselves are the definition. The prefactor
//! `k/(rn+k)` degenerates at `rn+k = 0`; the power-sum form, with the
//! convention `0^0 = 1`, stays valid there and is the designated fallback.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, gen_multinomial, Partition};
use crate::rational::{int_pow, Rat};
use crate::series::h_series;
use crate::symfun::{schur_principal_specialization, Basis, SymFn};

/// The three single-term collapse families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalKind {
    Elementary,
    PowerSum,
    Homogeneous,
}

fn require_positive_r(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::BadParameter("r must be at least 1".into()));
    }
    Ok(())
}

/// Closed-form expansion of the degree-`n` parking Frobenius characteristic
/// in the requested basis, valid for every integer `k`.
///
/// All five expansions agree as ring elements. When `rn + k = 0` only the
/// power-sum form is defined (with `0^0 = 1`); requesting another basis
/// there reports the degenerate prefactor.
pub fn frobenius_expansion(n: u32, r: u32, k: i64, basis: Basis) -> Result<SymFn> {
    require_positive_r(r)?;
    if n == 0 {
        return Ok(SymFn::one(basis));
    }
    let side = r as i64 * n as i64 + k;
    if basis == Basis::PowerSum {
        let mut f = SymFn::zero(Basis::PowerSum);
        for lambda in enumerate_partitions(n) {
            let ell = lambda.len() as u32;
            // 0^0 = 1 keeps the length-one term alive at side = 0
            let power = if ell == 1 {
                Rat::one()
            } else {
                Rat::from_integer(int_pow(side, ell - 1))
            };
            let coeff = Rat::new(k.into(), lambda.z()) * power;
            f.add_term(lambda, coeff);
        }
        return Ok(f);
    }
    if side == 0 {
        return Err(Error::ZeroPrefactor { n, r, k });
    }
    let prefactor = Rat::new(k.into(), side.into());
    let mut f = SymFn::zero(basis);
    for lambda in enumerate_partitions(n) {
        let ell = lambda.len() as i64;
        let coeff = match basis {
            Basis::Homogeneous => gen_multinomial(side, &lambda.multiplicity_counts()),
            Basis::Elementary => {
                let sign = Rat::from_integer(lambda.sign().into());
                sign * gen_multinomial(side + ell - 1, &lambda.multiplicity_counts())
            }
            Basis::Monomial => {
                let mut prod = Rat::one();
                for &part in lambda.parts() {
                    prod *= gen_multinomial(part as i64 + side - 1, &[part]);
                }
                prod
            }
            Basis::Schur => schur_principal_specialization(&lambda, side),
            Basis::PowerSum => unreachable!("handled above"),
        };
        f.add_term(lambda, &prefactor * coeff);
    }
    Ok(f)
}

/// Monomial expansion of the omega image:
/// `(k/(rn+k)) sum_lambda prod_i binom(rn+k, lambda_i) m_lambda`.
pub fn omega_frobenius_monomial(n: u32, r: u32, k: i64) -> Result<SymFn> {
    require_positive_r(r)?;
    if n == 0 {
        return Ok(SymFn::one(Basis::Monomial));
    }
    let side = r as i64 * n as i64 + k;
    if side == 0 {
        return Err(Error::ZeroPrefactor { n, r, k });
    }
    let prefactor = Rat::new(k.into(), side.into());
    let mut f = SymFn::zero(Basis::Monomial);
    for lambda in enumerate_partitions(n) {
        let mut prod = Rat::one();
        for &part in lambda.parts() {
            prod *= gen_multinomial(side, &[part]);
        }
        f.add_term(lambda, &prefactor * prod);
    }
    Ok(f)
}

/// The coefficient-extraction route: `k/(rn+k)` times the `t^n` coefficient
/// of the `(rn+k)`-th power of the complete-homogeneous series.
pub fn frobenius_via_h_series(n: u32, r: u32, k: i64) -> Result<SymFn> {
    require_positive_r(r)?;
    let side = r as i64 * n as i64 + k;
    if side <= 0 {
        return Err(Error::BadParameter(format!(
            "series extraction needs rn+k > 0, got {side}"
        )));
    }
    if n == 0 {
        return Ok(SymFn::one(Basis::Homogeneous));
    }
    let h = h_series(n as usize);
    let powered = h.pow(side, n as usize)?;
    Ok(powered
        .coeff(n as usize)
        .scale(&Rat::new(k.into(), side.into())))
}

/// Dual coefficients: minus the expansion at `-k`, in the `h` basis. For
/// `rn = k` the value routes through the power-sum form.
pub fn dual_frobenius(n: u32, r: u32, k: u32) -> Result<SymFn> {
    require_positive_r(r)?;
    if n == 0 {
        return Err(Error::BadParameter(
            "dual coefficients start at n = 1".into(),
        ));
    }
    if k == 0 {
        return Ok(SymFn::zero(Basis::Homogeneous));
    }
    let side = r as i64 * n as i64 - k as i64;
    if side == 0 {
        return frobenius_expansion(n, r, -(k as i64), Basis::PowerSum)?
            .negate()
            .to_basis(Basis::Homogeneous);
    }
    Ok(frobenius_expansion(n, r, -(k as i64), Basis::Homogeneous)?.negate())
}

/// The three collapse points at strongly negative `k`:
/// `(-1)^n (rn+1) e_n` at `k = -rn-1`, `-r p_n` at `k = -rn`, and
/// `(1-rn) h_n` at `k = -rn+1`. Computed from the power-sum form and
/// returned in the named basis.
pub fn special_value(n: u32, r: u32, kind: ClassicalKind) -> Result<SymFn> {
    require_positive_r(r)?;
    if n == 0 {
        return Err(Error::BadParameter("special values start at n = 1".into()));
    }
    let rn = r as i64 * n as i64;
    let (k, basis) = match kind {
        ClassicalKind::Elementary => (-rn - 1, Basis::Elementary),
        ClassicalKind::PowerSum => (-rn, Basis::PowerSum),
        ClassicalKind::Homogeneous => (-rn + 1, Basis::Homogeneous),
    };
    frobenius_expansion(n, r, k, Basis::PowerSum)?.to_basis(basis)
}

/// Coefficients expressing `e_n`, `p_n`, or `h_n` on the parking-function
/// basis elements indexed by partitions of `n`:
/// the signed multinomial sums divided by the collapse prefactor.
///
/// The degenerate `h` case at `rn = 1` returns the direct identity
/// (the basis element of `(1)` itself).
pub fn classical_in_parking_basis(
    n: u32,
    r: u32,
    kind: ClassicalKind,
) -> Result<BTreeMap<Partition, Rat>> {
    require_positive_r(r)?;
    if n == 0 {
        return Err(Error::BadParameter("expansions start at n = 1".into()));
    }
    let rn = r as i64 * n as i64;
    let (offset, prefactor) = match kind {
        ClassicalKind::Elementary => {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            (0i64, Rat::from_integer((sign * (rn + 1)).into()))
        }
        ClassicalKind::PowerSum => (-1, Rat::from_integer((-(r as i64)).into())),
        ClassicalKind::Homogeneous => {
            if rn == 1 {
                let mut map = BTreeMap::new();
                map.insert(Partition::single(1), Rat::one());
                return Ok(map);
            }
            (-2, Rat::from_integer((1 - rn).into()))
        }
    };
    let mut map = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let ell = lambda.len() as i64;
        let sign = if ell % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        let coeff =
            sign * gen_multinomial(rn + ell + offset, &lambda.multiplicity_counts()) / &prefactor;
        if !coeff.is_zero() {
            map.insert(lambda, coeff);
        }
    }
    Ok(map)
}

/// Closed form for the scalar product of a degree-`n` parking Frobenius
/// characteristic against a product of per-part ones:
/// `(k/(rn+k)) prod_i (k_i/(r_i lambda_i + k_i))
///  binom((rn+k)(r_i lambda_i + k_i) + lambda_i - 1, lambda_i)`.
pub fn mixed_scalar_product_formula(
    n: u32,
    r: u32,
    k: i64,
    lambda: &Partition,
    rs: &[u32],
    ks: &[i64],
) -> Result<Rat> {
    require_positive_r(r)?;
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: lambda.size(),
        });
    }
    if rs.len() != lambda.len() || ks.len() != lambda.len() {
        return Err(Error::LengthMismatch {
            seq: lambda.len(),
            bound: rs.len().min(ks.len()),
        });
    }
    let side = r as i64 * n as i64 + k;
    if side == 0 {
        return Err(Error::ZeroDenominator {
            what: format!("rn+k with n={n}, r={r}, k={k}"),
        });
    }
    let mut value = Rat::new(k.into(), side.into());
    for ((&part, &ri), &ki) in lambda.parts().iter().zip(rs).zip(ks) {
        let part_side = ri as i64 * part as i64 + ki;
        if part_side == 0 {
            return Err(Error::ZeroDenominator {
                what: format!("r_i*lambda_i+k_i with lambda_i={part}, r_i={ri}, k_i={ki}"),
            });
        }
        value *= Rat::new(ki.into(), part_side.into());
        value *= gen_multinomial(side * part_side + part as i64 - 1, &[part]);
    }
    Ok(value)
}
