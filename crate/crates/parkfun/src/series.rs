//! Truncated formal power series in `t` (and in `q`, `t`) whose coefficients
//! are symmetric functions.
//!
//! Truncation degrees are explicit everywhere: an operation never invents
//! coefficients beyond what its inputs carry. Series produced from parking
//! functions are graded (the `t^n` coefficient is homogeneous of degree `n`);
//! composition clears the flag because its intermediate coefficients mix
//! degrees until the final cancellation.

use crate::error::{Error, Result};
use crate::parking::{parking_frobenius, parking_frobenius_q, QSymFn};
use crate::rational::{rat, Rat};
use crate::symfun::{Basis, SymFn};

use num::One;

/// Truncated power series in `t` over the ring of symmetric functions.
/// Coefficients run from `t^0` to `t^truncation()` inclusive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    coeffs: Vec<SymFn>,
    graded: bool,
}

impl GradedSeries {
    /// Wrap explicit coefficients. With `graded` set, every coefficient must
    /// be homogeneous of its index.
    pub fn new(coeffs: Vec<SymFn>, graded: bool) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParameter(
                "a series carries at least the constant coefficient".into(),
            ));
        }
        if graded {
            for (n, c) in coeffs.iter().enumerate() {
                if !c.is_homogeneous_of(n as u32) {
                    return Err(Error::BadParameter(format!(
                        "coefficient of t^{n} is not homogeneous of degree {n}"
                    )));
                }
            }
        }
        Ok(GradedSeries { coeffs, graded })
    }

    /// The constant series 1 truncated at the given degree.
    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![SymFn::zero(Basis::Homogeneous); truncation + 1];
        coeffs[0] = SymFn::one(Basis::Homogeneous);
        GradedSeries {
            coeffs,
            graded: true,
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn coeff(&self, n: usize) -> &SymFn {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[SymFn] {
        &self.coeffs
    }

    /// Drop coefficients above `truncation`. Errors rather than extending.
    pub fn truncate(&self, truncation: usize) -> Result<GradedSeries> {
        if truncation > self.truncation() {
            return Err(Error::TruncationExceeded {
                requested: truncation,
                available: self.truncation(),
            });
        }
        Ok(GradedSeries {
            coeffs: self.coeffs[..=truncation].to_vec(),
            graded: self.graded,
        })
    }

    fn constant_is_one(&self) -> bool {
        self.coeffs[0].is_scalar(&Rat::one())
    }

    pub fn plus(&self, other: &GradedSeries) -> GradedSeries {
        let trunc = self.truncation().min(other.truncation());
        let coeffs = (0..=trunc)
            .map(|n| {
                let a = self.coeffs[n]
                    .to_basis(Basis::Homogeneous)
                    .expect("degree within cap");
                let b = other.coeffs[n]
                    .to_basis(Basis::Homogeneous)
                    .expect("degree within cap");
                a.plus(&b)
            })
            .collect();
        GradedSeries {
            coeffs,
            graded: self.graded && other.graded,
        }
    }

    pub fn scale(&self, c: &Rat) -> GradedSeries {
        GradedSeries {
            coeffs: self.coeffs.iter().map(|f| f.scale(c)).collect(),
            graded: self.graded,
        }
    }

    /// Cauchy product, truncated at the shorter of the two inputs.
    pub fn times(&self, other: &GradedSeries) -> Result<GradedSeries> {
        let trunc = self.truncation().min(other.truncation());
        let mut coeffs = vec![SymFn::zero(Basis::Homogeneous); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].multiply(&other.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].plus(&prod.to_basis(Basis::Homogeneous)?);
            }
        }
        Ok(GradedSeries {
            coeffs,
            graded: self.graded && other.graded,
        })
    }

    /// Multiplicative inverse, valid when the constant term is the scalar 1.
    fn reciprocal(&self, truncation: usize) -> Result<GradedSeries> {
        if truncation > self.truncation() {
            return Err(Error::TruncationExceeded {
                requested: truncation,
                available: self.truncation(),
            });
        }
        if !self.constant_is_one() {
            return Err(Error::NonUnitConstantTerm { op: "reciprocal" });
        }
        let mut inv = vec![SymFn::zero(Basis::Homogeneous); truncation + 1];
        inv[0] = SymFn::one(Basis::Homogeneous);
        for n in 1..=truncation {
            let mut acc = SymFn::zero(Basis::Homogeneous);
            for j in 1..=n {
                if self.coeffs[j].is_zero() || inv[n - j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[j].multiply(&inv[n - j])?;
                acc = acc.plus(&prod.to_basis(Basis::Homogeneous)?);
            }
            inv[n] = acc.negate();
        }
        Ok(GradedSeries {
            coeffs: inv,
            graded: self.graded,
        })
    }

    /// Exact truncated power, any integer exponent. Negative exponents go
    /// through the series reciprocal and therefore require constant term 1.
    pub fn pow(&self, exponent: i64, truncation: usize) -> Result<GradedSeries> {
        if truncation > self.truncation() {
            return Err(Error::TruncationExceeded {
                requested: truncation,
                available: self.truncation(),
            });
        }
        if exponent == 0 {
            return Ok(GradedSeries::one(truncation));
        }
        let (base, mut e) = if exponent < 0 {
            (self.reciprocal(truncation)?, (-exponent) as u64)
        } else {
            (self.truncate(truncation)?, exponent as u64)
        };
        let mut acc = GradedSeries::one(truncation);
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = acc.times(&sq)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.times(&sq)?;
        }
        Ok(acc)
    }

    /// Formal logarithm; requires constant term 1. Grading is preserved.
    pub fn log(&self, truncation: usize) -> Result<GradedSeries> {
        if truncation > self.truncation() {
            return Err(Error::TruncationExceeded {
                requested: truncation,
                available: self.truncation(),
            });
        }
        if !self.constant_is_one() {
            return Err(Error::NonUnitConstantTerm { op: "log" });
        }
        // n S_n = sum_{j=1}^{n} j L_j S_{n-j}, solved for L_n
        let mut log = vec![SymFn::zero(Basis::Homogeneous); truncation + 1];
        for n in 1..=truncation {
            let mut acc = self.coeffs[n]
                .to_basis(Basis::Homogeneous)?
                .scale(&rat(n as i64));
            for j in 1..n {
                if log[j].is_zero() || self.coeffs[n - j].is_zero() {
                    continue;
                }
                let prod = log[j].multiply(&self.coeffs[n - j])?;
                acc = acc.minus(&prod.to_basis(Basis::Homogeneous)?.scale(&rat(j as i64)));
            }
            log[n] = acc.scale(&(Rat::one() / rat(n as i64)));
        }
        Ok(GradedSeries {
            coeffs: log,
            graded: self.graded,
        })
    }

    /// Substitute the inner series (which must have zero constant term) for
    /// `t`. Evaluated by Horner's rule; the result is ungraded because the
    /// intermediate coefficients mix degrees.
    pub fn compose(&self, inner: &GradedSeries, truncation: usize) -> Result<GradedSeries> {
        if truncation > self.truncation() || truncation > inner.truncation() {
            return Err(Error::TruncationExceeded {
                requested: truncation,
                available: self.truncation().min(inner.truncation()),
            });
        }
        if !inner.coeffs[0].is_zero() {
            return Err(Error::BadParameter(
                "composition requires the inner series to have zero constant term".into(),
            ));
        }
        let inner = {
            let mut t = inner.truncate(truncation)?;
            t.graded = false;
            t
        };
        let mut acc = GradedSeries {
            coeffs: vec![SymFn::zero(Basis::Homogeneous); truncation + 1],
            graded: false,
        };
        for n in (0..=truncation).rev() {
            acc = acc.times(&inner)?;
            let c = self.coeffs[n].to_basis(Basis::Homogeneous)?;
            acc.coeffs[0] = acc.coeffs[0].plus(&c);
        }
        acc.graded = false;
        Ok(acc)
    }
}

/// The parking generating series: the `t^n` coefficient is the Frobenius
/// characteristic of the `(r,k)`-parking functions of length `n`.
pub fn parking_series(r: u32, k: u32, truncation: usize) -> GradedSeries {
    let coeffs = (0..=truncation)
        .map(|n| parking_frobenius(n as u32, r, k))
        .collect();
    GradedSeries {
        coeffs,
        graded: true,
    }
}

/// The complete-homogeneous generating series `sum h_n t^n`.
pub fn h_series(truncation: usize) -> GradedSeries {
    let coeffs = (0..=truncation)
        .map(|n| SymFn::generator(Basis::Homogeneous, n as u32))
        .collect();
    GradedSeries {
        coeffs,
        graded: true,
    }
}

/// The alternating elementary series `E(-t) = sum (-1)^n e_n t^n`.
pub fn e_alternating_series(truncation: usize) -> GradedSeries {
    let coeffs = (0..=truncation)
        .map(|n| {
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            SymFn::generator(Basis::Elementary, n as u32).scale(&sign)
        })
        .collect();
    GradedSeries {
        coeffs,
        graded: true,
    }
}

/// Compositional-inverse identity: with `A(t) = sum_n F_n^{(r,r)} t^{n+1}`
/// and `B(t) = t E(-t)^r`, checks `B(A(t)) = t` through the requested
/// truncation degree. The cancellation happens across degrees, so the
/// composition runs ungraded.
pub fn lagrange_inverse_check(r: u32, truncation: usize) -> Result<bool> {
    if truncation < 2 {
        return Err(Error::BadParameter(
            "the inverse check needs truncation degree >= 2".into(),
        ));
    }
    let inner = {
        // t * (parking series for k = r): the shift breaks the grading
        let p = parking_series(r, r, truncation - 1);
        let mut coeffs = vec![SymFn::zero(Basis::Homogeneous)];
        coeffs.extend(p.coeffs().iter().cloned());
        GradedSeries::new(coeffs, false)?
    };
    let outer = {
        let e_pow = e_alternating_series(truncation - 1).pow(r as i64, truncation - 1)?;
        let mut coeffs = vec![SymFn::zero(Basis::Homogeneous)];
        coeffs.extend(e_pow.coeffs().iter().cloned());
        GradedSeries::new(coeffs, false)?
    };
    let composed = outer.compose(&inner, truncation)?;
    for n in 0..=truncation {
        let want = if n == 1 {
            SymFn::one(Basis::Homogeneous)
        } else {
            SymFn::zero(Basis::Homogeneous)
        };
        if !composed.coeff(n).eq_as_element(&want)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truncated series in `t` whose coefficients are `q`-polynomials over the
/// ring of symmetric functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QGradedSeries {
    coeffs: Vec<QSymFn>,
}

impl QGradedSeries {
    pub fn new(coeffs: Vec<QSymFn>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParameter(
                "a series carries at least the constant coefficient".into(),
            ));
        }
        Ok(QGradedSeries { coeffs })
    }

    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![QSymFn::zero(); truncation + 1];
        coeffs[0] = QSymFn::one();
        QGradedSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &QSymFn {
        &self.coeffs[n]
    }

    pub fn times(&self, other: &QGradedSeries) -> Result<QGradedSeries> {
        let trunc = self.truncation().min(other.truncation());
        let mut coeffs = vec![QSymFn::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].multiply(&other.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].plus(&prod);
            }
        }
        Ok(QGradedSeries { coeffs })
    }

    /// The substitution `t -> q^i t`: the `t^n` coefficient picks up a
    /// `q`-exponent shift of `i * n`.
    pub fn substitute_q_power(&self, i: u64) -> QGradedSeries {
        QGradedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.shift_exponents(i * n as u64))
                .collect(),
        }
    }

    /// Evaluate every coefficient at `q = 1`.
    pub fn at_q_one(&self) -> GradedSeries {
        GradedSeries {
            coeffs: self.coeffs.iter().map(|c| c.at_q_one()).collect(),
            graded: false,
        }
    }
}

/// q-refined parking generating series.
pub fn parking_series_q(r: u32, k: u32, truncation: usize) -> QGradedSeries {
    QGradedSeries {
        coeffs: (0..=truncation)
            .map(|n| parking_frobenius_q(n as u32, r, k))
            .collect(),
    }
}
