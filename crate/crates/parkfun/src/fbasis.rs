//! The multiplicative parking-function basis of the ring of symmetric
//! functions and its unitriangular transition to the `h` basis.
//!
//! For fixed `r`, the degree-`n` basis element at `k = 1` starts with `h_n`
//! plus terms supported on refinements, so products indexed by partitions
//! form an integral basis. The transition matrix to `h` is unit triangular
//! in the reverse-lexicographic partition order (which never lists a
//! refinement before the partition it refines), and expressing an arbitrary
//! symmetric function in the basis is a back-substitution against it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};

use crate::closed_forms::frobenius_expansion;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Rat;
use crate::symfun::{Basis, SymFn};

/// Transition data between the parking-function basis and the `h` basis in
/// one degree. Entry `(i, j)` holds the coefficient of `h_{order[i]}` in the
/// basis element indexed by `order[j]`; with `order` reverse-lexicographic
/// this matrix is lower triangular with unit diagonal, hence determinant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionMatrix {
    degree: u32,
    r: u32,
    order: Vec<Partition>,
    entries: Vec<Vec<Rat>>,
}

impl TransitionMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Index order shared by rows and columns.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// Coefficient of `h_{order[row]}` in the basis element of `order[col]`.
    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row][col]
    }

    /// The `h`-expansion coefficients of the basis element of `order[col]`,
    /// listed against `order`.
    pub fn column(&self, col: usize) -> Vec<Rat> {
        self.entries.iter().map(|row| row[col].clone()).collect()
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| {
            self.entries[i][i].is_one() && ((i + 1)..dim).all(|j| self.entries[i][j].is_zero())
        })
    }
}

/// The basis element for a partition: the product over the parts of the
/// degree-`part`, `k = 1` expansions, in the `h` basis. The empty partition
/// gives 1.
pub fn parking_basis_element(lambda: &Partition, r: u32) -> Result<SymFn> {
    let mut acc = SymFn::one(Basis::Homogeneous);
    for &part in lambda.parts() {
        let factor = frobenius_expansion(part, r, 1, Basis::Homogeneous)?;
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

fn transition_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<TransitionMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<TransitionMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Build (or fetch) the transition matrix for one degree. Construction
/// asserts that the order is refinement-compatible and that the matrix is
/// unit lower triangular.
pub fn transition_to_h(degree: u32, r: u32) -> Result<Arc<TransitionMatrix>> {
    if r == 0 {
        return Err(Error::BadParameter("r must be at least 1".into()));
    }
    if let Some(m) = transition_cache().lock().unwrap().get(&(degree, r)) {
        return Ok(m.clone());
    }
    let order = enumerate_partitions(degree);
    // the order must never list a refinement before what it refines
    for i in 0..order.len() {
        for j in (i + 1)..order.len() {
            assert!(
                !(order[i] != order[j] && order[i].refines(&order[j])),
                "partition order is not refinement-compatible: {} precedes {}",
                order[i],
                order[j]
            );
        }
    }
    let index: HashMap<&Partition, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = order.len();
    let mut entries = vec![vec![Rat::zero(); dim]; dim];
    for (col, lambda) in order.iter().enumerate() {
        let element = parking_basis_element(lambda, r)?;
        for (mu, c) in element.terms() {
            entries[index[&mu]][col] = c.clone();
        }
    }
    let matrix = TransitionMatrix {
        degree,
        r,
        order,
        entries,
    };
    assert!(
        matrix.is_unit_lower_triangular(),
        "transition to h must be unit lower triangular"
    );
    let matrix = Arc::new(matrix);
    Ok(transition_cache()
        .lock()
        .unwrap()
        .entry((degree, r))
        .or_insert(matrix)
        .clone())
}

/// Unique coefficients expressing `f` on the parking-function basis, found
/// degree by degree through a forward substitution against the unit
/// triangular transition matrix. Integral whenever `f` has integral `h`
/// coefficients.
pub fn express_in_parking_basis(f: &SymFn, r: u32) -> Result<BTreeMap<Partition, Rat>> {
    let in_h = f.to_basis(Basis::Homogeneous)?;
    let mut out = BTreeMap::new();
    for degree in in_h.degrees() {
        let component = in_h.homogeneous_component(degree);
        let matrix = transition_to_h(degree, r)?;
        let order = matrix.order();
        let index: HashMap<&Partition, usize> =
            order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut target = vec![Rat::zero(); order.len()];
        for (mu, c) in component.terms() {
            target[index[&mu]] = c.clone();
        }
        // entries[i][j] c_j = target_i with a unit lower triangular matrix:
        // solve top row down
        let mut coeffs = vec![Rat::zero(); order.len()];
        for i in 0..order.len() {
            let mut value = target[i].clone();
            for j in 0..i {
                if !coeffs[j].is_zero() {
                    value -= matrix.entry(i, j) * &coeffs[j];
                }
            }
            coeffs[i] = value;
        }
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                out.insert(order[i].clone(), c);
            }
        }
    }
    Ok(out)
}

/// Coefficient of `p_mu` in the power-sum expansion of the basis element for
/// `lambda`: each factor expands through the power-sum closed form and the
/// factors multiply by key concatenation. Zero whenever some part of `mu`
/// exceeds every part of `lambda`, since a degree-`m` factor only produces
/// power-sum parts up to `m`.
pub fn power_sum_coefficient(lambda: &Partition, r: u32, mu: &Partition) -> Result<Rat> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut acc = SymFn::one(Basis::PowerSum);
    for &part in lambda.parts() {
        let factor = frobenius_expansion(part, r, 1, Basis::PowerSum)?;
        acc = acc.multiply(&factor)?;
    }
    Ok(acc.coeff(mu))
}

/// Coefficient of `p_mu` in the power-sum expansion of the element dual to
/// the `lambda` basis element under the Hall pairing. Since the dual element
/// pairs to 1 against exactly one basis element, this is the coefficient of
/// the `lambda` element in the parking-basis expansion of `p_mu`, divided by
/// `z_mu`. The dual basis itself is never materialized.
pub fn dual_power_sum_coefficient(lambda: &Partition, r: u32, mu: &Partition) -> Result<Rat> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let p_mu = SymFn::term(Basis::PowerSum, mu.clone(), Rat::one());
    let coeffs = express_in_parking_basis(&p_mu, r)?;
    let on_lambda = coeffs.get(lambda).cloned().unwrap_or_else(Rat::zero);
    Ok(on_lambda / Rat::from_integer(mu.z()))
}
