use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::algebra::{SCAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::field::{Field, Matrix};

/// Matrix (rows = images of basis vectors) of x ↦ x^q, q = |F|.
///
/// Over GF(q) this map is F-linear on a commutative algebra, and on the
/// nilradical it agrees with iterating x ↦ x^p.
pub fn frobenius_operator<F: Field>(a: &SCAlgebra<F>) -> Matrix<F> {
    let q = a.field().size();
    let rows = (0..a.dim()).map(|i| a.pow(&a.basis_vector(i), &q)).collect();
    Matrix::from_rows(a.field().clone(), a.dim(), rows)
}

/// Least k with q^k ≥ d.
pub fn frobenius_depth(q: &BigUint, d: usize) -> u32 {
    let d = BigUint::from(d);
    let mut k = 0;
    let mut qk = BigUint::from(1u32);
    while qk < d {
        qk *= q;
        k += 1;
    }
    k.max(1)
}

/// The Jacobson radical of a commutative algebra: the kernel of the k-fold
/// Frobenius iterate with q^k ≥ d.
pub fn radical<F: Field>(a: &SCAlgebra<F>) -> Result<Subspace<F>> {
    if !a.is_commutative() {
        return Err(Error::Algebra(
            "radical via Frobenius needs a commutative algebra".into(),
        ));
    }
    let fr = frobenius_operator(a);
    let k = frobenius_depth(&a.field().size(), a.dim());
    let m = fr.pow(k as u64);
    // row vectors v with v·M = 0
    let ker = m.transpose().kernel();
    Ok(a.span(ker.row_vecs()))
}

/// Layer dimensions [dim A, dim J, dim J², …, 0] of a Loewy series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoewyReport {
    pub dim: usize,
    pub layers: Vec<usize>,
    pub loewy_length: usize,
}

impl LoewyReport {
    pub fn from_layers(layers: Vec<usize>) -> Self {
        let loewy_length = layers.iter().position(|&d| d == 0).unwrap_or(layers.len());
        LoewyReport {
            dim: layers[0],
            layers,
            loewy_length,
        }
    }

    /// dim J^n, zero past the end of the series.
    pub fn layer(&self, n: usize) -> usize {
        self.layers.get(n).copied().unwrap_or(0)
    }

    pub fn j2(&self) -> usize {
        self.layer(2)
    }
}

/// [U, R, R², …, 0] with R^{n+1} = R·R^n, all inside the ambient algebra.
pub fn power_chain<F: Field>(a: &SCAlgebra<F>, top: Subspace<F>, r: &Subspace<F>) -> Result<Vec<Subspace<F>>> {
    let mut chain = vec![top, r.clone()];
    while !chain.last().unwrap().is_zero() {
        let next = a.product_space(r, chain.last().unwrap())?;
        if next.dim() >= chain.last().unwrap().dim() {
            return Err(Error::Algebra(
                "radical powers fail to decrease; the subspace is not nilpotent".into(),
            ));
        }
        chain.push(next);
    }
    Ok(chain)
}

/// The Loewy series of A: J^{n+1} = J·J^n until zero.
pub fn loewy_chain<F: Field>(a: &SCAlgebra<F>) -> Result<Vec<Subspace<F>>> {
    let j = radical(a)?;
    power_chain(a, a.whole(), &j)
}

pub fn loewy_series<F: Field>(a: &SCAlgebra<F>) -> Result<LoewyReport> {
    Ok(LoewyReport::from_layers(
        loewy_chain(a)?.iter().map(Subspace::dim).collect(),
    ))
}

/// The component A·e and its radical J·e, for an idempotent e.
pub fn component<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, e: &[F::Elem]) -> (Subspace<F>, Subspace<F>) {
    let ae = a.span((0..a.dim()).map(|i| a.mul(&a.basis_vector(i), e)));
    let je = a.span(j.basis().iter().map(|b| a.mul(b, e)));
    (ae, je)
}

/// Loewy series of the component A·e: layers (J·e)^n.
pub fn component_loewy<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, e: &[F::Elem]) -> Result<LoewyReport> {
    let (ae, je) = component(a, j, e);
    let chain = power_chain(a, ae, &je)?;
    Ok(LoewyReport::from_layers(chain.iter().map(Subspace::dim).collect()))
}
