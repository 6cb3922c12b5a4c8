use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;

use crate::classdata::{ClassData, CoefficientTable};
use crate::error::{Error, Result};
use crate::field::{Echelon, Field, GaloisField, Poly, PrimeField};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional algebra given by structure constants:
/// e_i·e_j = Σ_k a_{ijk} e_k.
#[derive(Clone)]
pub struct SCAlgebra<F: Field> {
    id: u64,
    field: F,
    dim: usize,
    constants: Vec<F::Elem>,
    unit: Vec<F::Elem>,
    labels: Vec<String>,
}

impl<F: Field> fmt::Debug for SCAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SCAlgebra")
            .field("field", &self.field.name())
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish()
    }
}

impl<F: Field> SCAlgebra<F> {
    /// `constants[(i*d + j)*d + k] = a_{ijk}`. Checks sizes and the unit law.
    pub fn new(field: F, dim: usize, constants: Vec<F::Elem>, unit: Vec<F::Elem>, labels: Vec<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Algebra("dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim || unit.len() != dim || labels.len() != dim {
            return Err(Error::Algebra(
                "structure constant, unit or label count does not match the dimension".into(),
            ));
        }
        let a = SCAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field,
            dim,
            constants,
            unit,
            labels,
        };
        for i in 0..dim {
            let e = a.basis_vector(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(Error::Algebra(format!(
                    "unit law fails on basis element {}",
                    a.labels[i]
                )));
            }
        }
        Ok(a)
    }

    /// Identity for ambient-space checks.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                let row = &self.constants[(i * d + j) * d..(i * d + j + 1) * d];
                for (o, a) in out.iter_mut().zip(row) {
                    if !f.is_zero(a) {
                        *o = f.add(o, &f.mul(&c, a));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|a| self.field.is_zero(a))
    }

    /// x^e by square-and-multiply.
    pub fn pow(&self, x: &[F::Elem], e: &BigUint) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        for bit in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(bit) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    /// p(x)·u, where u is the unit of the component containing x.
    pub fn eval_poly(&self, p: &Poly<F>, x: &[F::Elem], u: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero_vector();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.scale(c, u));
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (i + 1..d).all(|j| (0..d).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }

    /// (e_i e_j) e_l = e_i (e_j e_l) on every basis triple for d ≤ 60; above
    /// that on a deterministic sample of triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if d <= 60 {
            Box::new((0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |l| (i, j, l)))))
        } else {
            let n = d * d * d;
            let step = (n / 20_000).max(1);
            Box::new((0..n).step_by(step).map(move |t| (t / (d * d), (t / d) % d, t % d)))
        };
        for (i, j, l) in triples {
            let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
            let jl = self.mul(&self.basis_vector(j), &self.basis_vector(l));
            if self.mul(&ij, &self.basis_vector(l)) != self.mul(&self.basis_vector(i), &jl) {
                return false;
            }
        }
        true
    }

    /// The same structure constants over another field of the same
    /// characteristic; every constant must lie in the prime field.
    pub fn base_change<G: Field>(&self, field: G) -> Result<SCAlgebra<G>> {
        if field.characteristic() != self.field.characteristic() {
            return Err(Error::Algebra("base change must preserve the characteristic".into()));
        }
        let map = |a: &F::Elem| -> Result<G::Elem> {
            let c = self
                .field
                .prime_coordinate(a)
                .ok_or_else(|| Error::Algebra("structure constant outside the prime field".into()))?;
            Ok(field.from_int(c as i64))
        };
        let constants = self.constants.iter().map(map).collect::<Result<Vec<_>>>()?;
        let unit = self.unit.iter().map(map).collect::<Result<Vec<_>>>()?;
        SCAlgebra::new(field.clone(), self.dim, constants, unit, self.labels.clone())
    }

    /// Span of the given vectors, as a subspace of this algebra.
    pub fn span<I: IntoIterator<Item = Vec<F::Elem>>>(&self, vectors: I) -> Subspace<F> {
        Subspace {
            algebra: self.id,
            echelon: Echelon::from_vectors(self.field.clone(), self.dim, vectors),
        }
    }

    pub fn whole(&self) -> Subspace<F> {
        self.span((0..self.dim).map(|i| self.basis_vector(i)))
    }

    pub fn zero_subspace(&self) -> Subspace<F> {
        self.span(std::iter::empty())
    }

    /// Span of all products u·v for u, v in the bases of `a` and `b`.
    pub fn product_space(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
        if a.algebra != self.id || b.algebra != self.id {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Echelon::new(self.field.clone(), self.dim);
        for u in a.basis() {
            for v in b.basis() {
                out.insert(self.mul(u, v));
                if out.dim() == self.dim {
                    return Ok(Subspace {
                        algebra: self.id,
                        echelon: out,
                    });
                }
            }
        }
        Ok(Subspace {
            algebra: self.id,
            echelon: out,
        })
    }
}

/// The centre of a group algebra over `field`: basis the class sums, constants
/// the class multiplication coefficients reduced mod p, unit the identity class.
pub fn center_algebra<F: Field>(field: F, classes: &ClassData, coeffs: &CoefficientTable) -> Result<SCAlgebra<F>> {
    let r = classes.num_classes();
    if coeffs.num_classes() != r {
        return Err(Error::Algebra(format!(
            "{} classes but a coefficient table for {}",
            r,
            coeffs.num_classes()
        )));
    }
    let p = field.characteristic() as u128;
    let mut constants = Vec::with_capacity(r * r * r);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                constants.push(field.from_int((coeffs.get(i, j, k) % p) as i64));
            }
        }
    }
    let mut unit = vec![field.zero(); r];
    unit[0] = field.one();
    SCAlgebra::new(field, r, constants, unit, classes.labels.clone())
}

/// Reinterprets an algebra over GF(p) over GF(p^m).
pub fn extend_scalars(a: &SCAlgebra<PrimeField>, m: u32) -> Result<SCAlgebra<GaloisField>> {
    a.base_change(GaloisField::new(a.field().characteristic(), m))
}

/// A subspace of an algebra, stored in canonical reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    algebra: u64,
    echelon: Echelon<F>,
}

impl<F: Field> Subspace<F> {
    pub fn algebra_id(&self) -> u64 {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        self.echelon.rows()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.echelon.contains(v)
    }

    /// Canonical representative of v modulo this subspace.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.echelon.reduce(v)
    }

    pub fn echelon(&self) -> &Echelon<F> {
        &self.echelon
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Same ambient algebra and same span.
    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.algebra == other.algebra && self.echelon.rows() == other.echelon.rows()
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        if self.algebra != other.algebra {
            return Err(Error::AmbientMismatch);
        }
        let mut e = self.echelon.clone();
        for v in other.basis() {
            e.insert(v.clone());
        }
        Ok(Subspace {
            algebra: self.algebra,
            echelon: e,
        })
    }
}
