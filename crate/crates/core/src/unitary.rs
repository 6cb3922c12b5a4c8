//! PSU(3, q) as a permutation group on the q³+1 isotropic points of the
//! Hermitian form h(x, y) = x₁y₃^q + x₂y₂^q + x₃y₁^q over GF(q²).

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{is_prime, prime_divisors, Field, GaloisField};
use crate::group::Permutation;

pub type Elem = <GaloisField as Field>::Elem;
pub type Point = [Elem; 3];
pub type Mat3 = [[Elem; 3]; 3];

/// `Some((p, e))` with q = p^e.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    if !is_prime(p) {
        return None;
    }
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p as u32, e))
}

/// |PSU(3, q)| = q³(q²−1)(q³+1)/gcd(3, q+1).
pub fn psu3_order(q: u64) -> u128 {
    let q = q as u128;
    q.pow(3) * (q * q - 1) * (q.pow(3) + 1) / 3u128.gcd(&(q + 1))
}

#[derive(Clone, Debug)]
pub struct HermitianGeometry {
    pub q: u64,
    pub field: GaloisField,
    /// Normalized isotropic points (first nonzero coordinate 1), sorted.
    pub points: Vec<Point>,
    index: HashMap<Point, usize>,
}

impl HermitianGeometry {
    /// x ↦ x^q.
    pub fn conj(&self, x: &Elem) -> Elem {
        let e = prime_power(self.q).unwrap().1;
        let mut r = x.clone();
        for _ in 0..e {
            r = self.field.frobenius(&r);
        }
        r
    }

    pub fn form(&self, x: &Point, y: &Point) -> Elem {
        let f = &self.field;
        let t1 = f.mul(&x[0], &self.conj(&y[2]));
        let t2 = f.mul(&x[1], &self.conj(&y[1]));
        let t3 = f.mul(&x[2], &self.conj(&y[0]));
        f.add(&f.add(&t1, &t2), &t3)
    }

    fn normalize(&self, x: &Point) -> Option<Point> {
        let f = &self.field;
        let lead = x.iter().find(|c| !f.is_zero(c))?;
        let inv = f.inv(lead).unwrap();
        Some([f.mul(&x[0], &inv), f.mul(&x[1], &inv), f.mul(&x[2], &inv)])
    }

    pub fn point_index(&self, x: &Point) -> Option<usize> {
        self.index.get(&self.normalize(x)?).copied()
    }

    fn apply(&self, g: &Mat3, x: &Point) -> Point {
        let f = &self.field;
        let row = |r: usize| (0..3).fold(f.zero(), |acc, c| f.add(&acc, &f.mul(&g[r][c], &x[c])));
        [row(0), row(1), row(2)]
    }

    /// gᵀ·M·g^σ = M for the antidiagonal form matrix M.
    pub fn preserves_form(&self, g: &Mat3) -> bool {
        let f = &self.field;
        let m = antidiagonal(f);
        let gs: Vec<Vec<Elem>> = g.iter().map(|row| row.iter().map(|x| self.conj(x)).collect()).collect();
        for i in 0..3 {
            for j in 0..3 {
                // (gᵀ M g^σ)_{ij} = Σ_{k,l} g_{ki} M_{kl} g^σ_{lj}
                let mut acc = f.zero();
                for k in 0..3 {
                    for l in 0..3 {
                        if f.is_zero(&m[k][l]) {
                            continue;
                        }
                        acc = f.add(&acc, &f.mul(&f.mul(&g[k][i], &m[k][l]), &gs[l][j]));
                    }
                }
                if acc != m[i][j] {
                    return false;
                }
            }
        }
        true
    }

    /// The permutation of point indices induced by the projective action x ↦ g·x.
    pub fn permutation(&self, g: &Mat3) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|x| {
                self.point_index(&self.apply(g, x))
                    .ok_or_else(|| Error::Internal("matrix does not preserve the isotropic points".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

fn antidiagonal(f: &GaloisField) -> Mat3 {
    let (z, o) = (f.zero(), f.one());
    [
        [z.clone(), z.clone(), o.clone()],
        [z.clone(), o.clone(), z.clone()],
        [o, z.clone(), z],
    ]
}

/// The isotropic points of the Hermitian form over GF(q²).
pub fn isotropic_points(q: u64) -> Result<HermitianGeometry> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::Input(format!("{q} is not a prime power")))?;
    let field = GaloisField::new(p, 2 * e);
    let size = q * q;
    let elems: Vec<Elem> = (0..size).map(|n| field.nth_element(n)).collect();
    let mut geo = HermitianGeometry {
        q,
        field: field.clone(),
        points: Vec::new(),
        index: HashMap::new(),
    };
    let (z, o) = (field.zero(), field.one());
    let mut candidates: Vec<Point> = vec![[z.clone(), z.clone(), o.clone()]];
    for c in &elems {
        candidates.push([z.clone(), o.clone(), c.clone()]);
    }
    for b in &elems {
        for c in &elems {
            candidates.push([o.clone(), b.clone(), c.clone()]);
        }
    }
    let mut points: Vec<Point> = candidates
        .into_iter()
        .filter(|x| field.is_zero(&geo.form(x, x)))
        .collect();
    points.sort();
    let expected = (q.pow(3) + 1) as usize;
    if points.len() != expected {
        return Err(Error::Internal(format!(
            "found {} isotropic points over GF({q}^2), expected {expected}",
            points.len()
        )));
    }
    geo.index = points.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    geo.points = points;
    Ok(geo)
}

/// Generators of PSU(3, q): every unipotent u(a, b) with a^(q+1) + b + b^q = 0,
/// plus the antidiagonal Weyl element, acting on the isotropic points.
pub fn psu3_generators(q: u64) -> Result<Vec<Permutation>> {
    let geo = isotropic_points(q)?;
    let f = &geo.field;
    let size = q * q;
    let elems: Vec<Elem> = (0..size).map(|n| f.nth_element(n)).collect();
    let (z, o) = (f.zero(), f.one());
    let mut mats: Vec<Mat3> = Vec::new();
    for a in &elems {
        let norm = f.mul(a, &geo.conj(a));
        for b in &elems {
            let t = f.add(&f.add(&norm, b), &geo.conj(b));
            if f.is_zero(&t) {
                mats.push([
                    [o.clone(), a.clone(), b.clone()],
                    [z.clone(), o.clone(), f.neg(&geo.conj(a))],
                    [z.clone(), z.clone(), o.clone()],
                ]);
            }
        }
    }
    if mats.len() as u64 != q.pow(3) {
        return Err(Error::Internal(format!(
            "found {} unipotent elements, expected q^3",
            mats.len()
        )));
    }
    mats.push(antidiagonal(f));
    let mut perms = Vec::with_capacity(mats.len());
    for m in &mats {
        if !geo.preserves_form(m) {
            return Err(Error::Internal("generator does not preserve the Hermitian form".into()));
        }
        perms.push(geo.permutation(m)?);
    }
    Ok(perms)
}

/// Which outer automorphisms to adjoin to PSU(3, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitaryExtension {
    /// diag(1, β, 1) with β of order q+1: PSU(3,q) grows to PGU(3,q).
    pub diagonal: bool,
    /// x ↦ x^p on coordinates: adjoins the field automorphisms.
    pub field: bool,
}

impl HermitianGeometry {
    /// The permutation induced by applying x ↦ x^p to each coordinate.
    pub fn frobenius_permutation(&self) -> Result<Permutation> {
        let f = &self.field;
        let images = self
            .points
            .iter()
            .map(|x| {
                let y = [f.frobenius(&x[0]), f.frobenius(&x[1]), f.frobenius(&x[2])];
                self.point_index(&y)
                    .ok_or_else(|| Error::Internal("Frobenius does not preserve the isotropic points".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }

    /// diag(1, β, 1) for an element β of order q+1; its determinant generates
    /// the determinants of GU(3, q).
    pub fn diagonal_unitary(&self) -> Result<Mat3> {
        let f = &self.field;
        let q = self.q;
        let beta = (1..q * q)
            .map(|n| f.nth_element(n))
            .find(|b| {
                f.is_one(&f.pow(b, q + 1))
                    && prime_divisors(q as u128 + 1)
                        .iter()
                        .all(|r| !f.is_one(&f.pow(b, (q + 1) / r)))
            })
            .ok_or_else(|| Error::Internal("no element of order q+1".into()))?;
        let (z, o) = (f.zero(), f.one());
        Ok([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), beta, z.clone()],
            [z.clone(), z, o],
        ])
    }
}

/// |PSU(3,q).X| for the chosen automorphisms: PGU adds gcd(3, q+1), the field
/// automorphisms of GF(q²) add 2e for q = p^e.
pub fn extension_order(q: u64, ext: UnitaryExtension) -> u128 {
    let mut n = psu3_order(q);
    if ext.diagonal {
        n *= 3u128.gcd(&(q as u128 + 1));
    }
    if ext.field {
        n *= 2 * prime_power(q).map_or(1, |(_, e)| e) as u128;
    }
    n
}

/// Generators of PSU(3, q) extended by diagonal and/or field automorphisms:
/// PGU(3, q), PΣU(3, q) or PΓU(3, q).
pub fn unitary_extension_generators(q: u64, ext: UnitaryExtension) -> Result<Vec<Permutation>> {
    let mut gens = psu3_generators(q)?;
    let geo = isotropic_points(q)?;
    if ext.diagonal {
        let d = geo.diagonal_unitary()?;
        if !geo.preserves_form(&d) {
            return Err(Error::Internal(
                "diagonal generator does not preserve the Hermitian form".into(),
            ));
        }
        gens.push(geo.permutation(&d)?);
    }
    if ext.field {
        gens.push(geo.frobenius_permutation()?);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        for q in [2u64, 3, 4, 5] {
            assert_eq!(isotropic_points(q).unwrap().points.len() as u64, q.pow(3) + 1);
        }
    }

    #[test]
    fn order_formula() {
        assert_eq!(psu3_order(3), 6048);
        assert_eq!(psu3_order(4), 62400);
        assert_eq!(psu3_order(5), 126000);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn extensions_of_psu3_3() {
        let full = UnitaryExtension {
            diagonal: true,
            field: true,
        };
        assert_eq!(extension_order(3, full), 12096);
        assert_eq!(extension_order(5, full), 756000);
        let gens = unitary_extension_generators(3, full).unwrap();
        let g = crate::group::EnumeratedGroup::enumerate(&gens, 100_000).unwrap();
        assert_eq!(g.order() as u128, extension_order(3, full));
    }
}
