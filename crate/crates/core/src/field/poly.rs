use std::fmt;

use num_bigint::BigUint;

use super::{Field, PrimeField};

/// Dense univariate polynomial over a finite field, constant term first,
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Poly::new(field, vec![c])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The indeterminate x.
    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    pub fn monomial(field: F, c: F::Elem, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Panics on the zero polynomial.
    pub fn leading(&self) -> &F::Elem {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).unwrap();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(&out[i + j], a, b);
            }
        }
        Poly::new(f.clone(), out)
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f.clone()), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if f.is_zero(&rem[k]) {
                continue;
            }
            let c = f.mul(&rem[k], &lead_inv);
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, d);
                rem[k - dd + i] = f.sub(&rem[k - dd + i], &t);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Poly::new(f.clone(), quot), Poly::new(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading()).unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// self^e mod `modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let base = self.rem(modulus);
        let mut acc = Poly::one(self.field.clone()).rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// self^|F| mod `modulus`, computed as m successive p-th powers.
    fn frobenius_mod(&self, modulus: &Self) -> Self {
        let p = BigUint::from(self.field.characteristic());
        let mut r = self.rem(modulus);
        for _ in 0..self.field.degree() {
            r = r.pow_mod(&p, modulus);
        }
        r
    }

    /// True iff the polynomial has positive degree and no nontrivial factor,
    /// checked via gcd(f, x^(q^d) - x) = 1 for d ≤ deg/2.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        let f = self.monic();
        let x = Poly::x(self.field.clone());
        let mut h = x.rem(&f);
        for _ in 1..=n / 2 {
            h = h.frobenius_mod(&f);
            if !f.gcd(&h.sub(&x)).is_one() {
                return false;
            }
        }
        true
    }

    /// Squarefree decomposition of a monic polynomial: pairs (g, k) with g
    /// squarefree and pairwise coprime, and Π g^k = self.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = f.derivative();
        if d.is_zero() {
            for (g, k) in f.pth_root_poly().squarefree_decomposition() {
                out.push((g, k * self.field.characteristic() as usize));
            }
            return out;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_exact(&w);
        }
        if !c.is_one() {
            let p = self.field.characteristic() as usize;
            for (g, k) in c.pth_root_poly().squarefree_decomposition() {
                out.push((g, k * p));
            }
        }
        out
    }

    /// For f(x) = g(x^p), returns g with coefficients replaced by p-th roots.
    fn pth_root_poly(&self) -> Self {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|c| f.pth_root(c)).collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs (product of all irreducible factors of degree d, d).
    pub fn distinct_degree_factorization(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        let mut g = self.monic();
        let x = Poly::x(self.field.clone());
        let mut h = x.clone();
        let mut d = 1;
        while g.degree().unwrap_or(0) >= 2 * d {
            h = h.frobenius_mod(&g);
            let gd = g.gcd(&h.sub(&x));
            if !gd.is_one() {
                g = g.div_exact(&gd);
                h = h.rem(&g);
                out.push((gd, d));
            }
            d += 1;
        }
        if let Some(n) = g.degree() {
            if n > 0 {
                out.push((g, n));
            }
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d` into
    /// its factors. Trial elements run through a fixed enumeration.
    pub fn equal_degree_factorization(&self, d: usize) -> Vec<Self> {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.monic()];
        }
        let field = &self.field;
        let p = field.characteristic();
        let radix = field.size_u64().unwrap_or(u64::MAX).min(1 << 16);
        for index in 1u64.. {
            let trial = trial_poly(field, index, radix);
            if trial.degree().unwrap_or(0) == 0 {
                continue;
            }
            if trial.degree().unwrap() >= n {
                break;
            }
            let candidate = if p == 2 {
                // absolute trace to GF(2) over GF(2^(m d))
                let bits = field.degree() as usize * d;
                let mut t = trial.rem(self);
                let mut acc = t.clone();
                for _ in 1..bits {
                    t = t.mul(&t).rem(self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (field.size().pow(d as u32) - 1u32) >> 1;
                trial.pow_mod(&e, self).sub(&Poly::one(field.clone()))
            };
            let g = self.gcd(&candidate);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let h = self.div_exact(&g);
                let mut out = g.equal_degree_factorization(d);
                out.extend(h.equal_degree_factorization(d));
                return out;
            }
        }
        panic!("equal-degree splitting exhausted its trial set");
    }

    /// Complete factorization into monic irreducibles with multiplicity,
    /// sorted by (degree, coefficients).
    pub fn factor(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        for (g, k) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree_factorization() {
                for irr in h.equal_degree_factorization(d) {
                    out.push((irr, k));
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
        });
        out
    }
}

/// Polynomial number `index` with coefficient digits in base `radix`.
fn trial_poly<F: Field>(field: &F, mut index: u64, radix: u64) -> Poly<F> {
    let mut coeffs = Vec::new();
    while index > 0 {
        coeffs.push(field.nth_element(index % radix));
        index /= radix;
    }
    Poly::new(field.clone(), coeffs)
}

/// The smallest monic irreducible of degree `m` over GF(p), ordering
/// candidates by the integer Σ c_i p^i of their lower coefficients.
pub fn irreducible_polynomial(p: u32, m: u32) -> Poly<PrimeField> {
    assert!(m >= 1);
    let field = PrimeField::new(p);
    let count = (p as u64).checked_pow(m).expect("search space too large");
    for n in 0..count {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut r = n;
        for _ in 0..m {
            coeffs.push((r % p as u64) as u32);
            r /= p as u64;
        }
        coeffs.push(1);
        let f = Poly::new(field, coeffs);
        if f.is_irreducible() {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl<F: Field> Poly<F> {
    /// Product of factors with multiplicity, as used in property tests.
    pub fn product_of(field: F, factors: &[(Poly<F>, usize)]) -> Self {
        let mut acc = Poly::one(field);
        for (g, k) in factors {
            for _ in 0..*k {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn fp(p: u32, c: &[u32]) -> Poly<PrimeField> {
        Poly::new(PrimeField::new(p), c.to_vec())
    }

    #[test]
    fn canonical_irreducibles() {
        assert_eq!(irreducible_polynomial(2, 1), fp(2, &[0, 1]));
        assert_eq!(irreducible_polynomial(2, 3), fp(2, &[1, 1, 0, 1]));
        assert_eq!(irreducible_polynomial(3, 2), fp(3, &[1, 0, 1]));
    }

    /// Exhaustive oracle: a monic polynomial of degree ≤ 3 is irreducible iff
    /// it has no root.
    #[test]
    fn small_degree_irreducibility_against_root_search() {
        for p in [2u32, 3, 5] {
            let field = PrimeField::new(p);
            for deg in 2..=3 {
                let count = (p as u64).pow(deg);
                for n in 0..count {
                    let mut c: Vec<u32> = (0..deg).map(|i| ((n / (p as u64).pow(i)) % p as u64) as u32).collect();
                    c.push(1);
                    let f = Poly::new(field, c);
                    let has_root = (0..p).any(|x| f.eval(&x) == 0);
                    assert_eq!(f.is_irreducible(), !has_root, "{f:?} over GF({p})");
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        // x^2 - 1 over GF(3)
        let f = fp(3, &[2, 0, 1]);
        assert_eq!(f.factor(), vec![(fp(3, &[1, 1]), 1), (fp(3, &[2, 1]), 1)]);
        // x^2 + 1 irreducible over GF(3)
        let f = fp(3, &[1, 0, 1]);
        assert_eq!(f.factor(), vec![(f.clone(), 1)]);
        // x^2 + 1 = (x + 2)(x + 3) over GF(5)
        let f = fp(5, &[1, 0, 1]);
        assert_eq!(f.factor(), vec![(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]);
    }

    #[test]
    fn factor_with_multiplicities_and_pth_powers() {
        // (x+1)^4 (x^2+x+1) over GF(2): derivative of the first factor vanishes
        let a = fp(2, &[1, 1]);
        let b = fp(2, &[1, 1, 1]);
        let f = a.mul(&a).mul(&a).mul(&a).mul(&b);
        assert_eq!(f.factor(), vec![(a, 4), (b, 1)]);
    }

    #[test]
    fn factor_over_extension_field() {
        let field = GaloisField::new(3, 2);
        // x^2 + 1 splits over GF(9)
        let f = Poly::new(field.clone(), vec![field.one(), field.zero(), field.one()]);
        let fs = f.factor();
        assert_eq!(fs.len(), 2);
        assert_eq!(Poly::product_of(field, &fs), f);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = fp(7, &[1, 2, 3, 4]);
        let b = fp(7, &[5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
