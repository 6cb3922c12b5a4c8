use std::sync::Arc;

use super::{irreducible_polynomial, Field, Poly, PrimeField};

/// GF(p^m) as GF(p)[x]/(f) for a fixed monic irreducible f of degree m.
///
/// Elements are dense coefficient vectors of length m (constant term first).
#[derive(Clone, Debug)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    prime: PrimeField,
    m: usize,
    /// monic, length m + 1
    modulus: Vec<u32>,
    /// x^(i*p) mod f for i < m; Frobenius is linear over GF(p) in this basis.
    frob: Vec<Vec<u32>>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.prime == other.inner.prime && self.inner.modulus == other.inner.modulus)
    }
}

impl GaloisField {
    /// GF(p^m) built on the canonical irreducible from [`irreducible_polynomial`].
    pub fn new(p: u32, m: u32) -> Self {
        assert!(m >= 1);
        let f = irreducible_polynomial(p, m);
        Self::with_modulus(&f)
    }

    /// Panics unless `modulus` is monic irreducible of degree ≥ 1.
    pub fn with_modulus(modulus: &Poly<PrimeField>) -> Self {
        let prime = *modulus.field();
        let m = modulus.degree().expect("zero modulus");
        assert!(m >= 1, "modulus must have positive degree");
        assert!(prime.is_one(modulus.leading()), "modulus must be monic");
        assert!(modulus.is_irreducible(), "modulus must be irreducible");
        assert!(
            prime.p() < 1 << 28,
            "characteristic too large for dense extension arithmetic"
        );
        let coeffs: Vec<u32> = modulus.coeffs().to_vec();
        let mut gf = GaloisField {
            inner: Arc::new(Inner {
                prime,
                m,
                modulus: coeffs,
                frob: Vec::new(),
            }),
        };
        let p = prime.p() as u64;
        let mut frob = Vec::with_capacity(m);
        for i in 0..m {
            let xi = gf.monomial(i);
            frob.push(gf.pow(&xi, p).into_vec());
        }
        Arc::get_mut(&mut gf.inner).unwrap().frob = frob;
        gf
    }

    pub fn prime_field(&self) -> PrimeField {
        self.inner.prime
    }

    /// The defining polynomial.
    pub fn modulus(&self) -> Poly<PrimeField> {
        Poly::new(self.inner.prime, self.inner.modulus.clone())
    }

    /// x^i reduced into the field.
    pub fn monomial(&self, i: usize) -> Box<[u32]> {
        let m = self.inner.m;
        let mut t = vec![0u64; (i + 1).max(m)];
        t[i] = 1;
        self.reduce_wide(t)
    }

    /// Element with the given coordinates (constant term first).
    pub fn from_coords(&self, coords: &[u32]) -> Box<[u32]> {
        let p = self.inner.prime.p() as u64;
        let mut t: Vec<u64> = coords.iter().map(|&c| c as u64 % p).collect();
        if t.len() < self.inner.m {
            t.resize(self.inner.m, 0);
        }
        self.reduce_wide(t)
    }

    pub fn from_prime(&self, c: u32) -> Box<[u32]> {
        let mut v = vec![0u32; self.inner.m];
        v[0] = c % self.inner.prime.p();
        v.into_boxed_slice()
    }

    fn reduce_wide(&self, mut t: Vec<u64>) -> Box<[u32]> {
        let m = self.inner.m;
        let p = self.inner.prime.p() as u64;
        for k in (m..t.len()).rev() {
            let c = t[k] % p;
            if c != 0 {
                for i in 0..m {
                    let f = self.inner.modulus[i] as u64;
                    t[k - m + i] = (t[k - m + i] + c * (p - f)) % p;
                }
            }
        }
        t.truncate(m);
        t.into_iter().map(|c| (c % p) as u32).collect()
    }
}

impl Field for GaloisField {
    type Elem = Box<[u32]>;

    fn characteristic(&self) -> u32 {
        self.inner.prime.p()
    }

    fn degree(&self) -> u32 {
        self.inner.m as u32
    }

    fn zero(&self) -> Box<[u32]> {
        vec![0; self.inner.m].into_boxed_slice()
    }

    fn one(&self) -> Box<[u32]> {
        self.from_prime(1)
    }

    fn from_int(&self, n: i64) -> Box<[u32]> {
        self.from_prime(self.inner.prime.from_int(n))
    }

    fn add(&self, a: &Box<[u32]>, b: &Box<[u32]>) -> Box<[u32]> {
        let f = &self.inner.prime;
        a.iter().zip(b.iter()).map(|(x, y)| f.add(x, y)).collect()
    }

    fn sub(&self, a: &Box<[u32]>, b: &Box<[u32]>) -> Box<[u32]> {
        let f = &self.inner.prime;
        a.iter().zip(b.iter()).map(|(x, y)| f.sub(x, y)).collect()
    }

    fn neg(&self, a: &Box<[u32]>) -> Box<[u32]> {
        let f = &self.inner.prime;
        a.iter().map(|x| f.neg(x)).collect()
    }

    fn mul(&self, a: &Box<[u32]>, b: &Box<[u32]>) -> Box<[u32]> {
        let m = self.inner.m;
        if m == 1 {
            return vec![self.inner.prime.mul(&a[0], &b[0])].into_boxed_slice();
        }
        let p = self.inner.prime.p() as u64;
        let mut t = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                t[i + j] += x as u64 * y as u64;
            }
            // keep partial sums bounded
            if i % 64 == 63 {
                for c in t.iter_mut() {
                    *c %= p;
                }
            }
        }
        for c in t.iter_mut() {
            *c %= p;
        }
        self.reduce_wide(t)
    }

    fn inv(&self, a: &Box<[u32]>) -> Option<Box<[u32]>> {
        if self.is_zero(a) {
            return None;
        }
        // a^(q-2)
        let e = self.size() - 2u32;
        Some(self.pow_big(a, &e))
    }

    fn is_zero(&self, a: &Box<[u32]>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn frobenius(&self, a: &Box<[u32]>) -> Box<[u32]> {
        let m = self.inner.m;
        let p = self.inner.prime.p() as u64;
        let mut out = vec![0u64; m];
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &f) in out.iter_mut().zip(self.inner.frob[i].iter()) {
                *o = (*o + c as u64 * f as u64) % p;
            }
        }
        out.into_iter().map(|c| c as u32).collect()
    }

    fn nth_element(&self, mut n: u64) -> Box<[u32]> {
        let p = self.inner.prime.p() as u64;
        let mut v = vec![0u32; self.inner.m];
        for c in v.iter_mut() {
            *c = (n % p) as u32;
            n /= p;
        }
        v.into_boxed_slice()
    }

    fn prime_coordinate(&self, a: &Box<[u32]>) -> Option<u32> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_has_square_root_of_minus_one() {
        let f = GaloisField::new(3, 2);
        // modulus x^2 + 1, so x^2 = -1
        let x = f.monomial(1);
        assert_eq!(f.mul(&x, &x), f.from_int(-1));
    }

    #[test]
    fn frobenius_matches_pow() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = GaloisField::new(p, m);
            let size = f.size_u64().unwrap();
            for n in 0..size {
                let a = f.nth_element(n);
                assert_eq!(f.frobenius(&a), f.pow(&a, p as u64));
                assert_eq!(f.pth_root(&f.frobenius(&a)), a);
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_right_order() {
        let f = GaloisField::new(2, 4);
        for n in 1..16 {
            let a = f.nth_element(n);
            assert!(f.is_one(&f.pow(&a, 15)));
        }
    }
}
