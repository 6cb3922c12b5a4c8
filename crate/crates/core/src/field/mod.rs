//! Finite fields, dense matrices and univariate polynomials.
//!
//! Two concrete fields implement [`Field`]: [`PrimeField`] (word arithmetic mod p)
//! and [`GaloisField`] (dense residues modulo a fixed irreducible over GF(p)).
//! Everything downstream (matrices, polynomials, structure-constant algebras) is
//! generic over the trait, so the same code runs over GF(p) and its extensions.

mod galois;
mod matrix;
mod poly;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;

pub use galois::GaloisField;
pub use matrix::{minimal_polynomial, rref_kernel, Echelon, Matrix};
pub use poly::{irreducible_polynomial, Poly};

/// A finite field with runtime parameters.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> u32;

    /// Degree over the prime field.
    fn degree(&self) -> u32;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the canonical map Z -> GF(p).
    fn from_int(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// a^p.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;

    /// Element number `n` in a fixed enumeration (base-p digits of `n` as
    /// coordinates over the prime field). Only meaningful for `n < |F|`.
    fn nth_element(&self, n: u64) -> Self::Elem;

    /// `Some(a mod p)` when `a` lies in the prime subfield.
    fn prime_coordinate(&self, a: &Self::Elem) -> Option<u32>;

    /// |F| as a big integer.
    fn size(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree())
    }

    /// |F| if it fits in a u64.
    fn size_u64(&self) -> Option<u64> {
        let s = self.size();
        u64::try_from(&s).ok()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Unique b with b^p = a.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        // the inverse of Frobenius is Frobenius^(m-1)
        let mut r = a.clone();
        for _ in 1..self.degree() {
            r = self.frobenius(&r);
        }
        r
    }

    /// Fused multiply-add `acc + a*b`.
    fn mul_add(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(acc, &self.mul(a, b))
    }

    /// Short human-readable name, e.g. `GF(5)` or `GF(3^2)`.
    fn name(&self) -> String {
        if self.degree() == 1 {
            format!("GF({})", self.characteristic())
        } else {
            format!("GF({}^{})", self.characteristic(), self.degree())
        }
    }
}

/// The prime field Z/p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Panics if `p` is not prime; callers validate user input with [`is_prime`].
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p as u64), "{p} is not prime");
        PrimeField { p }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, n: u64) -> u32 {
        (n % self.p as u64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn degree(&self) -> u32 {
        1
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed words
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn frobenius(&self, a: &u32) -> u32 {
        *a
    }

    fn nth_element(&self, n: u64) -> u32 {
        self.reduce(n)
    }

    fn prime_coordinate(&self, a: &u32) -> Option<u32> {
        Some(*a)
    }

    fn pth_root(&self, a: &u32) -> u32 {
        *a
    }

    #[inline]
    fn mul_add(&self, acc: &u32, a: &u32, b: &u32) -> u32 {
        ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(mut n: u128, p: u64) -> u32 {
    assert!(n != 0);
    let p = p as u128;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Multiplicative order of `a` modulo `n` (n ≥ 1, gcd(a, n) = 1).
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let a = a % n;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % n as u128) as u64;
        k += 1;
        assert!(k <= n, "{a} is not a unit modulo {n}");
    }
    k
}
