//! Exact elements of cyclotomic fields Q(ζ_n).
//!
//! A value is stored as its remainder modulo Φ_n: a dense coefficient vector
//! over 1, ζ, …, ζ^(φ(n)−1). That remainder is unique, so equality of values
//! is equality of vectors once both sides share a conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients of Φ_n, constant term first, computed as
/// (xⁿ − 1) / Π_{d|n, d<n} Φ_d and cached.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    assert!(n >= 1, "cyclotomic polynomial of conductor 0");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            num = div_exact_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(n, phi.clone());
    phi
}

fn div_exact_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (t, &bt) in b.iter().enumerate() {
                r[i + t] = r[i + t]
                    .checked_sub(c.checked_mul(bt).expect("overflow in Φ_n"))
                    .expect("overflow in Φ_n");
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    cyclotomic_polynomial(n).len() as u64 - 1
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    /// length φ(conductor)
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// ζ_n^e.
    pub fn zeta_pow(n: u64, e: i64) -> Self {
        assert!(n >= 1);
        let e = e.rem_euclid(n as i64) as u64;
        let mut raw = vec![BigRational::zero(); n as usize];
        raw[e as usize] = BigRational::one();
        Self::from_exponents(n, raw)
    }

    /// Σ raw[e]·ζ_n^e for arbitrary-length `raw`, reduced to canonical form.
    pub fn from_exponents(n: u64, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let d = phi.len() - 1;
        for deg in (d..raw.len()).rev() {
            if raw[deg].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut raw[deg], BigRational::zero());
            for (t, &pt) in phi.iter().enumerate().take(d) {
                if pt != 0 {
                    raw[deg - d + t] -= &c * BigRational::from_integer(BigInt::from(pt));
                }
            }
        }
        raw.resize(d, BigRational::zero());
        let mut v = Cyclotomic {
            conductor: n,
            coeffs: raw,
        };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        if self.conductor != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients over 1, ζ, …, ζ^(φ(n)−1).
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// The same value expressed over ζ_m for a multiple m of the conductor.
    fn lifted(&self, m: u64) -> Vec<BigRational> {
        assert_eq!(m % self.conductor, 0);
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[e * step] = c.clone();
        }
        Cyclotomic::from_exponents(m, raw).padded(m)
    }

    fn padded(mut self, m: u64) -> Vec<BigRational> {
        if self.conductor != m {
            let d = totient(m) as usize;
            self.coeffs.resize(d, BigRational::zero());
        }
        self.coeffs
    }

    fn common(&self, other: &Self) -> (u64, Vec<BigRational>, Vec<BigRational>) {
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lifted(m), other.lifted(m))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut v = Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        };
        if q.is_zero() {
            v = Self::zero();
        }
        v.normalize();
        v
    }

    /// Complex conjugation ζ^e ↦ ζ^(n−e).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[(n - e) % n] += c;
        }
        Cyclotomic::from_exponents(self.conductor, raw)
    }

    /// Galois automorphism ζ ↦ ζ^k, k coprime to the conductor.
    pub fn galois(&self, k: u64) -> Self {
        let n = self.conductor as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[(e * k as usize) % n] += c;
        }
        Cyclotomic::from_exponents(self.conductor, raw)
    }

    /// Terms (coefficient, exponent) with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c, e))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor == 1 || self.conductor == 1 {
            let (big, small) = if rhs.conductor == 1 { (self, rhs) } else { (rhs, self) };
            let mut v = big.clone();
            v.coeffs[0] += &small.coeffs[0];
            v.normalize();
            return v;
        }
        let (m, mut a, b) = self.common(rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        let mut v = Cyclotomic {
            conductor: m,
            coeffs: a,
        };
        v.normalize();
        v
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let (m, a, b) = self.common(rhs);
        let mut raw = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_exponents(m, raw)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl From<BigInt> for Cyclotomic {
    fn from(n: BigInt) -> Self {
        Cyclotomic::rational(BigRational::from_integer(n))
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::integer(n)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text: a rational, or a sum of `c*z(n)^e` terms.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return f.write_str(&fmt_rational(q));
        }
        let n = self.conductor;
        let mut first = true;
        for (c, e) in self.terms() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag.is_one() {
                String::new()
            } else {
                format!("{}*", fmt_rational(&mag))
            };
            match e {
                0 => write!(f, "{}", fmt_rational(&mag))?,
                1 => write!(f, "{coeff}z({n})")?,
                _ => write!(f, "{coeff}z({n})^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses a rational `a` / `a/b`, or a sum of terms `c*z(n)^e`, `z(n)^e`,
/// `c*z(n)`, `z(n)`, `c`, each optionally signed.
pub fn parse_cyclotomic(text: &str) -> Result<Cyclotomic, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty value".into());
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    let mut depth = 0;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' => {
                terms.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    terms.push(&s[start..]);
    let mut acc = Cyclotomic::zero();
    for t in terms {
        acc = &acc + &parse_term(t)?;
    }
    Ok(acc)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad number {s:?}");
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_term(t: &str) -> Result<Cyclotomic, String> {
    let (neg, body) = match t.as_bytes().first() {
        Some(b'+') => (false, &t[1..]),
        Some(b'-') => (true, &t[1..]),
        _ => (false, t),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in {t:?}"));
    }
    let (coeff, zpart) = match body.find("z(") {
        None => (parse_rational(body)?, None),
        Some(0) => (BigRational::one(), Some(body)),
        Some(pos) => {
            let c = body[..pos]
                .strip_suffix('*')
                .ok_or_else(|| format!("expected `*` before z in {t:?}"))?;
            (parse_rational(c)?, Some(&body[pos..]))
        }
    };
    let coeff = if neg { -coeff } else { coeff };
    let Some(z) = zpart else {
        return Ok(Cyclotomic::rational(coeff));
    };
    let close = z.find(')').ok_or_else(|| format!("unclosed z( in {t:?}"))?;
    let n: u64 = z[2..close].parse().map_err(|_| format!("bad conductor in {t:?}"))?;
    if n == 0 {
        return Err(format!("conductor 0 in {t:?}"));
    }
    let rest = &z[close + 1..];
    let e: i64 = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| format!("bad exponent in {t:?}"))?
    };
    Ok(Cyclotomic::zeta_pow(n, e).scale(&coeff))
}

/// Rounds a value known to be a rational integer to i128.
pub fn to_i128(v: &Cyclotomic) -> Option<i128> {
    v.as_integer()?.to_i128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, e: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(n, e)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(105), 48);
        // Φ_105 is the first with a coefficient −2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn small_identities() {
        let s = &(&Cyclotomic::one() + &z(3, 1)) + &z(3, 2);
        assert!(s.is_zero());
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::integer(-1));
        assert_eq!(z(5, 1).conj(), z(5, 4));
        assert_eq!(z(6, 1), -&z(3, 2));
        assert_eq!(z(12, 4), z(3, 1));
        // Σ_{e} ζ_n^e = 0 for n > 1
        for n in 2..20u64 {
            let mut acc = Cyclotomic::zero();
            for e in 0..n {
                acc = &acc + &z(n, e as i64);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn mixed_conductors() {
        // (−1 + √5)/2 = ζ_5 + ζ_5⁴ and i = ζ_4 meet in Q(ζ_20)
        let b5 = &z(5, 1) + &z(5, 4);
        let i = z(4, 1);
        let prod = &b5 * &i;
        assert_eq!(prod.conductor(), 20);
        assert_eq!(&prod * &i.conj(), b5);
    }

    #[test]
    fn parse_and_print() {
        for text in [
            "0",
            "-3",
            "1/2",
            "z(3)",
            "-1 - z(3)",
            "2*z(5)^2 - 1/3*z(5)^3",
            "z(7) + z(7)^2 + z(7)^4",
        ] {
            let v = parse_cyclotomic(text).unwrap();
            let back = parse_cyclotomic(&v.to_string()).unwrap();
            assert_eq!(v, back, "{text}");
            assert_eq!(v.to_string(), back.to_string());
        }
        assert_eq!(parse_cyclotomic("z(3)+z(3)^2").unwrap(), Cyclotomic::integer(-1));
        assert_eq!(parse_cyclotomic("z(4)^-1").unwrap(), z(4, 3));
        assert!(parse_cyclotomic("2z(3)").is_err());
        assert!(parse_cyclotomic("1/0").is_err());
        assert!(parse_cyclotomic("z(0)").is_err());
    }
}
