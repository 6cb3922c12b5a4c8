use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Byte layout of a permutation image array: one byte per point up to degree
/// 256, two big-endian bytes above. Bytewise order equals lexicographic order
/// on the image arrays in both layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Codec {
    pub degree: usize,
    pub width: usize,
}

impl Codec {
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 1 && degree <= 1 << 16, "unsupported degree {degree}");
        Codec {
            degree,
            width: if degree <= 256 { 1 } else { 2 },
        }
    }

    #[inline]
    pub fn bytes(&self) -> usize {
        self.degree * self.width
    }

    #[inline]
    pub fn get(&self, buf: &[u8], i: usize) -> usize {
        if self.width == 1 {
            buf[i] as usize
        } else {
            ((buf[2 * i] as usize) << 8) | buf[2 * i + 1] as usize
        }
    }

    #[inline]
    pub fn put(&self, buf: &mut [u8], i: usize, v: usize) {
        if self.width == 1 {
            buf[i] = v as u8;
        } else {
            buf[2 * i] = (v >> 8) as u8;
            buf[2 * i + 1] = v as u8;
        }
    }

    pub fn identity(&self) -> Vec<u8> {
        let mut b = vec![0u8; self.bytes()];
        for i in 0..self.degree {
            self.put(&mut b, i, i);
        }
        b
    }

    /// out = a·b, i.e. apply a first, then b.
    #[inline]
    pub fn compose_into(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        if self.width == 1 {
            for (o, &x) in out.iter_mut().zip(a) {
                *o = b[x as usize];
            }
        } else {
            for i in 0..self.degree {
                self.put(out, i, self.get(b, self.get(a, i)));
            }
        }
    }

    #[inline]
    pub fn inverse_into(&self, a: &[u8], out: &mut [u8]) {
        if self.width == 1 {
            for (i, &x) in a.iter().enumerate() {
                out[x as usize] = i as u8;
            }
        } else {
            for i in 0..self.degree {
                self.put(out, self.get(a, i), i);
            }
        }
    }

    /// out = g⁻¹·x·g given g and g⁻¹.
    #[inline]
    pub fn conjugate_into(&self, x: &[u8], g: &[u8], g_inv: &[u8], scratch: &mut [u8], out: &mut [u8]) {
        self.compose_into(g_inv, x, scratch);
        self.compose_into(scratch, g, out);
    }

    /// Element order as the lcm of cycle lengths.
    pub fn order(&self, a: &[u8]) -> u64 {
        let mut seen = vec![false; self.degree];
        let mut ord: u64 = 1;
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.get(a, i);
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn is_identity(&self, a: &[u8]) -> bool {
        (0..self.degree).all(|i| self.get(a, i) == i)
    }
}

/// A permutation of {0, …, degree−1}. Products act on the right: in `a.mul(&b)`
/// the permutation `a` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    degree: usize,
    data: Box<[u8]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        let c = Codec::new(degree);
        Permutation {
            degree,
            data: c.identity().into_boxed_slice(),
        }
    }

    /// From 0-based images; errors unless `images` is a bijection.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Input("permutation of degree 0".into()));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::Input(format!("images {images:?} do not form a bijection")));
            }
            seen[x] = true;
        }
        let c = Codec::new(n);
        let mut data = vec![0u8; c.bytes()];
        for (i, &x) in images.iter().enumerate() {
            c.put(&mut data, i, x);
        }
        Ok(Permutation {
            degree: n,
            data: data.into_boxed_slice(),
        })
    }

    /// From disjoint cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::Input(format!("point {} exceeds degree {degree}", a.max(b) + 1)));
                }
                if moved[a] {
                    return Err(Error::Input(format!("point {} appears twice in cycles", a + 1)));
                }
                moved[a] = true;
                images[a] = b;
            }
        }
        Self::from_images(&images)
    }

    /// Parses 1-based disjoint-cycle notation such as `(1,2)(3,4,5)`; `()` is
    /// the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Input(format!("expected '(' in {text:?}")));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::Input(format!("unclosed cycle in {text:?}")));
            };
            let inner = body[..end].trim();
            if !inner.is_empty() {
                let mut cycle = Vec::new();
                for tok in inner.split(',') {
                    let v: usize = tok
                        .trim()
                        .parse()
                        .map_err(|_| Error::Input(format!("bad point {:?} in {text:?}", tok.trim())))?;
                    if v == 0 {
                        return Err(Error::Input("points are 1-based".into()));
                    }
                    cycle.push(v - 1);
                }
                cycles.push(cycle);
            }
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub(crate) fn from_bytes(degree: usize, bytes: &[u8]) -> Self {
        Permutation {
            degree,
            data: bytes.into(),
        }
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.data
    }

    pub(crate) fn codec(&self) -> Codec {
        Codec::new(self.degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.codec().get(&self.data, i)
    }

    pub fn images(&self) -> Vec<usize> {
        (0..self.degree).map(|i| self.image(i)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = vec![0u8; self.data.len()];
        self.codec().compose_into(&self.data, &other.data, &mut out);
        Permutation {
            degree: self.degree,
            data: out.into_boxed_slice(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0u8; self.data.len()];
        self.codec().inverse_into(&self.data, &mut out);
        Permutation {
            degree: self.degree,
            data: out.into_boxed_slice(),
        }
    }

    /// g⁻¹·self·g.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.codec().order(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.codec().is_identity(&self.data)
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image(i);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
