use std::collections::HashSet;
use std::hash::BuildHasher;

use hashbrown::HashTable;
use rustc_hash::FxBuildHasher;

use super::perm::{Codec, Permutation};
use crate::error::{Error, Result};

/// Default enumeration cap.
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

/// A permutation group with its full element list.
///
/// Elements are stored in one flat buffer, sorted lexicographically by image
/// array, so element `0` is always the identity. A hash table of positions
/// makes membership and lookup a single probe.
#[derive(Clone)]
pub struct EnumeratedGroup {
    codec: Codec,
    generators: Vec<Permutation>,
    /// Non-redundant subset of `generators`, used for orbit computations.
    reduced: Vec<Permutation>,
    elements: Vec<u8>,
    order: usize,
    index: HashTable<u32>,
    name: Option<String>,
}

impl std::fmt::Debug for EnumeratedGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnumeratedGroup")
            .field("name", &self.name)
            .field("degree", &self.codec.degree)
            .field("order", &self.order)
            .finish()
    }
}

/// Incremental closure of a set of permutations under right multiplication by
/// a growing generator list.
pub(crate) struct Closure {
    codec: Codec,
    seen: HashSet<Box<[u8]>, FxBuildHasher>,
    list: Vec<Box<[u8]>>,
    gens: Vec<Box<[u8]>>,
    cap: usize,
}

impl Closure {
    pub fn new(codec: Codec, cap: usize) -> Self {
        let id: Box<[u8]> = codec.identity().into_boxed_slice();
        let mut seen = HashSet::with_hasher(FxBuildHasher);
        seen.insert(id.clone());
        Closure {
            codec,
            seen,
            list: vec![id],
            gens: Vec::new(),
            cap,
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        self.seen.contains(x)
    }

    /// Adds `g` as a generator unless already contained; returns whether the
    /// closure grew.
    pub fn add_generator(&mut self, g: &[u8]) -> Result<bool> {
        if self.seen.contains(g) {
            return Ok(false);
        }
        self.gens.push(g.into());
        let c = self.codec;
        let mut buf = vec![0u8; c.bytes()];
        let mut frontier = Vec::new();
        // old elements times the new generator
        let old = self.list.len();
        for i in 0..old {
            c.compose_into(&self.list[i], g, &mut buf);
            if !self.seen.contains(buf.as_slice()) {
                self.push(&buf)?;
                frontier.push(self.list.len() - 1);
            }
        }
        // new elements times every generator
        while let Some(i) = frontier.pop() {
            for s in 0..self.gens.len() {
                c.compose_into(&self.list[i], &self.gens[s], &mut buf);
                if !self.seen.contains(buf.as_slice()) {
                    self.push(&buf)?;
                    frontier.push(self.list.len() - 1);
                }
            }
        }
        Ok(true)
    }

    fn push(&mut self, x: &[u8]) -> Result<()> {
        if self.list.len() >= self.cap {
            return Err(Error::GroupTooLarge {
                cap: self.cap,
                partial: self.list.len(),
            });
        }
        let b: Box<[u8]> = x.into();
        self.seen.insert(b.clone());
        self.list.push(b);
        Ok(())
    }

    pub fn into_sorted(self) -> Vec<Box<[u8]>> {
        let mut v = self.list;
        v.sort_unstable();
        v
    }
}

fn build_index(codec: Codec, elements: &[u8], order: usize) -> HashTable<u32> {
    let b = codec.bytes();
    let bytes = |i: u32| &elements[i as usize * b..(i as usize + 1) * b];
    let mut t = HashTable::with_capacity(order);
    for i in 0..order as u32 {
        t.insert_unique(FxBuildHasher.hash_one(bytes(i)), i, |&j| {
            FxBuildHasher.hash_one(bytes(j))
        });
    }
    t
}

impl EnumeratedGroup {
    /// Closure of `generators` under composition.
    pub fn enumerate(generators: &[Permutation], cap: usize) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::Input("empty generator list".into()));
        };
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let codec = Codec::new(degree);
        let mut closure = Closure::new(codec, cap);
        let mut reduced = Vec::new();
        for g in generators {
            if closure.add_generator(g.bytes())? {
                reduced.push(g.clone());
            }
        }
        let sorted = closure.into_sorted();
        Ok(Self::from_sorted(codec, generators.to_vec(), reduced, sorted))
    }

    fn from_sorted(
        codec: Codec,
        generators: Vec<Permutation>,
        reduced: Vec<Permutation>,
        sorted: Vec<Box<[u8]>>,
    ) -> Self {
        let order = sorted.len();
        let mut elements = Vec::with_capacity(order * codec.bytes());
        for e in &sorted {
            elements.extend_from_slice(e);
        }
        let index = build_index(codec, &elements, order);
        EnumeratedGroup {
            codec,
            generators,
            reduced,
            elements,
            order,
            index,
            name: None,
        }
    }

    /// The subgroup whose elements are `indices` (ascending) of `self`; its
    /// generators are a greedy small generating set.
    pub(crate) fn subgroup_from_indices(&self, indices: &[usize]) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        let b = self.codec.bytes();
        let mut elements = Vec::with_capacity(indices.len() * b);
        for &i in indices {
            elements.extend_from_slice(self.element_bytes(i));
        }
        let mut h = EnumeratedGroup {
            codec: self.codec,
            generators: Vec::new(),
            reduced: Vec::new(),
            index: build_index(self.codec, &elements, indices.len()),
            elements,
            order: indices.len(),
            name: None,
        };
        let gens = h.small_generating_set();
        h.generators = gens.clone();
        h.reduced = gens;
        h
    }

    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Self::enumerate(&[id], 1).expect("trivial group")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.codec.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Non-redundant generators: each one enlarged the group generated by
    /// its predecessors.
    pub fn reduced_generators(&self) -> &[Permutation] {
        &self.reduced
    }

    pub(crate) fn codec(&self) -> Codec {
        self.codec
    }

    pub(crate) fn element_bytes(&self, i: usize) -> &[u8] {
        let b = self.codec.bytes();
        &self.elements[i * b..(i + 1) * b]
    }

    pub fn element(&self, i: usize) -> Permutation {
        Permutation::from_bytes(self.codec.degree, self.element_bytes(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub(crate) fn index_of_bytes(&self, x: &[u8]) -> Option<usize> {
        self.index
            .find(FxBuildHasher.hash_one(x), |&i| self.element_bytes(i as usize) == x)
            .map(|&i| i as usize)
    }

    /// Position of `g` in the canonical element order.
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree() {
            return None;
        }
        self.index_of_bytes(g.bytes())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index_of(g).is_some()
    }

    /// Every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &EnumeratedGroup) -> bool {
        self.degree() == other.degree()
            && (0..self.order).all(|i| other.index_of_bytes(self.element_bytes(i)).is_some())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.reduced;
        g.iter().all(|a| g.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        (0..self.order).fold(1u64, |acc, i| acc.lcm(&self.codec.order(self.element_bytes(i))))
    }

    /// Greedy generating set: scan elements in canonical order and keep each
    /// one not already in the subgroup generated so far.
    pub fn small_generating_set(&self) -> Vec<Permutation> {
        let mut closure = Closure::new(self.codec, usize::MAX);
        let mut gens = Vec::new();
        for i in 1..self.order {
            if closure.len() == self.order {
                break;
            }
            let x = self.element_bytes(i);
            if !closure.contains(x) {
                closure.add_generator(x).expect("uncapped closure");
                gens.push(self.element(i));
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree()));
        }
        gens
    }

    /// Index of the product `a·b`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let mut out = vec![0u8; self.codec.bytes()];
        self.codec
            .compose_into(self.element_bytes(a), self.element_bytes(b), &mut out);
        self.index_of_bytes(&out).expect("group is closed")
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let mut out = vec![0u8; self.codec.bytes()];
        self.codec.inverse_into(self.element_bytes(a), &mut out);
        self.index_of_bytes(&out).expect("group is closed")
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.codec.order(self.element_bytes(i))
    }
}
