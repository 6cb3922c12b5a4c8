//! Route-agnostic class data: what the centre-algebra builder needs, whether
//! the classes came from an enumerated group or from a character table.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::valuation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub name: String,
    pub order: u128,
    pub sizes: Vec<u128>,
    pub element_orders: Vec<u64>,
    /// class of inverses, 0-based
    pub inverse: Vec<usize>,
    /// prime -> class of p-th powers, 0-based
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub labels: Vec<String>,
    pub exponent: u64,
}

impl ClassData {
    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn centralizer_order(&self, i: usize) -> u128 {
        self.order / self.sizes[i]
    }

    pub fn is_p_regular(&self, i: usize, p: u64) -> bool {
        self.element_orders[i] % p != 0
    }

    /// ν_p(|C_G(g_i)|).
    pub fn centralizer_valuation(&self, i: usize, p: u64) -> u32 {
        valuation(self.centralizer_order(i), p)
    }

    /// Exponent with all factors of p removed.
    pub fn p_prime_exponent(&self, p: u64) -> u64 {
        let mut e = self.exponent;
        while e % p == 0 {
            e /= p;
        }
        e
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Labels of the form `o{order}_{k}`, numbering classes of equal element
/// order in class order.
pub fn default_labels(element_orders: &[u64]) -> Vec<String> {
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    element_orders
        .iter()
        .map(|&o| {
            let k = seen.entry(o).or_insert(0);
            *k += 1;
            format!("o{o}_{k}")
        })
        .collect()
}

/// Class multiplication coefficients a_{ijk}: Ĉ_i·Ĉ_j = Σ_k a_{ijk} Ĉ_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    r: usize,
    data: Vec<u128>,
}

impl CoefficientTable {
    pub fn zeros(r: usize) -> Self {
        CoefficientTable {
            r,
            data: vec![0; r * r * r],
        }
    }

    pub fn num_classes(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u128 {
        self.data[(i * self.r + j) * self.r + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u128) {
        self.data[(i * self.r + j) * self.r + k] = v;
    }

    /// Σ_k a_{ijk}|C_k| = |C_i||C_j| for every pair (i, j).
    pub fn counting_identity_holds(&self, sizes: &[u128]) -> bool {
        (0..self.r).all(|i| (0..self.r).all(|j| self.counting_identity_at(sizes, i, j)))
    }

    pub fn counting_identity_at(&self, sizes: &[u128], i: usize, j: usize) -> bool {
        let lhs: u128 = (0..self.r).map(|k| self.get(i, j, k) * sizes[k]).sum();
        lhs == sizes[i] * sizes[j]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.r).all(|i| (0..self.r).all(|j| (0..self.r).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }
}
