use std::collections::BTreeMap;

use rayon::prelude::*;

use super::enumerate::EnumeratedGroup;
use super::perm::Permutation;
use crate::classdata::{default_labels, ClassData, CoefficientTable};
use crate::field::prime_divisors;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Least element of the class in canonical order.
    pub representative: Permutation,
    pub representative_index: usize,
    pub size: usize,
    pub element_order: u64,
    pub label: String,
}

/// Conjugacy classes of an enumerated group, in canonical order: identity
/// first, then by (element order, size, least representative).
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    pub classes: Vec<ConjugacyClass>,
    /// element index -> class index
    class_of: Vec<u32>,
    /// class index -> element indices, ascending
    members: Vec<Vec<u32>>,
    pub inverse_class: Vec<usize>,
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    group_order: usize,
}

impl ConjugacyClassSet {
    pub fn compute(g: &EnumeratedGroup) -> Self {
        let n = g.order();
        let c = g.codec();
        let gens: Vec<(Vec<u8>, Vec<u8>)> = g
            .reduced_generators()
            .iter()
            .map(|s| (s.bytes().to_vec(), s.inverse().bytes().to_vec()))
            .collect();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let mut scratch = vec![0u8; c.bytes()];
        let mut out = vec![0u8; c.bytes()];
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head] as usize;
                head += 1;
                for (s, s_inv) in &gens {
                    c.conjugate_into(g.element_bytes(x), s, s_inv, &mut scratch, &mut out);
                    let y = g.index_of_bytes(&out).expect("group is closed under conjugation");
                    if raw_class[y] == u32::MAX {
                        raw_class[y] = id;
                        orbit.push(y as u32);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }

        // canonical class order
        let mut keyed: Vec<(u64, usize, usize, usize)> = raw
            .iter()
            .enumerate()
            .map(|(id, m)| {
                let rep = m[0] as usize;
                (g.element_order(rep), m.len(), rep, id)
            })
            .collect();
        keyed.sort_unstable();
        let mut relabel = vec![0u32; raw.len()];
        for (new, &(_, _, _, old)) in keyed.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&k| relabel[k as usize]).collect();
        let orders: Vec<u64> = keyed.iter().map(|k| k.0).collect();
        let labels = default_labels(&orders);
        let mut members = vec![Vec::new(); raw.len()];
        let mut classes = Vec::with_capacity(raw.len());
        for (new, &(ord, size, rep, old)) in keyed.iter().enumerate() {
            members[new] = std::mem::take(&mut raw[old]);
            classes.push(ConjugacyClass {
                representative: g.element(rep),
                representative_index: rep,
                size,
                element_order: ord,
                label: labels[new].clone(),
            });
        }

        let class_of_perm = |p: &Permutation| class_of[g.index_of(p).expect("closed")] as usize;
        let inverse_class = classes
            .iter()
            .map(|cl| class_of_perm(&cl.representative.inverse()))
            .collect();
        let mut power_maps = BTreeMap::new();
        for q in prime_divisors(n as u128) {
            let map = classes
                .iter()
                .map(|cl| class_of_perm(&cl.representative.pow(q)))
                .collect();
            power_maps.insert(q, map);
        }

        ConjugacyClassSet {
            classes,
            class_of,
            members,
            inverse_class,
            power_maps,
            group_order: n,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[class]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn to_class_data(&self, g: &EnumeratedGroup) -> ClassData {
        ClassData {
            name: g.name().unwrap_or("G").to_string(),
            order: self.group_order as u128,
            sizes: self.classes.iter().map(|c| c.size as u128).collect(),
            element_orders: self.classes.iter().map(|c| c.element_order).collect(),
            inverse: self.inverse_class.clone(),
            power_maps: self.power_maps.clone(),
            labels: self.classes.iter().map(|c| c.label.clone()).collect(),
            exponent: {
                use num_integer::Integer;
                self.classes.iter().fold(1u64, |a, c| a.lcm(&c.element_order))
            },
        }
    }
}

/// a_{ijk} = #{x ∈ C_i : x⁻¹z ∈ C_j} for the representative z of C_k, counted
/// over the smaller of C_i and C_j.
pub fn class_mult_coeff_enum(g: &EnumeratedGroup, ccs: &ConjugacyClassSet, i: usize, j: usize, k: usize) -> u64 {
    let z = ccs.classes[k].representative_index;
    class_mult_coeff_at(g, ccs, i, j, z)
}

/// Same count with an arbitrary element `z` of C_k (by element index).
pub fn class_mult_coeff_at(g: &EnumeratedGroup, ccs: &ConjugacyClassSet, i: usize, j: usize, z: usize) -> u64 {
    let c = g.codec();
    let zb = g.element_bytes(z);
    let mut inv = vec![0u8; c.bytes()];
    let mut prod = vec![0u8; c.bytes()];
    let mut count = 0;
    if ccs.members(i).len() <= ccs.members(j).len() {
        for &x in ccs.members(i) {
            c.inverse_into(g.element_bytes(x as usize), &mut inv);
            c.compose_into(&inv, zb, &mut prod);
            let y = g.index_of_bytes(&prod).expect("closed");
            if ccs.class_of_index(y) == j {
                count += 1;
            }
        }
    } else {
        for &y in ccs.members(j) {
            c.inverse_into(g.element_bytes(y as usize), &mut inv);
            c.compose_into(zb, &inv, &mut prod);
            let x = g.index_of_bytes(&prod).expect("closed");
            if ccs.class_of_index(x) == i {
                count += 1;
            }
        }
    }
    count
}

/// All coefficients at once: for each k, one pass over the group classifies
/// the pairs (x, x⁻¹z).
pub fn class_mult_table(g: &EnumeratedGroup, ccs: &ConjugacyClassSet) -> CoefficientTable {
    let r = ccs.len();
    let c = g.codec();
    let slices: Vec<Vec<u128>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let zb = g.element_bytes(ccs.classes[k].representative_index);
            let mut counts = vec![0u128; r * r];
            let mut inv = vec![0u8; c.bytes()];
            let mut prod = vec![0u8; c.bytes()];
            for x in 0..g.order() {
                c.inverse_into(g.element_bytes(x), &mut inv);
                c.compose_into(&inv, zb, &mut prod);
                let y = g.index_of_bytes(&prod).expect("closed");
                counts[ccs.class_of_index(x) * r + ccs.class_of_index(y)] += 1;
            }
            counts
        })
        .collect();
    let mut table = CoefficientTable::zeros(r);
    for (k, counts) in slices.iter().enumerate() {
        for i in 0..r {
            for j in 0..r {
                table.set(i, j, k, counts[i * r + j]);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    #[test]
    fn s3_classes() {
        let g = builtin::symmetric(3).unwrap();
        let ccs = ConjugacyClassSet::compute(&g);
        assert_eq!(ccs.sizes(), vec![1, 3, 2]);
        assert_eq!(ccs.classes[1].label, "o2_1");
        assert_eq!(ccs.inverse_class, vec![0, 1, 2]);
        assert_eq!(ccs.power_maps[&2], vec![0, 0, 2]);
        assert_eq!(ccs.power_maps[&3], vec![0, 1, 0]);
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = builtin::cyclic(5).unwrap();
        let ccs = ConjugacyClassSet::compute(&g);
        assert_eq!(ccs.sizes(), vec![1; 5]);
        // inverse_class is an involution fixing the identity
        for i in 0..5 {
            assert_eq!(ccs.inverse_class[ccs.inverse_class[i]], i);
        }
        assert_eq!(ccs.inverse_class[0], 0);
    }

    #[test]
    fn s3_coefficients() {
        let g = builtin::symmetric(3).unwrap();
        let ccs = ConjugacyClassSet::compute(&g);
        // transpositions · transpositions
        assert_eq!(class_mult_coeff_enum(&g, &ccs, 1, 1, 2), 3);
        assert_eq!(class_mult_coeff_enum(&g, &ccs, 1, 1, 0), 3);
        assert_eq!(class_mult_coeff_enum(&g, &ccs, 1, 1, 1), 0);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(class_mult_coeff_enum(&g, &ccs, 0, j, k), (j == k) as u64);
            }
        }
    }

    #[test]
    fn table_agrees_with_single_coefficients() {
        let g = builtin::symmetric(4).unwrap();
        let ccs = ConjugacyClassSet::compute(&g);
        let t = class_mult_table(&g, &ccs);
        let r = ccs.len();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    assert_eq!(t.get(i, j, k), class_mult_coeff_enum(&g, &ccs, i, j, k) as u128);
                }
            }
        }
    }
}
