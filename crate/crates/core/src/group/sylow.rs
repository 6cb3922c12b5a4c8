use super::enumerate::EnumeratedGroup;
use super::perm::Permutation;
use crate::error::Result;

fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut q = 1;
    let mut n = n;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A Sylow p-subgroup, built by repeatedly extending a p-subgroup P by the
/// first p-element of N_G(P) outside P (canonical element order).
pub fn sylow_subgroup(g: &EnumeratedGroup, p: u64) -> Result<EnumeratedGroup> {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(EnumeratedGroup::trivial(g.degree()));
    }
    let first = (1..g.order())
        .find(|&i| g.element_order(i) == p)
        .expect("Cauchy: an element of order p exists");
    let mut gens = vec![g.element(first)];
    let mut sub = EnumeratedGroup::enumerate(&gens, g.order())?;
    while sub.order() < target {
        let n = normalizer(g, &sub);
        let next = (0..n.order())
            .find(|&i| is_p_power(n.element_order(i), p) && !sub.contains(&n.element(i)))
            .expect("a proper p-subgroup is proper in the p-part of its normalizer");
        gens.push(n.element(next));
        sub = EnumeratedGroup::enumerate(&gens, g.order())?;
    }
    debug_assert_eq!(sub.order(), target);
    Ok(sub)
}

/// {g ∈ G : g⁻¹sg ∈ H for every s in a small generating set of H}.
pub fn normalizer(g: &EnumeratedGroup, h: &EnumeratedGroup) -> EnumeratedGroup {
    let c = g.codec();
    let gens: Vec<Vec<u8>> = h.small_generating_set().iter().map(|s| s.bytes().to_vec()).collect();
    let mut inv = vec![0u8; c.bytes()];
    let mut scratch = vec![0u8; c.bytes()];
    let mut out = vec![0u8; c.bytes()];
    let mut keep = Vec::new();
    for x in 0..g.order() {
        let xb = g.element_bytes(x);
        c.inverse_into(xb, &mut inv);
        let normalizes = gens.iter().all(|s| {
            c.conjugate_into(s, xb, &inv, &mut scratch, &mut out);
            h.index_of_bytes(&out).is_some()
        });
        if normalizes {
            keep.push(x);
        }
    }
    g.subgroup_from_indices(&keep)
}

/// Subgroup generated by `gens` inside `g`.
pub fn subgroup(g: &EnumeratedGroup, gens: &[Permutation]) -> Result<EnumeratedGroup> {
    EnumeratedGroup::enumerate(gens, g.order().max(1))
}

/// All Sylow p-subgroups as ascending element-index sets of `g`, with the
/// conjugating element that produced each.
#[derive(Clone, Debug)]
pub struct SylowConjugates {
    pub prime: u64,
    pub sylow: EnumeratedGroup,
    pub normalizer: EnumeratedGroup,
    pub subgroups: Vec<Vec<usize>>,
    pub conjugators: Vec<usize>,
}

/// P^g for g over a right transversal of N_G(P).
pub fn sylow_conjugates(g: &EnumeratedGroup, p: u64) -> Result<SylowConjugates> {
    let sylow = sylow_subgroup(g, p)?;
    let norm = normalizer(g, &sylow);
    let c = g.codec();
    let mut covered = vec![false; g.order()];
    let mut buf = vec![0u8; c.bytes()];
    let mut inv = vec![0u8; c.bytes()];
    let mut scratch = vec![0u8; c.bytes()];
    let mut subgroups = Vec::new();
    let mut conjugators = Vec::new();
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        let xb = g.element_bytes(x);
        for n in 0..norm.order() {
            c.compose_into(norm.element_bytes(n), xb, &mut buf);
            covered[g.index_of_bytes(&buf).expect("closed")] = true;
        }
        c.inverse_into(xb, &mut inv);
        let mut members: Vec<usize> = (0..sylow.order())
            .map(|s| {
                c.conjugate_into(sylow.element_bytes(s), xb, &inv, &mut scratch, &mut buf);
                g.index_of_bytes(&buf).expect("closed")
            })
            .collect();
        members.sort_unstable();
        subgroups.push(members);
        conjugators.push(x);
    }
    Ok(SylowConjugates {
        prime: p,
        sylow,
        normalizer: norm,
        subgroups,
        conjugators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiWitness {
    /// Conjugating elements g₁, g₂ with P^g₁ ≠ P^g₂.
    pub first: Permutation,
    pub second: Permutation,
    pub intersection_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiReport {
    pub trivial_intersection: bool,
    pub sylow_count: usize,
    pub witness: Option<TiWitness>,
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// True iff distinct Sylow p-subgroups pairwise meet in the identity.
pub fn is_trivial_intersection(g: &EnumeratedGroup, p: u64) -> Result<TiReport> {
    let conj = sylow_conjugates(g, p)?;
    Ok(ti_from_conjugates(g, &conj))
}

pub fn ti_from_conjugates(g: &EnumeratedGroup, conj: &SylowConjugates) -> TiReport {
    let n = conj.subgroups.len();
    for a in 0..n {
        for b in a + 1..n {
            let k = intersection_size(&conj.subgroups[a], &conj.subgroups[b]);
            if k > 1 {
                return TiReport {
                    trivial_intersection: false,
                    sylow_count: n,
                    witness: Some(TiWitness {
                        first: g.element(conj.conjugators[a]),
                        second: g.element(conj.conjugators[b]),
                        intersection_order: k,
                    }),
                };
            }
        }
    }
    TiReport {
        trivial_intersection: true,
        sylow_count: n,
        witness: None,
    }
}

/// O_p(G): the intersection of all Sylow p-subgroups.
pub fn p_core(g: &EnumeratedGroup, p: u64) -> Result<EnumeratedGroup> {
    let conj = sylow_conjugates(g, p)?;
    Ok(p_core_from_conjugates(g, &conj))
}

pub fn p_core_from_conjugates(g: &EnumeratedGroup, conj: &SylowConjugates) -> EnumeratedGroup {
    let mut common = conj.subgroups[0].clone();
    for s in &conj.subgroups[1..] {
        common.retain(|x| s.binary_search(x).is_ok());
    }
    g.subgroup_from_indices(&common)
}
