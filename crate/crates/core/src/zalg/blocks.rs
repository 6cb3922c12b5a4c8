use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::algebra::{SCAlgebra, Subspace};
use super::radical::{component, radical};
use crate::classdata::ClassData;
use crate::error::{Error, Result};
use crate::field::{minimal_polynomial, valuation, Field, Poly};

#[derive(Clone, Debug)]
pub struct Block<F: Field> {
    pub idempotent: Vec<F::Elem>,
    /// A·e
    pub component: Subspace<F>,
    /// J(A)·e
    pub radical: Subspace<F>,
    pub dim: usize,
    /// Degree of the residue field of A·e over the base field.
    pub residue_degree: usize,
    pub defect: Option<u32>,
    pub is_principal: bool,
    /// λ(Ĉ_i) for each basis element, when the residue field is the base field.
    pub central_character: Option<Vec<F::Elem>>,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition<F: Field> {
    pub algebra_id: u64,
    pub radical: Subspace<F>,
    pub blocks: Vec<Block<F>>,
}

impl<F: Field> BlockDecomposition<F> {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn principal(&self) -> Option<&Block<F>> {
        self.blocks.iter().find(|b| b.is_principal)
    }

    pub fn is_split(&self) -> bool {
        self.blocks.iter().all(|b| b.residue_degree == 1)
    }

    /// Least common multiple of the residue degrees: the extension degree
    /// after which every block is split.
    pub fn splitting_degree(&self) -> usize {
        use num_integer::Integer;
        self.blocks.iter().fold(1, |m, b| m.lcm(&b.residue_degree))
    }
}

fn ceil_log2(n: usize) -> u32 {
    usize::BITS - n.saturating_sub(1).leading_zeros()
}

/// {x ∈ A·e : x^q − x ∈ J}. Its dimension minus dim J·e counts the fields
/// in the semisimple quotient of A·e.
fn fixed_space<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, ae: &Subspace<F>) -> Subspace<F> {
    let q = a.field().size();
    let basis = ae.basis();
    let images: Vec<Vec<F::Elem>> = basis.iter().map(|b| j.reduce(&a.sub(&a.pow(b, &q), b))).collect();
    let m = crate::field::Matrix::from_rows(a.field().clone(), a.dim(), images);
    let ker = m.transpose().kernel();
    a.span(ker.row_vecs().into_iter().map(|c| {
        let mut v = a.zero_vector();
        for (ci, b) in c.iter().zip(basis) {
            if !a.field().is_zero(ci) {
                v = a.add(&v, &a.scale(ci, b));
            }
        }
        v
    }))
}

/// Minimal polynomial of x in the quotient (A·e)/(J·e).
fn residue_minpoly<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, x: &[F::Elem], e: &[F::Elem]) -> Poly<F> {
    minimal_polynomial(a.field(), &j.reduce(e), |v| j.reduce(&a.mul(x, v)))
}

/// e ← 3e² − 2e³ until e² = e.
fn lift_idempotent<F: Field>(a: &SCAlgebra<F>, mut e: Vec<F::Elem>) -> Result<Vec<F::Elem>> {
    let f = a.field();
    let (three, two) = (f.from_int(3), f.from_int(2));
    let cap = (2 * ceil_log2(a.dim())).max(1);
    for _ in 0..=cap {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = a.sub(&a.scale(&three, &e2), &a.scale(&two, &e3));
    }
    Err(Error::Internal("idempotent lifting did not converge".into()))
}

/// An idempotent 0 ≠ ε ≠ e of A·e built from x, if the minimal polynomial of
/// x modulo J has two coprime factors.
fn split_by<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, x: &[F::Elem], e: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    let f = residue_minpoly(a, j, x, e);
    let factors = f.factor();
    if factors.len() < 2 {
        return Ok(None);
    }
    let field = a.field().clone();
    let g1 = Poly::product_of(field, &factors[..1]);
    let g2 = f.div_exact(&g1);
    let (g, s, _) = g1.ext_gcd(&g2);
    if !g.is_one() {
        return Err(Error::Internal("coprime factors with nontrivial gcd".into()));
    }
    // s·g1 ≡ 0 mod g1 and ≡ 1 mod g2
    let approx = a.eval_poly(&s.mul(&g1), x, e);
    let eps = lift_idempotent(a, approx)?;
    if a.is_zero(&eps) || eps == e {
        return Err(Error::Internal("splitting produced a trivial idempotent".into()));
    }
    Ok(Some(eps))
}

/// Candidate splitting elements of A·e: basis elements, then pairwise
/// products, then pairwise sums, each multiplied by e.
fn candidates<'a, F: Field>(a: &'a SCAlgebra<F>, e: &'a [F::Elem]) -> impl Iterator<Item = Vec<F::Elem>> + 'a {
    let d = a.dim();
    let basis = (0..d).map(move |i| a.mul(&a.basis_vector(i), e));
    let products =
        (0..d).flat_map(move |i| (i..d).map(move |k| a.mul(&a.mul(&a.basis_vector(i), &a.basis_vector(k)), e)));
    let sums =
        (0..d).flat_map(move |i| (i + 1..d).map(move |k| a.mul(&a.add(&a.basis_vector(i), &a.basis_vector(k)), e)));
    basis.chain(products).chain(sums)
}

/// Primitive idempotents of a commutative algebra, with their components.
pub fn decompose_blocks<F: Field>(a: &SCAlgebra<F>) -> Result<BlockDecomposition<F>> {
    if !a.is_commutative() {
        return Err(Error::Algebra("block decomposition needs a commutative algebra".into()));
    }
    let j = radical(a)?;
    let mut queue = VecDeque::from([a.unit().to_vec()]);
    let mut blocks = Vec::new();
    while let Some(e) = queue.pop_front() {
        let (ae, je) = component(a, &j, &e);
        let fixed = fixed_space(a, &j, &ae);
        let fields = fixed.dim() - je.dim();
        if fields == 0 {
            return Err(Error::Internal("component with zero semisimple quotient".into()));
        }
        if fields == 1 {
            blocks.push(Block {
                dim: ae.dim(),
                residue_degree: ae.dim() - je.dim(),
                idempotent: e,
                component: ae,
                radical: je,
                defect: None,
                is_principal: false,
                central_character: None,
            });
            continue;
        }
        let trivial = je.sum(&a.span([e.clone()]))?;
        let mut split = None;
        for x in candidates(a, &e) {
            if trivial.contains(&x) {
                continue;
            }
            if let Some(eps) = split_by(a, &j, &x, &e)? {
                split = Some(eps);
                break;
            }
        }
        if split.is_none() {
            // an element fixed by Frobenius modulo J but not a scalar has a
            // product of distinct linear factors as minimal polynomial
            for x in fixed.basis() {
                if !trivial.contains(x) {
                    split = split_by(a, &j, x, &e)?;
                    break;
                }
            }
        }
        let eps = split.ok_or_else(|| Error::Internal("no splitting element found".into()))?;
        let rest = a.sub(&e, &eps);
        queue.push_back(eps);
        queue.push_back(rest);
    }
    blocks.sort_by(|x, y| y.dim.cmp(&x.dim).then_with(|| x.idempotent.cmp(&y.idempotent)));
    let dec = BlockDecomposition {
        algebra_id: a.id(),
        radical: j,
        blocks,
    };
    verify_decomposition(a, &dec)?;
    Ok(dec)
}

/// Orthogonality, Σe = 1, dimensions add up.
pub fn verify_decomposition<F: Field>(a: &SCAlgebra<F>, d: &BlockDecomposition<F>) -> Result<()> {
    let bad = |m: &str| Err(Error::InconsistentDecomposition(m.into()));
    let mut sum = a.zero_vector();
    let mut dims = 0;
    for (i, b) in d.blocks.iter().enumerate() {
        if a.is_zero(&b.idempotent) || a.mul(&b.idempotent, &b.idempotent) != b.idempotent {
            return bad("block idempotent is zero or not idempotent");
        }
        for c in &d.blocks[i + 1..] {
            if !a.is_zero(&a.mul(&b.idempotent, &c.idempotent)) {
                return bad("block idempotents are not orthogonal");
            }
        }
        sum = a.add(&sum, &b.idempotent);
        dims += b.dim;
    }
    if sum != a.unit() {
        return bad("block idempotents do not sum to 1");
    }
    if dims != a.dim() {
        return bad("block dimensions do not add up to the algebra dimension");
    }
    Ok(())
}

/// λ(b_i) for every basis element b_i: the scalar c with b_i·e − c·e ∈ J.
pub fn block_central_character<F: Field>(a: &SCAlgebra<F>, j: &Subspace<F>, block: &Block<F>) -> Result<Vec<F::Elem>> {
    if block.residue_degree != 1 {
        return Err(Error::NonSplit {
            degree: block.residue_degree,
        });
    }
    let f = a.field();
    let re = j.reduce(&block.idempotent);
    let piv = re
        .iter()
        .position(|c| !f.is_zero(c))
        .expect("idempotent outside the radical");
    let inv = f.inv(&re[piv]).unwrap();
    (0..a.dim())
        .map(|i| {
            let r = j.reduce(&a.mul(&a.basis_vector(i), &block.idempotent));
            let c = f.mul(&r[piv], &inv);
            if r != a.scale(&c, &re) {
                return Err(Error::NonSplit {
                    degree: block.residue_degree,
                });
            }
            Ok(c)
        })
        .collect()
}

/// max ν_p(|C_G(g_i)|) over the classes in the support of the block
/// idempotent. Every such class has defect group inside a defect group of the
/// block, and some class attains it.
pub fn block_defect<F: Field>(a: &SCAlgebra<F>, block: &Block<F>, classes: &ClassData) -> u32 {
    let p = a.field().characteristic() as u64;
    (0..a.dim())
        .filter(|&i| !a.field().is_zero(&block.idempotent[i]))
        .map(|i| valuation(classes.centralizer_order(i), p))
        .max()
        .unwrap_or(0)
}

/// Marks and returns the unique block with λ(Ĉ_i) = |C_i| mod p.
pub fn principal_block<F: Field>(a: &SCAlgebra<F>, d: &mut BlockDecomposition<F>, sizes: &[u128]) -> Result<usize> {
    let p = a.field().characteristic() as u128;
    let j = &d.radical;
    let matches: Vec<usize> = d
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| {
            (0..a.dim()).all(|i| {
                let lam = a.field().from_int((sizes[i] % p) as i64);
                let v = a.sub(&a.mul(&a.basis_vector(i), &b.idempotent), &a.scale(&lam, &b.idempotent));
                j.contains(&v)
            })
        })
        .map(|(i, _)| i)
        .collect();
    if matches.len() != 1 {
        return Err(Error::InconsistentDecomposition(format!(
            "{} blocks have the augmentation character as central character",
            matches.len()
        )));
    }
    for (i, b) in d.blocks.iter_mut().enumerate() {
        b.is_principal = i == matches[0];
    }
    Ok(matches[0])
}

/// Central characters (where split), defects and the principal block; blocks
/// are reordered principal first, then by decreasing dimension.
pub fn annotate_blocks<F: Field>(a: &SCAlgebra<F>, d: &mut BlockDecomposition<F>, classes: &ClassData) -> Result<()> {
    if d.algebra_id != a.id() {
        return Err(Error::AmbientMismatch);
    }
    principal_block(a, d, &classes.sizes)?;
    let j = d.radical.clone();
    for b in &mut d.blocks {
        b.defect = Some(block_defect(a, b, classes));
        b.central_character = block_central_character(a, &j, b).ok();
    }
    d.blocks.sort_by(|x, y| {
        y.is_principal
            .cmp(&x.is_principal)
            .then_with(|| y.dim.cmp(&x.dim))
            .then_with(|| x.idempotent.cmp(&y.idempotent))
    });
    Ok(())
}

/// Number of blocks of full defect against the number of p-regular classes
/// whose centralizer has full p-valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullDefectCount {
    pub full_defect_blocks: usize,
    pub full_defect_regular_classes: usize,
    pub equal: bool,
}

pub fn full_defect_count_check<F: Field>(d: &BlockDecomposition<F>, classes: &ClassData, p: u64) -> FullDefectCount {
    let full = valuation(classes.order, p);
    let blocks = d.blocks.iter().filter(|b| b.defect == Some(full)).count();
    let regular = (0..classes.num_classes())
        .filter(|&i| classes.is_p_regular(i, p) && classes.centralizer_valuation(i, p) == full)
        .count();
    FullDefectCount {
        full_defect_blocks: blocks,
        full_defect_regular_classes: regular,
        equal: blocks == regular,
    }
}

/// {Ĉ − (|C| mod p)·1 : C not the identity class}.
pub fn augmentation_generators<F: Field>(a: &SCAlgebra<F>, sizes: &[u128]) -> Vec<Vec<F::Elem>> {
    let p = a.field().characteristic() as u128;
    (1..a.dim())
        .map(|i| {
            let lam = a.field().from_int((sizes[i] % p) as i64);
            a.sub(&a.basis_vector(i), &a.scale(&lam, a.unit()))
        })
        .collect()
}

/// The radical of the centre of a group algebra that is a single split block,
/// as the span of the augmentation generators; checked against `radical`.
pub fn radical_basis_single_block<F: Field>(a: &SCAlgebra<F>, sizes: &[u128]) -> Result<Subspace<F>> {
    let span = a.span(augmentation_generators(a, sizes));
    let j = radical(a)?;
    if !span.same_as(&j) {
        return Err(Error::NotSingleBlock(format!(
            "augmentation span has dimension {} but the radical has dimension {}",
            span.dim(),
            j.dim()
        )));
    }
    Ok(span)
}
