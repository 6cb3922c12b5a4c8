//! Helpers shared by the integration tests: centre algebras of groups,
//! random commutative algebras with known radicals, and the radical and block
//! property suites.

#![allow(dead_code)]

use num_bigint::BigUint;
use rand::Rng;

use loewy::classdata::{ClassData, CoefficientTable};
use loewy::field::{Field, GaloisField, Matrix, PrimeField};
use loewy::group::{class_mult_table, ConjugacyClassSet, EnumeratedGroup};
use loewy::zalg::{
    annotate_blocks, center_algebra, component, component_loewy, decompose_blocks, loewy_chain, loewy_series, radical,
    SCAlgebra, Subspace,
};

pub fn class_data(g: &EnumeratedGroup) -> (ClassData, CoefficientTable) {
    let ccs = ConjugacyClassSet::compute(g);
    (ccs.to_class_data(g), class_mult_table(g, &ccs))
}

pub fn center(data: &ClassData, t: &CoefficientTable, p: u32) -> SCAlgebra<PrimeField> {
    center_algebra(PrimeField::new(p), data, t).unwrap()
}

/// Checks the radical returned by `radical` against its characterizations:
/// (a) x^d = 0 on a basis of J, (b) J·A ⊆ J, (c) x ↦ x^q injective on A/J,
/// (d) the Loewy chain strictly decreases to 0 with LL ≤ d, each term equal
/// to J times the previous one.
pub fn radical_suite<F: Field>(a: &SCAlgebra<F>) -> Result<(), String> {
    let d = a.dim();
    let j = radical(a).map_err(|e| e.to_string())?;
    let dbig = BigUint::from(d);
    for x in j.basis() {
        if !a.is_zero(&a.pow(x, &dbig)) {
            return Err("(a) radical basis element with x^d ≠ 0".into());
        }
    }
    let ja = a.product_space(&j, &a.whole()).map_err(|e| e.to_string())?;
    if !j.contains_subspace(&ja) {
        return Err("(b) J·A is not contained in J".into());
    }
    // a complement of J: standard basis vectors off the pivots of J
    let pivots = j.echelon().pivots().to_vec();
    let q = a.field().size();
    let mut images = loewy::field::Echelon::new(a.field().clone(), d);
    let mut count = 0;
    for i in (0..d).filter(|i| !pivots.contains(i)) {
        count += 1;
        images.insert(j.reduce(&a.pow(&a.basis_vector(i), &q)));
    }
    if images.dim() != count {
        return Err("(c) the q-power map is not injective on A/J".into());
    }
    let chain = loewy_chain(a).map_err(|e| e.to_string())?;
    let rep = loewy_series(a).map_err(|e| e.to_string())?;
    if chain[0].dim() != d || !chain.last().unwrap().is_zero() {
        return Err("(d) chain does not run from A to 0".into());
    }
    for w in chain.windows(2) {
        if w[1].dim() >= w[0].dim() && !w[0].is_zero() {
            return Err("(d) chain is not strictly decreasing".into());
        }
    }
    let mut power = j.clone();
    for (n, term) in chain.iter().enumerate().skip(1) {
        if !term.same_as(&power) {
            return Err(format!("(d) chain term {n} differs from J^{n}"));
        }
        power = a.product_space(&j, &power).map_err(|e| e.to_string())?;
    }
    if rep.loewy_length > d || rep.layers.len() != rep.loewy_length + 1 {
        return Err(format!("(d) LL {} out of range for dim {d}", rep.loewy_length));
    }
    Ok(())
}

/// Block decomposition over a field where every block splits: idempotents
/// orthogonal and summing to 1, each block local with one-dimensional top,
/// dims additive, one principal block with central character |C| mod p,
/// defect-zero blocks of dim 1 and LL 1.
pub fn block_suite<F: Field>(a: &SCAlgebra<F>, data: &ClassData) -> Result<usize, String> {
    let f = a.field();
    let p = f.characteristic() as u128;
    let mut dec = decompose_blocks(a).map_err(|e| e.to_string())?;
    annotate_blocks(a, &mut dec, data).map_err(|e| e.to_string())?;
    let j = radical(a).map_err(|e| e.to_string())?;
    let mut sum = a.zero_vector();
    let mut dims = 0;
    for (i, b) in dec.blocks.iter().enumerate() {
        let e = &b.idempotent;
        if a.mul(e, e) != *e || a.is_zero(e) {
            return Err(format!("block {i}: not a nonzero idempotent"));
        }
        for c in &dec.blocks[i + 1..] {
            if !a.is_zero(&a.mul(e, &c.idempotent)) {
                return Err(format!("block {i}: idempotents not orthogonal"));
            }
        }
        let (ae, je) = component(a, &j, e);
        if ae.dim() != b.dim {
            return Err(format!("block {i}: dim mismatch"));
        }
        // split and local: A·e = k·e ⊕ J·e
        if ae.dim() != je.dim() + 1 {
            return Err(format!("block {i}: not primitive over the splitting field"));
        }
        sum = a.add(&sum, e);
        dims += b.dim;
        if b.defect == Some(0) {
            let l = component_loewy(a, &j, e).map_err(|e| e.to_string())?;
            if b.dim != 1 || l.loewy_length != 1 {
                return Err(format!(
                    "block {i}: defect zero but dim {} LL {}",
                    b.dim, l.loewy_length
                ));
            }
        }
    }
    if sum != a.unit() {
        return Err("idempotents do not sum to 1".into());
    }
    if dims != a.dim() {
        return Err("block dims do not add up".into());
    }
    let principal: Vec<_> = dec.blocks.iter().filter(|b| b.is_principal).collect();
    if principal.len() != 1 {
        return Err(format!("{} principal blocks", principal.len()));
    }
    let e0 = &principal[0].idempotent;
    for (i, &size) in data.sizes.iter().enumerate() {
        let lam = f.from_int((size % p) as i64);
        let x = a.sub(&a.mul(&a.basis_vector(i), e0), &a.scale(&lam, e0));
        if !j.contains(&x) {
            return Err(format!("principal central character fails on class {}", data.labels[i]));
        }
    }
    Ok(dec
        .blocks
        .iter()
        .filter(|b| b.defect == Some(loewy::field::valuation(data.order, p as u64)))
        .count())
}

/// Splitting degree of the centre over GF(p).
pub fn splitting_degree(a: &SCAlgebra<PrimeField>) -> u32 {
    decompose_blocks(a).unwrap().splitting_degree() as u32
}

pub fn split_center(a: &SCAlgebra<PrimeField>) -> SCAlgebra<GaloisField> {
    let m = splitting_degree(a);
    a.base_change(GaloisField::new(a.field().characteristic(), m)).unwrap()
}

/// A local piece k[x, y]/(x^a, y^b) with monomial basis x^i y^j.
#[derive(Clone, Copy, Debug)]
pub struct Piece {
    pub a: usize,
    pub b: usize,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.a * self.b
    }

    /// Loewy layers: J^n is spanned by the monomials of total degree ≥ n.
    pub fn layers(&self) -> Vec<usize> {
        let top = self.a + self.b - 2;
        (0..=top + 1)
            .map(|n| {
                (0..self.a)
                    .flat_map(|i| (0..self.b).map(move |j| i + j))
                    .filter(|&deg| deg >= n)
                    .count()
            })
            .collect()
    }
}

/// Loewy layers of a direct sum of pieces, ending with the first zero.
pub fn expected_layers(pieces: &[Piece]) -> Vec<usize> {
    let ll = pieces.iter().map(|pc| pc.a + pc.b - 1).max().unwrap_or(0);
    let mut want = vec![0usize; ll + 1];
    for pc in pieces {
        for (n, l) in pc.layers().into_iter().enumerate() {
            want[n] += l;
        }
    }
    want
}

/// A random commutative algebra ⊕ k[x, y]/(x^a, y^b) of dimension ≤ max_dim,
/// written in a random basis. Returns the algebra and its pieces.
pub fn random_algebra<R: Rng>(rng: &mut R, p: u32, max_dim: usize) -> (SCAlgebra<PrimeField>, Vec<Piece>) {
    let f = PrimeField::new(p);
    let mut pieces = Vec::new();
    let mut dim = 0;
    loop {
        let piece = Piece {
            a: rng.gen_range(1..=3),
            b: rng.gen_range(1..=2),
        };
        if dim + piece.dim() > max_dim {
            break;
        }
        dim += piece.dim();
        pieces.push(piece);
        if rng.gen_bool(0.3) {
            break;
        }
    }
    if pieces.is_empty() {
        pieces.push(Piece { a: 1, b: 1 });
        dim = 1;
    }
    // structure constants in the monomial basis
    let mut offsets = Vec::new();
    let mut o = 0;
    for pc in &pieces {
        offsets.push(o);
        o += pc.dim();
    }
    let zero = f.zero();
    let mut c = vec![zero; dim * dim * dim];
    for (pc, &off) in pieces.iter().zip(&offsets) {
        let idx = |i: usize, j: usize| off + i * pc.b + j;
        for i1 in 0..pc.a {
            for j1 in 0..pc.b {
                for i2 in 0..pc.a {
                    for j2 in 0..pc.b {
                        if i1 + i2 < pc.a && j1 + j2 < pc.b {
                            c[(idx(i1, j1) * dim + idx(i2, j2)) * dim + idx(i1 + i2, j1 + j2)] = f.one();
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![f.zero(); dim];
    for &off in &offsets {
        unit[off] = f.one();
    }
    // random change of basis: new e'_i = Σ_a T[i][a] e_a
    let t = loop {
        let rows: Vec<Vec<u32>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let m = Matrix::from_rows(f, dim, rows);
        if m.rank() == dim {
            break m;
        }
    };
    let tinv = invert(&t);
    let mul_old = |x: &[u32], y: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; dim];
        for (a_, xa) in x.iter().enumerate() {
            for (b_, yb) in y.iter().enumerate() {
                if *xa == 0 || *yb == 0 {
                    continue;
                }
                let s = f.mul(xa, yb);
                for (k, ok) in out.iter_mut().enumerate() {
                    *ok = f.add(ok, &f.mul(&s, &c[(a_ * dim + b_) * dim + k]));
                }
            }
        }
        out
    };
    // coordinates in the new basis: v_old = Tᵀ v_new, so v_new = (Tᵀ)⁻¹ v_old
    let tinv_t = tinv.transpose();
    let to_new = |v: &[u32]| tinv_t.mul_vec(v);
    let mut consts = Vec::with_capacity(dim * dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            consts.extend(to_new(&mul_old(t.row(i), t.row(j))));
        }
    }
    let new_unit = to_new(&unit);
    let labels = (0..dim).map(|i| format!("b{i}")).collect();
    (SCAlgebra::new(f, dim, consts, new_unit, labels).unwrap(), pieces)
}

fn invert<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let n = m.rows();
    let f = m.field().clone();
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let (r, _) = Matrix::from_rows(f.clone(), 2 * n, rows).rref();
    Matrix::from_rows(f, n, (0..n).map(|i| r.row(i)[n..].to_vec()).collect())
}

/// Subspace equality by dimension and mutual containment.
pub fn same_span<F: Field>(x: &Subspace<F>, y: &Subspace<F>) -> bool {
    x.dim() == y.dim() && x.contains_subspace(y)
}
