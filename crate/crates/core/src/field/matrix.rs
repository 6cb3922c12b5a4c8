use std::fmt;

use super::{Field, Poly};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, cols: Vec<Vec<F::Elem>>) -> Self {
        Self::from_rows(field, rows, cols).transpose()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.mul_add(&out.data[idx], a, other.get(k, c));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.field.clone(), self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(pr, lead);
            let inv = f.inv(m.get(lead, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(lead, j), &inv);
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || f.is_zero(m.get(r, c)) {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for j in c..m.cols {
                    let t = f.mul(&factor, m.get(lead, j));
                    let v = f.sub(m.get(r, j), &t);
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : M x = 0}, as rows in reduced echelon form.
    pub fn kernel(&self) -> Self {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        let k = Self::from_rows(f.clone(), self.cols, basis);
        let (mut k, piv) = k.rref();
        k.rows = piv.len();
        k.data.truncate(k.rows * k.cols);
        k
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank and kernel basis of `m` in one call.
pub fn rref_kernel<F: Field>(m: &Matrix<F>) -> (usize, Matrix<F>) {
    (m.rank(), m.kernel())
}

/// Incrementally maintained reduced echelon basis of a subspace of F^n.
///
/// Rows are kept fully reduced and sorted by pivot column, so two `Echelon`s
/// spanning the same space compare equal.
#[derive(Clone, PartialEq)]
pub struct Echelon<F: Field> {
    field: F,
    n: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Echelon")
            .field("n", &self.n)
            .field("rows", &self.rows)
            .finish()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, n: usize) -> Self {
        Echelon {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<F::Elem>>>(field: F, n: usize, vs: I) -> Self {
        let mut e = Self::new(field, n);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff v is in the span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        let f = self.field.clone();
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]).unwrap();
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // clear the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.n, self.rows.clone())
    }
}

/// Least-degree monic f with f(op)·v = 0, found from the first linear
/// dependence among v, op(v), op²(v), …
///
/// `apply` may map into a quotient space (reduce its output), in which case
/// the result is the minimal polynomial of the induced operator.
pub fn minimal_polynomial<F: Field>(
    field: &F,
    v: &[F::Elem],
    mut apply: impl FnMut(&[F::Elem]) -> Vec<F::Elem>,
) -> Poly<F> {
    let f = field;
    let n = v.len();
    // rows: (reduced vector, pivot, combination of powers)
    let mut basis: Vec<(Vec<F::Elem>, usize, Vec<F::Elem>)> = Vec::new();
    let mut current = v.to_vec();
    for k in 0..=n {
        let mut w = current.clone();
        let mut comb = vec![f.zero(); k + 1];
        comb[k] = f.one();
        for (row, p, rc) in &basis {
            if f.is_zero(&w[*p]) {
                continue;
            }
            let c = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&c, r));
            }
            for (x, r) in comb.iter_mut().zip(rc) {
                *x = f.sub(x, &f.mul(&c, r));
            }
        }
        match w.iter().position(|x| !f.is_zero(x)) {
            None => return Poly::new(f.clone(), comb),
            Some(p) => {
                let inv = f.inv(&w[p]).unwrap();
                for x in w.iter_mut() {
                    *x = f.mul(x, &inv);
                }
                for x in comb.iter_mut() {
                    *x = f.mul(x, &inv);
                }
                basis.push((w, p, comb));
            }
        }
        current = apply(&current);
    }
    unreachable!("more than n+1 vectors in an n-dimensional space are dependent")
}
