//! Field axioms, Frobenius, linear algebra and polynomial factorization.

use num_bigint::BigUint;
use proptest::prelude::*;

use loewy::field::{Field, GaloisField, Matrix, Poly, PrimeField};

const FIELDS: [(u32, u32); 7] = [(2, 1), (3, 1), (5, 1), (11, 1), (2, 3), (3, 2), (5, 2)];

fn check_axioms<F: Field>(f: &F, a: u64, b: u64, c: u64) -> Result<(), TestCaseError> {
    let (x, y, z) = (f.nth_element(a), f.nth_element(b), f.nth_element(c));
    prop_assert_eq!(f.add(&x, &y), f.add(&y, &x));
    prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
    prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
    prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
    prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
    prop_assert_eq!(f.add(&x, &f.zero()), x.clone());
    prop_assert_eq!(f.mul(&x, &f.one()), x.clone());
    prop_assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
    prop_assert_eq!(f.sub(&x, &y), f.add(&x, &f.neg(&y)));
    match f.inv(&x) {
        Some(i) => prop_assert!(f.is_one(&f.mul(&x, &i))),
        None => prop_assert!(f.is_zero(&x)),
    }
    // Frobenius is additive and multiplicative, and x^q = x
    prop_assert_eq!(f.frobenius(&f.add(&x, &y)), f.add(&f.frobenius(&x), &f.frobenius(&y)));
    prop_assert_eq!(f.frobenius(&f.mul(&x, &y)), f.mul(&f.frobenius(&x), &f.frobenius(&y)));
    prop_assert_eq!(f.frobenius(&x), f.pow(&x, f.characteristic() as u64));
    prop_assert_eq!(f.pow_big(&x, &f.size()), x.clone());
    prop_assert_eq!(f.frobenius(&f.pth_root(&x)), x);
    Ok(())
}

fn field_and_elements() -> impl Strategy<Value = ((u32, u32), u64, u64, u64)> {
    proptest::sample::select(FIELDS.to_vec()).prop_flat_map(|(p, m)| {
        let q = (p as u64).pow(m);
        (Just((p, m)), 0..q, 0..q, 0..q)
    })
}

proptest! {
    #[test]
    fn field_axioms(((p, m), a, b, c) in field_and_elements()) {
        if m == 1 {
            check_axioms(&PrimeField::new(p), a, b, c)?;
        } else {
            check_axioms(&GaloisField::new(p, m), a, b, c)?;
        }
    }

    #[test]
    fn elements_are_distinct(idx in 0usize..FIELDS.len()) {
        let (p, m) = FIELDS[idx];
        let f = GaloisField::new(p, m);
        let q = f.size_u64().unwrap();
        let all: std::collections::HashSet<_> = (0..q).map(|n| f.nth_element(n)).collect();
        prop_assert_eq!(all.len() as u64, q);
    }

    #[test]
    fn rref_and_kernel(p in proptest::sample::select(vec![2u32, 3, 5, 7]),
                       rows in 1usize..6, cols in 1usize..7,
                       seed in proptest::collection::vec(0u32..1000, 42)) {
        let f = PrimeField::new(p);
        let entries: Vec<Vec<u32>> =
            (0..rows).map(|r| (0..cols).map(|c| seed[r * 7 + c] % p).collect()).collect();
        let m = Matrix::from_rows(f, cols, entries);
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&pivots, &pivots2);
        prop_assert_eq!(r.row_vecs(), r2.row_vecs());
        let k = m.kernel();
        prop_assert_eq!(k.rows() + pivots.len(), cols);
        for v in k.row_vecs() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == 0));
        }
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn factorization(p in proptest::sample::select(vec![2u32, 3, 5]),
                     coeffs in proptest::collection::vec(0u32..5, 2..9)) {
        let f = PrimeField::new(p);
        let mut c: Vec<u32> = coeffs.iter().map(|x| x % p).collect();
        *c.last_mut().unwrap() = 1;
        let poly = Poly::new(f, c);
        prop_assume!(poly.degree().unwrap_or(0) >= 1);
        let factors = poly.factor();
        prop_assert_eq!(Poly::product_of(f, &factors), poly.monic());
        let x = Poly::x(f);
        for (g, _) in &factors {
            let d = g.degree().unwrap();
            prop_assert!(d >= 1);
            prop_assert!(g.is_irreducible());
            // no roots in any GF(p^e) with e < d: gcd(g, x^{p^e} - x) = 1
            for e in 1..d {
                let xq = x.pow_mod(&BigUint::from(p).pow(e as u32), g);
                prop_assert!(g.gcd(&xq.sub(&x)).is_one());
            }
        }
    }
}

#[test]
fn galois_field_sizes() {
    for (p, m) in FIELDS {
        let f = GaloisField::new(p, m);
        assert_eq!(f.size_u64(), Some((p as u64).pow(m)));
        assert_eq!(
            f.name(),
            if m == 1 {
                format!("GF({p})")
            } else {
                format!("GF({p}^{m})")
            }
        );
    }
}
