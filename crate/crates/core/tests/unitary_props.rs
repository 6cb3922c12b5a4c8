//! The Hermitian unital, the unipotent radical and the unitary groups built
//! on it.

use loewy::field::Field;
use loewy::group::{EnumeratedGroup, Permutation};
use loewy::unitary::{
    extension_order, isotropic_points, psu3_generators, psu3_order, unitary_extension_generators, Mat3,
    UnitaryExtension,
};

fn orbit(gens: &[Permutation], start: usize) -> Vec<usize> {
    let n = gens[0].degree();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..n).filter(|&i| seen[i]).collect()
}

#[test]
fn isotropic_points_are_isotropic() {
    for q in 2..=5 {
        let geo = isotropic_points(q).unwrap();
        assert_eq!(geo.points.len() as u64, q * q * q + 1);
        for (i, x) in geo.points.iter().enumerate() {
            assert!(geo.field.is_zero(&geo.form(x, x)));
            assert_eq!(geo.point_index(x), Some(i));
            // the form is Hermitian: (x, y) = (y, x)^q
            let y = &geo.points[(i * 7 + 1) % geo.points.len()];
            assert_eq!(geo.form(x, y), geo.conj(&geo.form(y, x)));
        }
    }
}

#[test]
fn unipotent_radical_has_order_q_cubed() {
    for q in 2..=5u64 {
        let geo = isotropic_points(q).unwrap();
        let f = &geo.field;
        let elems: Vec<_> = (0..q * q).map(|n| f.nth_element(n)).collect();
        let (z, o) = (f.zero(), f.one());
        let mut count = 0;
        for a in &elems {
            for b in &elems {
                let u: Mat3 = [
                    [o.clone(), a.clone(), b.clone()],
                    [z.clone(), o.clone(), f.neg(&geo.conj(a))],
                    [z.clone(), z.clone(), o.clone()],
                ];
                let norm = f.mul(a, &geo.conj(a));
                let on_curve = f.is_zero(&f.add(&f.add(&norm, b), &geo.conj(b)));
                assert_eq!(geo.preserves_form(&u), on_curve, "q={q}");
                if on_curve {
                    count += 1;
                    // fixes the point (1:0:0)
                    let p = geo.permutation(&u).unwrap();
                    let fixed = geo.point_index(&[o.clone(), z.clone(), z.clone()]).unwrap();
                    assert_eq!(p.image(fixed), fixed);
                }
            }
        }
        assert_eq!(count, q * q * q);
    }
}

#[test]
fn psu3_orders_and_transitivity() {
    assert_eq!(psu3_order(3), 6048);
    assert_eq!(psu3_order(4), 62400);
    assert_eq!(psu3_order(5), 126000);
    for q in 2..=5u64 {
        let gens = psu3_generators(q).unwrap();
        let n = (q * q * q + 1) as usize;
        assert_eq!(gens[0].degree(), n);
        assert_eq!(orbit(&gens, 0).len(), n, "q={q}");
        let g = EnumeratedGroup::enumerate(&gens, 200_000).unwrap();
        assert_eq!(g.order() as u128, psu3_order(q), "q={q}");
    }
}

#[test]
fn extension_orders() {
    for q in [2u64, 3, 4] {
        for (diagonal, field) in [(true, false), (false, true), (true, true)] {
            let ext = UnitaryExtension { diagonal, field };
            let gens = unitary_extension_generators(q, ext).unwrap();
            let g = EnumeratedGroup::enumerate(&gens, 1_000_000).unwrap();
            assert_eq!(g.order() as u128, extension_order(q, ext), "q={q} {ext:?}");
        }
    }
}

#[test]
fn rejects_non_prime_powers() {
    assert!(isotropic_points(6).is_err());
    assert!(psu3_generators(10).is_err());
}
