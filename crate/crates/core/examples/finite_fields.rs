//! Arithmetic in GF(p^m) and factorization of polynomials over GF(p).

use loewy::field::{irreducible_polynomial, Field, GaloisField, Poly, PrimeField};

fn main() {
    let f = GaloisField::new(3, 2);
    println!("{} with modulus {:?}", f.name(), f.modulus().coeffs());
    let x = f.nth_element(4);
    let y = f.inv(&x).unwrap();
    println!("x = {x:?}, 1/x = {y:?}, x^q = x: {}", f.pow(&x, 9) == x);
    println!("frobenius(x) = {:?}", f.frobenius(&x));

    let gf2 = PrimeField::new(2);
    // x^8 - x over GF(2): the product of the irreducibles of degree 1 and 3
    let mut c = vec![0u32; 9];
    c[1] = 1;
    c[8] = 1;
    let p = Poly::new(gf2, c);
    for (g, k) in p.factor() {
        println!("  factor {:?} ^ {k}", g.coeffs());
    }
    for m in 1..=4 {
        println!(
            "irreducible of degree {m} over GF(5): {:?}",
            irreducible_polynomial(5, m).coeffs()
        );
    }
}
