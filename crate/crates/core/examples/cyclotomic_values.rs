//! Exact cyclotomic numbers as they appear in character tables.

use loewy::chartab::{parse_cyclotomic, Cyclotomic};

fn main() {
    let b5 = parse_cyclotomic("z(5)+z(5)^4").unwrap();
    let golden = &(&b5 * &b5) + &b5;
    println!("b5 = {b5}, b5^2 + b5 = {golden}");
    let i = Cyclotomic::zeta_pow(4, 1);
    let w = Cyclotomic::zeta_pow(3, 1);
    let s = &i + &w;
    println!("i + w = {s} (conductor {})", s.conductor());
    println!("conj = {}, galois(5) = {}", s.conj(), s.galois(5));
    println!("|i + w|^2 = {}", &s * &s.conj());
}
