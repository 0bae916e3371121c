//! Exact finite-field arithmetic underneath the algebraic constructions:
//! canonical irreducible moduli, the quadratic character, the norm map, and
//! abelian-group characters.
//!
//! Run with: cargo run --release --example finite_fields

use pseudograph::field::{character_value, FiniteField};

fn main() {
    for (p, k) in [(13u64, 1usize), (2, 4), (3, 2), (5, 2)] {
        let f = FiniteField::new(p, k, None).unwrap();
        println!("GF({}) = GF({p}^{k}), modulus coefficients {:?}", f.order(), f.modulus());
    }

    let f13 = FiniteField::new(13, 1, None).unwrap();
    let squares: Vec<u64> = (0..13)
        .filter(|&i| f13.quadratic_character(&f13.element(i)).unwrap() == 1)
        .collect();
    println!("nonzero squares mod 13: {squares:?}");
    let sum: i64 = (0..13).map(|i| f13.quadratic_character(&f13.element(i)).unwrap() as i64).sum();
    println!("character sum over the field: {sum}");

    let f9 = FiniteField::new(3, 2, None).unwrap();
    println!("norm map GF(9) -> GF(3):");
    for i in 0..9 {
        let x = f9.element(i);
        print!("  N({i}) = {}", f9.norm_to_prime_field(&x));
    }
    println!();

    let v = character_value(&[4], &[1], &[2]).unwrap();
    println!("character of Z4 with index 1 at element 2: {:.1} + {:.1}i", v.re, v.im);
}
