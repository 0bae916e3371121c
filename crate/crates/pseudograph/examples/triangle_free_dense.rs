//! The dense triangle-free binary-Cayley family: exact closed-walk counts
//! certify triangle-freeness, and the odd-girth generalization is checked
//! implicitly on a million-vertex instance without materializing it.
//!
//! Run with: cargo run --release --example triangle_free_dense

use num_bigint::BigUint;
use pseudograph::construct::{alon_general, alon_triangle_free};
use pseudograph::spectral::{circuit_count, extremal_lambda};

fn main() {
    let built = alon_triangle_free(4).unwrap();
    let g = &built.graph;
    println!("k = 4: n = {}, degree = {:?}", g.n(), g.regular_degree());
    println!("closed walks of length 3: {}", circuit_count(g, 3).unwrap());
    assert_eq!(circuit_count(g, 3).unwrap(), BigUint::from(0u32));
    let e = extremal_lambda(g, 1e-8).unwrap();
    println!(
        "lambda = {:.4} (bound 9*2^k + 3*2^(k/2) + 1/4 = {:.2}; components: {})",
        e.lambda,
        9.0 * 16.0 + 3.0 * 4.0 + 0.25,
        g.components().len()
    );

    let g5 = alon_triangle_free(5).unwrap().graph;
    println!(
        "k = 5: n = {}, degree = {:?}, triangle-free: {}",
        g5.n(),
        g5.regular_degree(),
        !g5.has_triangle()
    );

    // h = 2 lives on 2^20 vertices; query it through the generator set
    let big = alon_general(4, 2).unwrap();
    println!(
        "k = 4, h = 2: 2^{} vertices, {} generators (implicit)",
        big.dimension,
        big.generators.len()
    );
    println!(
        "no odd cycle of length <= 5 (breadth-first search to depth 2): {}",
        big.no_short_odd_cycle(2)
    );
}
