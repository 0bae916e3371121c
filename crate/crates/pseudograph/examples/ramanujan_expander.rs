//! The PSL(2,q) expander family: generator enumeration from sums of four
//! squares, spectral-gap verification against the 2 sqrt(p) bound, and the
//! local cycle structure.
//!
//! Run with: cargo run --release --example ramanujan_expander

use pseudograph::construct::{lps, sum_of_four_squares_vectors};
use pseudograph::spectral::extremal_lambda;

fn main() {
    let (p, q) = (17u64, 13u64);
    let vectors = sum_of_four_squares_vectors(p);
    println!("integer vectors with a0 odd positive, rest even, norm {p}: {}", vectors.len());
    for v in vectors.iter().take(4) {
        println!("  {v:?}");
    }
    println!("  ...");

    let built = lps(p, q).unwrap();
    let g = &built.graph;
    println!("graph: n = {}, degree = {:?}, connected = {}", g.n(), g.regular_degree(), g.is_connected());

    let e = extremal_lambda(g, 1e-9).unwrap();
    let bound = 2.0 * (p as f64).sqrt();
    println!(
        "lambda = {:.8} vs 2 sqrt(p) = {bound:.8}  ({}; {} iterations, residual {:.2e})",
        e.lambda,
        if e.lambda <= bound { "within the optimal bound" } else { "ABOVE the bound" },
        e.iterations,
        e.residual
    );

    println!("girth = {:?}", g.girth());
    println!(
        "guaranteed girth floor 2 log_p q = {:.3} (small here because p > q; \
         the graph does carry triangles at these parameters)",
        2.0 * (q as f64).ln() / (p as f64).ln()
    );
    let mut triangles = 0u64;
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if u < w {
                triangles += g.common_neighbors(u, w).iter().filter(|&&z| z > w).count() as u64;
            }
        }
    }
    println!("exact triangle count: {triangles} (three per vertex)");
}
