//! Exact independence and chromatic numbers against the spectral bounds.
//! Paley graphs of square order attain both the independence ceiling
//! lambda n/(d + lambda) and the chromatic floor 1 + d/lambda exactly.
//!
//! Run with: cargo run --release --example independence_chromatic

use pseudograph::construct;
use pseudograph::oracle::{exact_alpha, exact_chi, greedy_coloring, greedy_independent, DEFAULT_NODE_BUDGET};
use pseudograph::spectral::full_spectrum;

fn main() {
    let built = construct::paley(25).unwrap();
    let g = &built.graph;
    let s = full_spectrum(g).unwrap();
    let d = g.regular_degree().unwrap() as f64;
    let (lambda, n) = (s.lambda(), g.n() as f64);

    let alpha = exact_alpha(g, DEFAULT_NODE_BUDGET);
    let (alpha_val, witness) = alpha.outcome.exact().unwrap();
    println!("paley(25): d = {d}, lambda = {lambda:.6}");
    println!(
        "independence number {alpha_val} vs ceiling lambda*n/(d+lambda) = {:.6}",
        lambda * n / (d + lambda)
    );
    println!("  witness independent set: {witness:?}");

    let chi = exact_chi(g, DEFAULT_NODE_BUDGET);
    let (chi_val, _) = chi.outcome.exact().unwrap();
    println!("chromatic number {chi_val} vs floor 1 + d/lambda = {:.6}", 1.0 + d / lambda);

    let greedy = greedy_independent(g, &(0..g.n()).collect::<Vec<_>>());
    let floor = n / (2.0 * (d - lambda)) * ((d - lambda) / (lambda + 1.0) + 1.0).ln();
    println!("greedy independent set size {} vs guaranteed floor {floor:.6}", greedy.len());

    let gc = greedy_coloring(g, d, lambda);
    let ceiling = 6.0 * (d - lambda) / ((d - lambda) / (lambda + 1.0) + 1.0).ln();
    println!(
        "two-phase greedy coloring used {} colors ({} extraction + {} residual) vs ceiling {:.3}",
        gc.color_count, gc.extraction_colors, gc.residual_colors, ceiling
    );
}
