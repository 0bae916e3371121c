//! Hamiltonicity conditions: the spectral sufficient condition, the exact
//! connectivity-vs-independence test, and search confirmation.
//!
//! Run with: cargo run --release --example hamiltonicity

use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::oracle::{exact_alpha, hamilton_search, HamiltonResult, OracleOutcome, DEFAULT_NODE_BUDGET};
use pseudograph::spectral::full_spectrum;

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("cycle(5)", Graph::cycle(5)),
        ("petersen", Graph::petersen()),
        ("paley(13)", construct::paley(13).unwrap().graph),
        ("inner_product(5)", construct::inner_product_graph(5).unwrap().graph),
    ];
    for (name, g) in graphs {
        let s = full_spectrum(&g).unwrap();
        let d = g.regular_degree().unwrap() as f64;
        let (lambda, n) = (s.lambda(), g.n() as f64);
        let spectral_ok = d - 36.0 * lambda * lambda / d >= lambda * n / (d + lambda);
        let kappa = g.vertex_connectivity();
        let alpha = exact_alpha(&g, DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0;
        let search = hamilton_search(&g, DEFAULT_NODE_BUDGET);
        let found = matches!(search.outcome, OracleOutcome::Exact(HamiltonResult::Found(_)));
        println!("{name}:");
        println!("  spectral sufficient condition met: {spectral_ok}");
        println!(
            "  kappa = {kappa}, alpha = {alpha}: condition {}",
            if kappa >= alpha { "met -> Hamiltonian" } else { "not met (inconclusive)" }
        );
        println!("  search: {}", if found { "Hamilton cycle found" } else { "no Hamilton cycle" });
    }
}
