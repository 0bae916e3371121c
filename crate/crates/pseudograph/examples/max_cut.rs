//! Exact maximum cuts against the spectral ceiling m/2 - lambda_min n/4.
//! The bound is tight for complete graphs and bipartite graphs.
//!
//! Run with: cargo run --release --example max_cut

use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::oracle::exact_maxcut;
use pseudograph::spectral::full_spectrum;

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("complete(4)", Graph::complete(4)),
        ("cycle(5)", Graph::cycle(5)),
        ("k(3,3)", Graph::complete_bipartite(3, 3)),
        ("petersen", Graph::petersen()),
        ("paley(13)", construct::paley(13).unwrap().graph),
        ("paley(17)", construct::paley(17).unwrap().graph),
    ];
    println!("{:<12} {:>4} {:>6} {:>10} {:>12} {:>10}", "graph", "n", "m", "max cut", "ceiling", "slack");
    for (name, g) in graphs {
        let s = full_spectrum(&g).unwrap();
        let (cut, _) = exact_maxcut(&g);
        let bound = g.m() as f64 / 2.0 - s.lambda_min() * g.n() as f64 / 4.0;
        println!(
            "{:<12} {:>4} {:>6} {:>10} {:>12.6} {:>10.6}",
            name,
            g.n(),
            g.m(),
            cut,
            bound,
            bound - cut as f64
        );
    }
}
